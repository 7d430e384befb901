"""Buchberger's algorithm, multivariate division and lex elimination."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import WorkbenchError
from .poly import (
    Polynomial,
    Ring,
    Term,
    format_poly,
    integer_normalize,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)


class GroebnerError(WorkbenchError):
    pass


@dataclass(frozen=True)
class Ideal:
    """Ideal given by generators; zero generators are dropped on construction."""

    ring: Ring
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.ring != self.ring:
                raise GroebnerError(f"generator {g} does not belong to ring {self.ring.names}")
        gens = tuple(g for g in gens if not g.is_zero())
        if not gens:
            raise GroebnerError("an ideal needs at least one nonzero generator")
        object.__setattr__(self, "generators", gens)

    @cached_property
    def basis(self) -> "GroebnerBasis":
        """Reduced lex Groebner basis, computed once per ideal."""
        return reduce_basis(buchberger(self))

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_contains(f, self)

    def __str__(self):
        return ", ".join(format_poly(g) for g in self.generators)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    elements: tuple
    reduced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if any(g.is_zero() for g in self.elements):
            raise GroebnerError("basis elements must be nonzero")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def lead_monomials(self) -> list:
        return [g.lead_monomial() for g in self.elements]

    def format(self) -> str:
        return format_basis(self)


def _check_same_ring(polys):
    rings = {p.ring for p in polys}
    if len(rings) > 1:
        raise GroebnerError("polynomials belong to different rings")


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial (lcm/lt(f))*f - (lcm/lt(g))*g."""
    if f.is_zero() or g.is_zero():
        raise GroebnerError("S-polynomial of a zero polynomial")
    _check_same_ring((f, g))
    (cf, mf), (cg, mg) = f.lead_term(), g.lead_term()
    m = monomial_lcm(mf, mg)
    a = f.mul_term(1 / cf, monomial_quotient(m, mf))
    b = g.mul_term(1 / cg, monomial_quotient(m, mg))
    return a - b


def _neg(m):
    return tuple(-e for e in m)


def normal_form(f: Polynomial, divisors: Sequence[Polynomial]):
    """Divide f by ``divisors``; return (remainder, quotients).

    The first divisor (in sequence order) whose lead monomial divides the
    current lead term is used.  Terms that no lead monomial divides move to
    the remainder, so the remainder is fully reduced.
    """
    divisors = list(divisors)
    if not divisors:
        raise GroebnerError("normal form needs at least one divisor")
    if any(g.is_zero() for g in divisors):
        raise GroebnerError("divisors must be nonzero")
    _check_same_ring([f, *divisors])
    ring = f.ring
    leads = [g.lead_term() for g in divisors]
    tails = [g.terms[1:] for g in divisors]
    quotients = [{} for _ in divisors]

    # working polynomial as a coefficient map plus a max-heap of monomials
    work = {m: c for c, m in f.terms}
    heap = [_neg(m) for m in work]
    heapq.heapify(heap)
    remainder = []
    while heap:
        m = _neg(heapq.heappop(heap))
        c = work.pop(m, None)
        if c is None:
            continue
        for i, (lc, lm) in enumerate(leads):
            if all(a <= b for a, b in zip(lm, m)):
                q = c / lc
                qm = tuple(a - b for a, b in zip(m, lm))
                qi = quotients[i]
                qi[qm] = qi.get(qm, 0) + q
                for gc, gm in tails[i]:
                    nm = tuple(a + b for a, b in zip(gm, qm))
                    old = work.get(nm)
                    if old is None:
                        work[nm] = -q * gc
                        heapq.heappush(heap, _neg(nm))
                    else:
                        nc = old - q * gc
                        if nc:
                            work[nm] = nc
                        else:
                            del work[nm]
                break
        else:
            remainder.append(Term(c, m))
    return (
        Polynomial(ring, remainder),
        [Polynomial.from_dict(ring, q) for q in quotients],
    )


def reduce(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    return normal_form(f, divisors)[0]


def _coprime(a, b) -> bool:
    return all(not (i and j) for i, j in zip(a, b))


def buchberger(ideal: Ideal, trace: list | None = None) -> GroebnerBasis:
    """Complete the generators of ``ideal`` to a Groebner basis.

    Normal selection strategy (smallest lcm of lead monomials first, ties by
    index pair) with Buchberger's product criterion.  When ``trace`` is a
    list, every processed pair is appended as ``(i, j, added_index_or_None)``.
    """
    if not isinstance(ideal, Ideal):
        raise GroebnerError("buchberger expects an Ideal")
    basis = [g.monic() for g in ideal.generators]
    leads = [g.lead_monomial() for g in basis]
    pairs = []

    def add_pairs(j):
        for i in range(j):
            heapq.heappush(pairs, (monomial_lcm(leads[i], leads[j]), i, j))

    for j in range(1, len(basis)):
        add_pairs(j)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        if _coprime(leads[i], leads[j]):
            if trace is not None:
                trace.append((i, j, None))
            continue
        r = reduce(spoly(basis[i], basis[j]), basis)
        added = None
        if r.terms:
            basis.append(r.monic())
            leads.append(r.lead_monomial())
            added = len(basis) - 1
            add_pairs(added)
        if trace is not None:
            trace.append((i, j, added))
    return GroebnerBasis(ideal.ring, basis, reduced=False)


def is_groebner_basis(elements: Sequence[Polynomial]) -> bool:
    """S-polynomial criterion over all pairs."""
    elements = list(elements)
    for j in range(len(elements)):
        for i in range(j):
            if _coprime(elements[i].lead_monomial(), elements[j].lead_monomial()):
                continue
            if reduce(spoly(elements[i], elements[j]), elements).terms:
                return False
    return True


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """Minimal, interreduced, monic basis sorted by ascending lead monomial."""
    elements = list(basis.elements)
    if not elements:
        raise GroebnerError("empty basis")
    if not basis.reduced and not is_groebner_basis(elements):
        raise GroebnerError("input is not a Groebner basis")
    minimal = []
    for g in sorted(elements, key=lambda p: p.lead_monomial()):
        lm = g.lead_monomial()
        if not any(monomial_divides(h.lead_monomial(), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        r = reduce(g, others) if others else g
        reduced.append(r.monic())
    reduced.sort(key=lambda p: p.lead_monomial())
    return GroebnerBasis(basis.ring, reduced, reduced=True)


def groebner(ideal: Ideal) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal``."""
    return ideal.basis


def _variable_indices(ring: Ring, variables) -> list:
    out = []
    for v in variables:
        if isinstance(v, str):
            out.append(ring.index(v))
        elif isinstance(v, int) and 0 <= v < ring.arity:
            out.append(v)
        else:
            raise GroebnerError(f"bad variable {v!r}")
    return out


def eliminate(basis: GroebnerBasis, keep) -> list:
    """Elements of a lex basis involving only the variables in ``keep``.

    ``keep`` must be a suffix of the declared variables (names or indices),
    since lex order eliminates the leading ones.
    """
    ring = basis.ring
    idx = set(_variable_indices(ring, keep))
    n = ring.arity
    if idx != set(range(n - len(idx), n)):
        raise GroebnerError(
            f"variables to keep {sorted(ring.names[i] for i in idx)} are not a suffix of {ring.names}"
        )
    return [g for g in basis.elements if g.support() <= idx]


def ideal_contains(f: Polynomial, ideal: Ideal) -> bool:
    if f.ring != ideal.ring:
        raise GroebnerError("ring mismatch in ideal membership test")
    return reduce(f, ideal.basis.elements).is_zero()


def format_basis(basis: GroebnerBasis) -> str:
    """One ``_[k]=poly`` line per element, integer-normalized."""
    return "\n".join(
        f"_[{k}]={format_poly(integer_normalize(g))}" for k, g in enumerate(basis.elements, 1)
    )
