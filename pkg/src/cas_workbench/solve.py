"""Certified real solutions: Sturm counting, bisection and box back-substitution.

Everything is exact rational arithmetic.  A univariate root is isolated in
an interval whose Sturm count is 1; the remaining coordinates of a
triangular system are enclosed by interval evaluation of the linear basis
members, so each returned box holds exactly one real solution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import WorkbenchError
from .groebner import Ideal
from .interval import Box, Interval, eval_on_box
from .poly import (
    Polynomial,
    squarefree_part,
    univariate_coefficients,
    univariate_divmod,
    univariate_variable,
)

DEFAULT_WIDTH = Fraction(1, 1024)
MAX_REFINEMENTS = 10_000


class SolveError(WorkbenchError):
    pass


def _horner_value(coeffs, x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return v


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a squarefree univariate polynomial.

    ``chain[0]`` is the squarefree part of the input, ``chain[1]`` its
    derivative, then negated remainders down to a nonzero constant.
    """

    chain: tuple
    var: int | None
    dense: tuple

    @property
    def head(self) -> Polynomial:
        return self.chain[0]

    def head_value(self, x) -> Fraction:
        return _horner_value(self.dense[0], Fraction(x))

    def variations(self, x) -> int:
        x = Fraction(x)
        count = 0
        last = 0
        for coeffs in self.dense:
            s = _sign(_horner_value(coeffs, x))
            if s:
                if last and s != last:
                    count += 1
                last = s
        return count

    def __len__(self):
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)


def sturm_chain(p: Polynomial) -> SturmChain:
    if p.is_zero():
        raise SolveError("Sturm chain of the zero polynomial")
    var = univariate_variable(p)
    head = squarefree_part(p)
    if var is None:
        return SturmChain((head,), None, ((Fraction(1),),))
    chain = [head, head.derivative(var)]
    while not chain[-1].is_constant():
        _, r = univariate_divmod(chain[-2], chain[-1])
        chain.append(-r)
    # squarefree head guarantees the last element is a nonzero constant
    dense = tuple(tuple(univariate_coefficients(q, var)) for q in chain)
    return SturmChain(tuple(chain), var, dense)


def count_roots(chain: SturmChain, iv: Interval) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    if chain.var is None:
        return 0
    return chain.variations(iv.lo) - chain.variations(iv.hi)


def cauchy_bound(p: Polynomial) -> Fraction:
    """1 + max |a_i / a_n|; every complex root lies strictly inside."""
    var = univariate_variable(p)
    if var is None:
        return Fraction(1)
    coeffs = univariate_coefficients(p, var)
    lead = coeffs[-1]
    return 1 + max((abs(c / lead) for c in coeffs[:-1]), default=Fraction(0))


def _split_point(chain: SturmChain, lo: Fraction, hi: Fraction) -> Fraction:
    """Midpoint, or the one-third point (and further fallbacks) if that is a root."""
    for t in (Fraction(1, 2), Fraction(1, 3)):
        m = lo + (hi - lo) * t
        if chain.head_value(m):
            return m
    k = 2
    while True:
        m = lo + (hi - lo) * Fraction(k, 2 * k + 1)
        if chain.head_value(m):
            return m
        k += 1


def _bisect_once(chain: SturmChain, iv: Interval) -> Interval:
    """Halve an interval holding one root, keeping the half with the root."""
    m = _split_point(chain, iv.lo, iv.hi)
    left = Interval(iv.lo, m)
    if count_roots(chain, left) == 1:
        return left
    return Interval(m, iv.hi)


def isolate_roots(p: Polynomial, width=DEFAULT_WIDTH) -> list:
    """Disjoint closed intervals of width <= ``width``, one per distinct real root.

    Intervals are sorted ascending and their endpoints are never roots.
    """
    width = Fraction(width)
    if width <= 0:
        raise SolveError("isolation width must be positive")
    if p.is_zero():
        raise SolveError("cannot isolate the roots of the zero polynomial")
    chain = sturm_chain(p)
    if chain.var is None:
        return []
    bound = cauchy_bound(chain.head)
    stack = [Interval(-bound, bound)]
    found = []
    while stack:
        iv = stack.pop()
        n = count_roots(chain, iv)
        if n == 0:
            continue
        if n == 1 and iv.width <= width:
            found.append(iv)
            continue
        m = _split_point(chain, iv.lo, iv.hi)
        stack.append(Interval(m, iv.hi))
        stack.append(Interval(iv.lo, m))
    found.sort(key=lambda iv: iv.lo)
    # neighbours may share a (non-root) endpoint; shrink until they are disjoint
    for k in range(len(found) - 1):
        if found[k].hi == found[k + 1].lo:
            shared = found[k].hi
            while found[k].hi == shared:
                found[k] = _bisect_once(chain, found[k])
            while found[k + 1].lo == shared:
                found[k + 1] = _bisect_once(chain, found[k + 1])
    return found


# -- triangular systems -----------------------------------------------------


@dataclass(frozen=True)
class TriangularSystem:
    """Lex basis in triangular shape.

    ``eliminant`` is univariate in the last variable; ``linear[k]`` is the
    pair (a, b) with basis element a*x_k + b, where a, b only involve
    variables after x_k.
    """

    ring: object
    eliminant: Polynomial
    linear: tuple


def triangular_form(ideal: Ideal) -> TriangularSystem | None:
    """Split the reduced lex basis into eliminant and linear members.

    Returns None when the basis is {1} (no solutions at all).
    """
    basis = ideal.basis
    ring = ideal.ring
    n = ring.arity
    if len(basis) == 1 and basis[0].is_constant():
        return None
    by_var = {}
    for g in basis:
        by_var.setdefault(min(g.support()), []).append(g)
    missing = [ring.names[k] for k in range(n) if k not in by_var]
    if missing:
        raise SolveError(
            f"the solution set is not zero-dimensional: no basis element bounds {', '.join(missing)}"
        )
    for k, members in by_var.items():
        if len(members) > 1:
            raise SolveError(
                f"basis is not triangular: {len(members)} elements lead with {ring.names[k]}"
            )
    linear = []
    for k in range(n - 1):
        g = by_var[k][0]
        if g.degree(k) != 1:
            raise SolveError(
                f"basis is not triangular: element for {ring.names[k]} has degree {g.degree(k)}"
            )
        a, b = {}, {}
        for c, m in g.terms:
            if m[k]:
                a[m[:k] + (0,) + m[k + 1 :]] = c
            else:
                b[m] = c
        linear.append((Polynomial.from_dict(ring, a), Polynomial.from_dict(ring, b)))
    return TriangularSystem(ring, by_var[n - 1][0], tuple(linear))


def _back_substitute(system: TriangularSystem, root: Interval):
    """Box over a root interval, or None if a leading coefficient may vanish."""
    n = system.ring.arity
    comps = [Interval(0, 0)] * n
    comps[n - 1] = root
    for k in range(n - 2, -1, -1):
        a, b = system.linear[k]
        den = eval_on_box(a, comps)
        if den.contains_zero():
            return None
        comps[k] = -eval_on_box(b, comps) / den
    return Box(comps)


def _certify(system: TriangularSystem, chain: SturmChain, root: Interval, width: Fraction, within=None) -> Box:
    for _ in range(MAX_REFINEMENTS):
        box = _back_substitute(system, root)
        if box is not None:
            if within is not None:
                box = Box(c.intersection(w) for c, w in zip(box, within))
            if box.max_width <= width:
                return box
        root = _bisect_once(chain, root)
    raise SolveError("box refinement did not converge")


def solve_system(ideal: Ideal, width=DEFAULT_WIDTH) -> list:
    """One certified box per real solution of a zero-dimensional triangular system.

    Boxes are ordered by the last variable (the eliminant's variable).
    """
    width = Fraction(width)
    if width <= 0:
        raise SolveError("box width must be positive")
    system = triangular_form(ideal)
    if system is None:
        return []
    if system.eliminant.is_constant():
        return []
    chain = sturm_chain(system.eliminant)
    return [_certify(system, chain, root, width) for root in isolate_roots(system.eliminant, width)]


def refine_box(ideal: Ideal, box: Sequence[Interval], width) -> Box:
    """Shrink a box from :func:`solve_system` to component widths <= ``width``."""
    width = Fraction(width)
    if width <= 0:
        raise SolveError("box width must be positive")
    box = Box(box)
    if len(box) != ideal.ring.arity:
        raise SolveError("box arity does not match the ring")
    if box.max_width <= width:
        return box
    system = triangular_form(ideal)
    if system is None:
        raise SolveError("the system has no solutions")
    chain = sturm_chain(system.eliminant)
    root = box[-1]
    if count_roots(chain, root) != 1 or not chain.head_value(root.lo) or not chain.head_value(root.hi):
        raise SolveError(f"{box!r} does not isolate a single solution")
    return _certify(system, chain, root, width, within=box)


# -- output -----------------------------------------------------------------


def _fraction_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def boxes_to_json(boxes: Sequence[Box], names: Sequence[str]) -> list:
    """List of ``{variable: [lo, hi]}`` dicts with exact "num/den" strings."""
    return [
        {name: [_fraction_str(iv.lo), _fraction_str(iv.hi)] for name, iv in zip(names, box)}
        for box in boxes
    ]


def dumps_boxes(boxes: Sequence[Box], names: Sequence[str]) -> str:
    return json.dumps(boxes_to_json(boxes, names))


def boxes_from_json(data, names: Sequence[str]) -> list:
    if isinstance(data, str):
        data = json.loads(data)
    return [Box(Interval(Fraction(d[name][0]), Fraction(d[name][1])) for name in names) for d in data]


def format_boxes(boxes: Sequence[Box], names: Sequence[str]) -> str:
    """Plain text table, one row per box."""
    if not boxes:
        return "no real solutions"
    header = ["#"] + [f"{name} in" for name in names]
    rows = [[str(k)] + [str(iv) for iv in box] for k, box in enumerate(boxes, 1)]
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines)


__all__ = [
    "DEFAULT_WIDTH",
    "SolveError",
    "SturmChain",
    "TriangularSystem",
    "boxes_from_json",
    "boxes_to_json",
    "cauchy_bound",
    "count_roots",
    "dumps_boxes",
    "format_boxes",
    "isolate_roots",
    "refine_box",
    "solve_system",
    "sturm_chain",
    "triangular_form",
]
