"""Exact multivariate polynomials over the rationals under lex order.

Polynomials are immutable sparse term sequences kept sorted in descending
lexicographic order.  Exponent vectors are plain tuples, so lex comparison
with the first declared variable largest is Python's tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import WorkbenchError

Rational = Fraction
Monomial = tuple

MAX_ARITY = 16


class PolynomialError(WorkbenchError):
    pass


@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[v1, ..., vn] with lex order, v1 > v2 > ... > vn."""

    names: tuple
    order: str = "lp"
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise PolynomialError("a ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise PolynomialError(f"duplicate variable names in {self.names}")
        if len(self.names) > MAX_ARITY:
            raise PolynomialError(f"at most {MAX_ARITY} variables are supported")
        if self.order != "lp":
            raise PolynomialError(f"unsupported monomial order {self.order!r}; only lp is available")
        if self.characteristic != 0:
            raise PolynomialError(
                f"characteristic {self.characteristic} is not supported; "
                "coefficients are always rationals (characteristic 0)"
            )

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PolynomialError(f"{name!r} is not a variable of ring {self.names}") from None

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial.from_dict(self, {(0,) * self.arity: c})

    def monomial(self, exponents, coefficient=1) -> "Polynomial":
        return Polynomial.from_dict(self, {tuple(exponents): coefficient})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        exps = [0] * self.arity
        exps[i] = 1
        return self.monomial(exps)

    def gens(self) -> tuple:
        return tuple(self.var(i) for i in range(self.arity))

    def __str__(self):
        return f"0,({','.join(self.names)}),{self.order}"


class Term(NamedTuple):
    coefficient: Fraction
    monomial: tuple


def _check_arity(a, b):
    if len(a) != len(b):
        raise PolynomialError(f"monomial arity mismatch: {len(a)} vs {len(b)}")


def compare_monomials(a: Sequence[int], b: Sequence[int], ring: Ring | None = None) -> int:
    """Return -1, 0 or 1 as a <, =, > b in lex order."""
    _check_arity(a, b)
    if ring is not None and len(a) != ring.arity:
        raise PolynomialError(f"monomial arity {len(a)} does not match ring arity {ring.arity}")
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


def monomial_lcm(a, b) -> tuple:
    _check_arity(a, b)
    return tuple(max(i, j) for i, j in zip(a, b))


def monomial_divides(a, b) -> bool:
    """True if the monomial a divides the monomial b."""
    _check_arity(a, b)
    return all(i <= j for i, j in zip(a, b))


def monomial_quotient(a, b) -> tuple:
    """Return a / b; b must divide a."""
    _check_arity(a, b)
    if not monomial_divides(b, a):
        raise PolynomialError(f"monomial {tuple(b)} does not divide {tuple(a)}")
    return tuple(i - j for i, j in zip(a, b))


def monomial_mul(a, b) -> tuple:
    return tuple(i + j for i, j in zip(a, b))


def _merge(a, b, scale=1):
    """Merge two descending term tuples computing a + scale*b."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ca, ma = a[i]
        cb, mb = b[j]
        if ma > mb:
            out.append(a[i])
            i += 1
        elif ma < mb:
            out.append(Term(cb * scale, mb))
            j += 1
        else:
            c = ca + cb * scale
            if c:
                out.append(Term(c, ma))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(Term(cb * scale, mb) for cb, mb in b[j:])
    return tuple(out)


class Polynomial:
    """Immutable polynomial; ``terms`` is a tuple of Term in descending order."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Iterable = ()):
        # trusted constructor: terms must already be canonical
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_dict(cls, ring: Ring, coeffs: Mapping) -> "Polynomial":
        terms = []
        for mono, c in coeffs.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != ring.arity:
                raise PolynomialError(f"exponent vector {mono} does not match ring arity {ring.arity}")
            if any(e < 0 for e in mono):
                raise PolynomialError(f"negative exponent in {mono}")
            c = Fraction(c)
            if c:
                terms.append(Term(c, mono))
        terms.sort(key=lambda t: t.monomial, reverse=True)
        return cls(ring, terms)

    @classmethod
    def from_terms(cls, ring: Ring, terms: Iterable) -> "Polynomial":
        acc: dict = {}
        for c, m in terms:
            m = tuple(m)
            acc[m] = acc.get(m, 0) + Fraction(c)
        return cls.from_dict(ring, acc)

    def to_dict(self) -> dict:
        return {m: c for c, m in self.terms}

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0].monomial))

    def lead_term(self) -> Term:
        if not self.terms:
            raise PolynomialError("the zero polynomial has no leading term")
        return self.terms[0]

    def lead_monomial(self) -> tuple:
        return self.lead_term().monomial

    def lead_coefficient(self) -> Fraction:
        return self.lead_term().coefficient

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for _, m in self.terms)

    def degree(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        if not self.terms:
            return -1
        return max(m[i] for _, m in self.terms)

    def support(self) -> frozenset:
        """Indices of the variables that occur in the polynomial."""
        used = set()
        for _, m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return frozenset(used)

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise PolynomialError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.ring, _merge(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.ring, _merge(self.terms, other.terms, -1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Polynomial(self.ring, (Term(-c, m) for c, m in self.terms))

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, (Term(a * c, m) for a, m in self.terms))

    def mul_term(self, coefficient, monomial) -> "Polynomial":
        """Multiply by a single term; order is preserved since lex is multiplicative."""
        coefficient = Fraction(coefficient)
        if not coefficient:
            return self.ring.zero
        return Polynomial(
            self.ring,
            (Term(c * coefficient, monomial_mul(m, monomial)) for c, m in self.terms),
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        acc: dict = {}
        for cb, mb in b:
            for ca, ma in a:
                m = monomial_mul(ma, mb)
                acc[m] = acc.get(m, 0) + ca * cb
        return Polynomial(
            self.ring,
            sorted((Term(c, m) for m, c in acc.items() if c), key=lambda t: t.monomial, reverse=True),
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError("exponent must be a non-negative integer")
        if len(self.terms) == 1:
            c, m = self.terms[0]
            return Polynomial(self.ring, (Term(c**n, tuple(e * n for e in m)),))
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            raise PolynomialError("the zero polynomial cannot be made monic")
        lc = self.terms[0].coefficient
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.ring.arity:
            raise PolynomialError(f"point has {len(point)} coordinates, ring arity is {self.ring.arity}")
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for c, m in self.terms:
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def derivative(self, var) -> "Polynomial":
        i = var if isinstance(var, int) else self.ring.index(var)
        if not 0 <= i < self.ring.arity:
            raise PolynomialError(f"variable index {i} out of range for arity {self.ring.arity}")
        terms = []
        for c, m in self.terms:
            e = m[i]
            if e:
                terms.append(Term(c * e, m[:i] + (e - 1,) + m[i + 1 :]))
        # differentiation keeps lex order among surviving terms
        return Polynomial(self.ring, terms)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, ring={self.ring.names})"

    def __str__(self):
        return format_poly(self)


# -- free-function API ------------------------------------------------------


def add_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check_ring(g)
    return f + g


def mul_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check_ring(g)
    return f * g


def lead_term(f: Polynomial) -> Term:
    return f.lead_term()


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    return f.evaluate(point)


def derivative(f: Polynomial, var) -> Polynomial:
    return f.derivative(var)


def integer_normalize(f: Polynomial) -> Polynomial:
    """Scale f to integer coefficients with content 1 and positive lead coefficient."""
    if f.is_zero():
        raise PolynomialError("cannot normalize the zero polynomial")
    den = 1
    for c, _ in f.terms:
        den = lcm(den, c.denominator)
    num = 0
    for c, _ in f.terms:
        num = gcd(num, (c * den).numerator)
    scale = Fraction(den, num)
    if f.lead_coefficient() < 0:
        scale = -scale
    return f.scale(scale)


# -- univariate support -----------------------------------------------------


def univariate_variable(*polys: Polynomial) -> int | None:
    """Index of the single variable shared by the inputs; None if all constant."""
    used = set()
    for p in polys:
        used |= p.support()
    if len(used) > 1:
        names = sorted(polys[0].ring.names[i] for i in used)
        raise PolynomialError(f"expected univariate input, got variables {names}")
    return next(iter(used), None)


def univariate_divmod(f: Polynomial, g: Polynomial):
    """Euclidean division f = q*g + r with deg r < deg g."""
    f._check_ring(g)
    if g.is_zero():
        raise PolynomialError("division by the zero polynomial")
    v = univariate_variable(f, g)
    ring = f.ring
    if v is None:
        return f.scale(1 / g.lead_coefficient()), ring.zero
    dg = g.lead_monomial()[v]
    lc = g.lead_coefficient()
    q: dict = {}
    r = f
    while r.terms and r.lead_monomial()[v] >= dg:
        c, m = r.terms[0]
        qm = list(m)
        qm[v] -= dg
        qm = tuple(qm)
        qc = c / lc
        q[qm] = qc
        r = Polynomial(ring, _merge(r.terms, g.mul_term(qc, qm).terms, -1))
    return Polynomial.from_dict(ring, q), r


def univariate_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    f._check_ring(g)
    univariate_variable(f, g)
    a, b = f, g
    while b.terms:
        _, r = univariate_divmod(a, b)
        a, b = b, (r.monic() if r.terms else r)
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """Monic f / gcd(f, f') for univariate nonzero f."""
    if f.is_zero():
        raise PolynomialError("squarefree part of the zero polynomial is undefined")
    v = univariate_variable(f)
    if v is None:
        return f.ring.one
    g = univariate_gcd(f, f.derivative(v))
    q, r = univariate_divmod(f, g)
    assert r.is_zero()
    return q.monic()


def univariate_coefficients(f: Polynomial, var: int) -> list:
    """Dense coefficient list, index = power of ``var``; f must only involve var."""
    if not f.terms:
        return []
    coeffs = [Fraction(0)] * (f.lead_monomial()[var] + 1)
    for c, m in f.terms:
        coeffs[m[var]] = c
    return coeffs


# -- Singular-style text ----------------------------------------------------


def _format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(m: Sequence[int], names: Sequence[str], short: bool = True) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif short:
            parts.append(f"{name}{e}")
        else:
            parts.append(f"{name}^{e}")
    return ("" if short else "*").join(parts)


def format_poly(f: Polynomial, short: bool | None = None) -> str:
    """Render in Singular notation, e.g. ``4x4-5x2+1``.

    Short notation (exponents glued to names) is used only when every
    variable name is a single character, otherwise ``x1^2*x2`` style.
    """
    if not f.terms:
        return "0"
    names = f.ring.names
    if short is None:
        short = all(len(n) == 1 for n in names)
    out = []
    for k, (c, m) in enumerate(f.terms):
        sign = "-" if c < 0 else ("+" if k else "")
        a = abs(c)
        mono = format_monomial(m, names, short)
        if not mono:
            body = _format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = _format_rational(a) + ("" if short else "*") + mono
        out.append(sign + body)
    return "".join(out)
