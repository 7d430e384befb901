"""Closed intervals and boxes with exact rational endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import WorkbenchError
from .poly import Polynomial


class IntervalError(WorkbenchError):
    pass


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise IntervalError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, v) -> "Interval":
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def issubset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other: "Interval") -> "Interval":
        if not self.intersects(other):
            raise IntervalError(f"{self} and {other} do not intersect")
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_interval(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        other = _as_interval(other)
        p = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(p), max(p))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_interval(other)
        if other.contains_zero():
            raise IntervalError(f"division by an interval containing zero: {other}")
        return self * Interval(1 / other.hi, 1 / other.lo)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise IntervalError("interval exponent must be a non-negative integer")
        if n == 0:
            return Interval(1, 1)
        a, b = self.lo**n, self.hi**n
        if n % 2:
            return Interval(a, b)
        if self.lo <= 0 <= self.hi:
            return Interval(0, max(a, b))
        return Interval(min(a, b), max(a, b))

    def __str__(self):
        return f"[{_fmt(self.lo)}, {_fmt(self.hi)}]"


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _as_interval(v) -> Interval:
    if isinstance(v, Interval):
        return v
    return Interval.point(v)


def interval_arith(op: str, a: Interval, b) -> Interval:
    """Apply ``op`` (add, sub, mul, pow) to intervals; for pow, b is an exponent."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a**b
    raise IntervalError(f"unknown interval operation {op!r}")


class Box(tuple):
    """Product of intervals, one per ring variable in declaration order."""

    def __new__(cls, components: Sequence[Interval]):
        return super().__new__(cls, (c if isinstance(c, Interval) else Interval(*c) for c in components))

    def __contains__(self, point) -> bool:
        return len(point) == len(self) and all(v in iv for v, iv in zip(point, self))

    def issubset(self, other: "Box") -> bool:
        return len(self) == len(other) and all(a.issubset(b) for a, b in zip(self, other))

    def is_disjoint(self, other: "Box") -> bool:
        return any(not a.intersects(b) for a, b in zip(self, other))

    @property
    def max_width(self) -> Fraction:
        return max(iv.width for iv in self)

    def __repr__(self):
        return "Box(" + " x ".join(str(iv) for iv in self) + ")"


def _horner(terms, var: int, box: Sequence[Interval]) -> Interval:
    """Interval value of a sum of terms, nested Horner from variable ``var`` on."""
    if var == len(box):
        return Interval.point(sum(c for c, _ in terms))
    # group by exponent of this variable, highest first (terms arrive lex-sorted)
    groups = []
    for t in terms:
        e = t[1][var]
        if groups and groups[-1][0] == e:
            groups[-1][1].append(t)
        else:
            groups.append((e, [t]))
    x = box[var]
    acc = None
    prev = None
    for e, group in groups:
        coeff = _horner(group, var + 1, box)
        acc = coeff if acc is None else acc * x ** (prev - e) + coeff
        prev = e
    if prev:
        acc = acc * x**prev
    return acc


def eval_on_box(f: Polynomial, box: Sequence[Interval]) -> Interval:
    """Enclosure of f over the box by per-variable Horner evaluation."""
    if len(box) != f.ring.arity:
        raise IntervalError(f"box has {len(box)} components, ring arity is {f.ring.arity}")
    box = [_as_interval(iv) for iv in box]
    if f.is_zero():
        return Interval(0, 0)
    return _horner(f.terms, 0, box)
