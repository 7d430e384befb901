"""Permutations in cycle notation and small permutation groups.

Points are 1-based.  Products are applied left to right, so ``p * q`` sends
``i`` to ``q(p(i))``.  The group order comes from a stabilizer chain
(orbit-stabilizer recursion over Schreier generators); plain BFS
enumeration of all elements is kept alongside as an independent check.
"""

from __future__ import annotations

import re
import threading
from collections import deque
from typing import Iterable, Sequence

from .errors import WorkbenchError

MAX_DEGREE = 10_000
DEFAULT_CAP = 10**6


class PermutationError(WorkbenchError):
    pass


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermutationError(f"{images} is not a bijection of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Product of cycles applied left to right."""
        if degree > MAX_DEGREE:
            raise PermutationError(f"degree {degree} exceeds the supported maximum {MAX_DEGREE}")
        result = cls.identity(degree)
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise PermutationError(f"point repeated in cycle {tuple(cycle)}")
            for p in cycle:
                if not 1 <= p <= degree:
                    raise PermutationError(f"point {p} out of range 1..{degree}")
            img = list(range(1, degree + 1))
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                img[a - 1] = b
            result = result * cls(img)
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise PermutationError(f"degree mismatch: {self.degree} vs {other.degree}")
        q = other.images
        return Permutation._raw(tuple(q[i - 1] for i in self.images))

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def moved_points(self) -> list:
        return [i for i, j in enumerate(self.images, 1) if i != j]

    def cycles(self) -> list:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return out

    def extend(self, degree: int) -> "Permutation":
        if degree < self.degree:
            raise PermutationError("cannot shrink a permutation")
        return Permutation._raw(self.images + tuple(range(self.degree + 1, degree + 1)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({self})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycle_list(text: str) -> list:
    """Split ``"(1,3)(2,4)"`` into ``[[1, 3], [2, 4]]``; ``"()"`` gives ``[]``."""
    s = text.strip()
    cycles = []
    pos = 0
    while pos < len(s):
        m = _CYCLE.match(s, pos)
        if m is None:
            raise PermutationError(f"malformed cycle notation at column {pos + 1}: {text!r}")
        body = m.group(1).strip()
        if body:
            try:
                cycles.append([int(tok) for tok in body.split(",")])
            except ValueError:
                raise PermutationError(f"malformed cycle {m.group(0)!r}") from None
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return cycles


def parse_cycles(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(parse_cycle_list(text), degree)


def _resize(p: Permutation, degree: int) -> Permutation:
    if p.degree <= degree:
        return p.extend(degree)
    if any(p(i) != i for i in range(degree + 1, p.degree + 1)):
        raise PermutationError(f"{p} moves points beyond degree {degree}")
    return Permutation._raw(p.images[:degree])


class Group:
    """Permutation group given by generators.

    The degree defaults to the largest generator degree; generators that are
    shorter are extended by fixed points.  Derived data (order, element set, stabilizer chain) is memoized under a lock.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = list(generators)
        if degree is None:
            degree = max((g.degree for g in gens), default=1)
        degree = max(degree, 1)
        self.degree = degree
        self.generators = tuple(_resize(g, degree) for g in gens)
        self._lock = threading.Lock()
        self._order = None
        self._elements = None

    @classmethod
    def from_cycles(cls, *cycle_texts: str) -> "Group":
        """Group on points 1..m where m is the largest point any generator moves."""
        return cls.from_cycle_lists([parse_cycle_list(t) for t in cycle_texts])

    @classmethod
    def from_cycle_lists(cls, generators) -> "Group":
        mentioned = max((p for cycles in generators for c in cycles for p in c), default=1)
        perms = [Permutation.from_cycles(c, mentioned) for c in generators]
        moved = max((max(g.moved_points(), default=1) for g in perms), default=1)
        return cls([_resize(g, moved) for g in perms], moved)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def _check_point(self, point: int):
        if not 1 <= point <= self.degree:
            raise PermutationError(f"point {point} out of range 1..{self.degree}")

    def orbit_transversal(self, point: int) -> dict:
        """Breadth-first orbit; maps each orbit point to an element carrying ``point`` there."""
        self._check_point(point)
        transversal = {point: self.identity}
        queue = deque([point])
        while queue:
            a = queue.popleft()
            u = transversal[a]
            for g in self.generators:
                b = g(a)
                if b not in transversal:
                    transversal[b] = u * g
                    queue.append(b)
        return transversal

    def orbit(self, point: int) -> set:
        return set(self.orbit_transversal(point))

    def stabilizer_generators(self, point: int) -> list:
        """Deduplicated non-identity Schreier generators of the point stabilizer."""
        transversal = self.orbit_transversal(point)
        seen = set()
        out = []
        for a, u in transversal.items():
            for g in self.generators:
                s = u * g * transversal[g(a)].inverse()
                if not s.is_identity() and s not in seen:
                    seen.add(s)
                    out.append(s)
        return out

    def stabilizer(self, point: int) -> "Group":
        return Group(self.stabilizer_generators(point), self.degree)

    def _base_point(self):
        for p in range(1, self.degree + 1):
            if any(g(p) != p for g in self.generators):
                return p
        return None

    def order(self) -> int:
        """|G| via |G| = |orbit(b)| * |Stab(b)| down a chain of base points."""
        with self._lock:
            if self._order is None:
                self._order = self._chain_order()
                if self._elements is not None:
                    assert len(self._elements) == self._order
            return self._order

    def _chain_order(self) -> int:
        order = 1
        group = self
        while True:
            b = group._base_point()
            if b is None:
                return order
            order *= len(group.orbit_transversal(b))
            group = group.stabilizer(b)

    def elements(self, cap: int = DEFAULT_CAP) -> frozenset:
        """All elements by breadth-first closure under the generators."""
        with self._lock:
            if self._elements is None:
                self._elements = self._closure(cap)
            return self._elements

    def _closure(self, cap: int) -> frozenset:
        e = self.identity
        seen = {e}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise PermutationError(f"group has more than {cap} elements")
                    queue.append(y)
        return frozenset(seen)

    def __len__(self):
        return self.order()

    def __contains__(self, p: Permutation) -> bool:
        return p.extend(self.degree) in self.elements() if p.degree <= self.degree else False

    def __str__(self):
        return "Group([ " + ", ".join(str(g) for g in self.generators) + " ])"


def orbit(group: Group, point: int) -> set:
    return group.orbit(point)


def stabilizer_gens(group: Group, point: int) -> list:
    return group.stabilizer_generators(point)


def group_order(group: Group) -> int:
    return group.order()


def enumerate_group(group: Group, cap: int = DEFAULT_CAP) -> frozenset:
    return group.elements(cap)


def format_elements(elements: Iterable[Permutation]) -> str:
    """GAP-style list, e.g. ``[ (), (1,2) ]``, sorted by image tuple."""
    return "[ " + ", ".join(str(p) for p in sorted(elements)) + " ]"
