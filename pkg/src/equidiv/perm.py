"""Permutations of {0..n-1} and small permutation groups.

Composition uses the "then" order throughout: ``p.then(q)`` maps x to
q(p(x)).  Points are always 0-based indices; human-readable labels only
appear at the I/O boundary (see :func:`parse_cycles` / :func:`format_cycles`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

from .errors import BudgetExceeded, FormatError

#: Default cap on group orders for closure enumeration.  All cases from the
#: source material are tiny; beyond the cap we refuse rather than truncate.
DEFAULT_GROUP_CAP = 20160


@dataclass(frozen=True)
class Perm:
    """A permutation given by its image sequence: ``images[i]`` = image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.images!r}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if x in seen:
                    raise ValueError(f"point {x} appears in two cycles")
                seen.add(x)
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def then(self, other: "Perm") -> "Perm":
        """Composition in reading order: (self then other)(x) = other(self(x))."""
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Perm(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points included as length-1 cycles.

        Cycles start at their smallest element and are listed in order of
        that element; together they partition 0..n-1.
        """
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def fixed_points(self) -> set[int]:
        return {i for i, j in enumerate(self.images) if i == j}

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def is_semiregular(self) -> bool:
        """True iff nontrivial and all cycles share one length > 1 (no fixed points)."""
        if self.is_identity():
            return False
        lengths = {len(c) for c in self.cycles()}
        return len(lengths) == 1

    def semiregular_power(self) -> "Perm":
        """The power whose nontrivial cycles all have one prime length.

        Raises to the m/p-th power, where m is the order and p its smallest
        prime divisor.  The result is nontrivial; it may have fixed points.
        """
        if self.is_identity():
            raise ValueError("identity has no semiregular power")
        m = self.order()
        p = _smallest_prime_divisor(m)
        result = Perm.identity(self.degree)
        for _ in range(m // p):
            result = result.then(self)
        return result


def _smallest_prime_divisor(m: int) -> int:
    d = 2
    while d * d <= m:
        if m % d == 0:
            return d
        d += 1
    return m


@dataclass
class PermGroup:
    """A permutation group given by generators; elements enumerated lazily."""

    degree: int
    generators: tuple[Perm, ...]
    _elements: list[Perm] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.generators = tuple(self.generators)
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError("generator degree mismatch")

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, ())

    @classmethod
    def symmetric(cls, degree: int) -> "PermGroup":
        if degree < 2:
            return cls.trivial(degree)
        gens = [Perm.from_cycles([(0, 1)], degree)]
        if degree > 2:
            gens.append(Perm.from_cycles([tuple(range(degree))], degree))
        return cls(degree, tuple(gens))

    @classmethod
    def generated(cls, generators: Iterable[Perm], degree: int | None = None) -> "PermGroup":
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("need a degree for the trivial group")
            degree = gens[0].degree
        return cls(degree, gens)

    def elements(self, cap: int = DEFAULT_GROUP_CAP) -> list[Perm]:
        """All group elements, sorted by image sequence.

        Breadth-first closure of the generators.  Raises
        :class:`BudgetExceeded` if the order exceeds ``cap``.
        """
        if self._elements is not None:
            if len(self._elements) > cap:
                raise BudgetExceeded(f"group order {len(self._elements)} exceeds cap {cap}")
            return self._elements
        if cap < 1:
            raise ValueError("cap must be >= 1")
        ident = Perm.identity(self.degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            new: list[Perm] = []
            for x in frontier:
                for g in self.generators:
                    y = x.then(g)
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > cap:
                            raise BudgetExceeded(f"group order exceeds cap {cap}")
                        new.append(y)
            frontier = new
        self._elements = sorted(seen, key=lambda p: p.images)
        return self._elements

    def order(self, cap: int = DEFAULT_GROUP_CAP) -> int:
        return len(self.elements(cap))

    def global_fixed_points(self, cap: int = DEFAULT_GROUP_CAP) -> set[int]:
        """Points fixed by every element of the group."""
        fixed = set(range(self.degree))
        for g in self.elements(cap):
            fixed &= g.fixed_points()
        return fixed


# -- cycle notation -----------------------------------------------------------
#
# A permutation is written as a whitespace-free product of cycles over labels,
# e.g. "(a,b,c)(d,e)"; the identity is "()".

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, labels: Sequence[str]) -> Perm:
    """Parse cycle notation over a declared label universe."""
    text = text.strip()
    if not text or _CYCLE_RE.sub("", text):
        raise FormatError(f"bad cycle notation: {text!r}")
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise FormatError("duplicate labels in universe")
    cycles: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        if not body:
            continue  # "()" contributes nothing
        points = []
        for tok in body.split(","):
            if tok not in index:
                raise FormatError(f"unknown label {tok!r} in cycle notation")
            x = index[tok]
            if x in seen:
                raise FormatError(f"label {tok!r} appears twice in cycle notation")
            seen.add(x)
            points.append(x)
        cycles.append(tuple(points))
    return Perm.from_cycles(cycles, len(labels))


def format_cycles(p: Perm, labels: Sequence[str] | None = None) -> str:
    """Render a permutation in cycle notation; identity renders as "()"."""
    if labels is None:
        labels = [str(i) for i in range(p.degree)]
    parts = [
        "(" + ",".join(labels[x] for x in cyc) + ")"
        for cyc in p.cycles()
        if len(cyc) > 1
    ]
    return "".join(parts) if parts else "()"
