"""Constructors for the example families: regular representations, the
checkered Cartesian product, and the three-row division gadgets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .bijection import ProdBij
from .equivariance import SymTriple
from .lazy import LazyBij, ordering_gadget
from .perm import Perm

BAR = "̄"  # combining macron: 0-bar renders as "0̄"


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table of a finite group; laws checked on construction."""

    product: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "product", tuple(tuple(r) for r in self.product))
        n = len(self.product)
        if any(len(r) != n for r in self.product):
            raise ValueError("table must be square")
        rng = range(n)
        if any(not 0 <= v < n for r in self.product for v in r):
            raise ValueError("table entry out of range")
        ident = [e for e in rng if all(self.product[e][x] == x == self.product[x][e] for x in rng)]
        if len(ident) != 1:
            raise ValueError("no two-sided identity")
        for x in rng:
            if ident[0] not in self.product[x]:
                raise ValueError("missing inverse")
        for x in rng:
            for y in rng:
                for z in rng:
                    if self.product[self.product[x][y]][z] != self.product[x][self.product[y][z]]:
                        raise ValueError("product is not associative")

    @property
    def n(self) -> int:
        return len(self.product)

    @property
    def identity(self) -> int:
        p = self.product
        return next(e for e in range(self.n) if all(p[e][x] == x for x in range(self.n)))

    @classmethod
    def cyclic(cls, n: int) -> "CayleyTable":
        return cls(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))

    @classmethod
    def klein(cls) -> "CayleyTable":
        return cls(tuple(tuple(i ^ j for j in range(4)) for i in range(4)))

    def left_translation(self, g: int) -> Perm:
        return Perm(tuple(self.product[g][x] for x in range(self.n)))

    def right_translation(self, g: int) -> Perm:
        return Perm(tuple(self.product[x][g] for x in range(self.n)))


def regular_rep(table: CayleyTable) -> ProdBij:
    """A = B = C = G and f(x, y) = (xy, y); always parallel."""
    n = table.n
    return ProdBij(
        n, n, tuple(tuple((table.product[a][c], c) for a in range(n)) for c in range(n))
    )


# -- checkered Cartesian product ---------------------------------------------


@dataclass(frozen=True)
class CheckeredProduct:
    bij: ProdBij
    triples: tuple[SymTriple, ...]
    a_labels: tuple[str, ...]
    b_labels: tuple[str, ...]
    c_labels: tuple[str, ...]


def checkered_product(
    sigma: Perm, c_labels: Sequence[str] | None = None
) -> CheckeredProduct:
    """Parity-split product of per-cycle shift blocks, for fixed-point-free sigma.

    Each cycle contributes a block of barred and unbarred coordinates and the
    shift map between them; tuples with an even number of unbarred
    coordinates form A, odd ones form B.  Component order reverses the cycle
    order so that rendered tuples match the familiar table layout (the last
    cycle's coordinate comes first); within a coordinate, barred elements
    precede unbarred ones.  Returns the bijection together with one symmetry
    per cycle rotation and all their products.
    """
    if sigma.fixed_points():
        raise ValueError("sigma must have no fixed points")
    if c_labels is None:
        c_labels = tuple(str(i) for i in range(sigma.degree))
    c_labels = tuple(c_labels)
    if len(c_labels) != sigma.degree:
        raise ValueError("label count must match degree")
    cycles = sigma.cycles()
    rev = list(reversed(cycles))  # component t holds cycle rev[t]
    comp_of_c: dict[int, tuple[int, int, int]] = {}  # c -> (component, position, length)
    for t, cyc in enumerate(rev):
        for m, c in enumerate(cyc):
            comp_of_c[c] = (t, m, len(cyc))

    # coordinate values: 0..l-1 barred, l..2l-1 unbarred
    ranges = [range(2 * len(cyc)) for cyc in rev]
    tuples = list(itertools.product(*ranges))

    def parity(tup: tuple[int, ...]) -> int:
        return sum(1 for t, x in enumerate(tup) if x >= len(rev[t])) % 2

    a_elems = [tup for tup in tuples if parity(tup) == 0]
    b_elems = [tup for tup in tuples if parity(tup) == 1]
    a_index = {tup: i for i, tup in enumerate(a_elems)}
    b_index = {tup: i for i, tup in enumerate(b_elems)}

    def act(tup: tuple[int, ...], c: int) -> tuple[int, ...]:
        t, m, l = comp_of_c[c]
        x = tup[t]
        x2 = l + (x + m) % l if x < l else (x - l - m) % l
        return tup[:t] + (x2,) + tup[t + 1:]

    n_a = len(a_elems)
    entries = tuple(
        tuple((b_index[act(tup, c)], c) for tup in a_elems) for c in range(sigma.degree)
    )
    bij = ProdBij(n_a, sigma.degree, entries)

    def display(tup: tuple[int, ...]) -> str:
        parts = []
        for t, x in enumerate(tup):
            l = len(rev[t])
            parts.append(f"{x}{BAR}" if x < l else str(x - l))
        return "".join(parts)

    def shift_tuple(tup: tuple[int, ...], t: int, e: int) -> tuple[int, ...]:
        # rotate the unbarred part of component t by e; barred part fixed
        l = len(rev[t])
        x = tup[t]
        if x >= l:
            x = l + (x - l + e) % l
        return tup[:t] + (x,) + tup[t + 1:]

    triples: list[SymTriple] = []
    for exps in itertools.product(*(range(len(cyc)) for cyc in cycles)):
        if not any(exps):
            continue
        gamma_img = list(range(sigma.degree))
        for cyc, e in zip(cycles, exps):
            for m, c in enumerate(cyc):
                gamma_img[c] = cyc[(m + e) % len(cyc)]
        gamma = Perm(tuple(gamma_img))

        def side(tup: tuple[int, ...]) -> tuple[int, ...]:
            for cyc, e in zip(cycles, exps):
                t = rev.index(cyc)
                tup = shift_tuple(tup, t, e)
            return tup

        alpha = Perm(tuple(a_index[side(tup)] for tup in a_elems))
        beta = Perm(tuple(b_index[side(tup)] for tup in b_elems))
        triples.append(SymTriple(alpha, beta, gamma))

    return CheckeredProduct(
        bij,
        tuple(triples),
        tuple(display(t) for t in a_elems),
        tuple(display(t) for t in b_elems),
        c_labels,
    )


def render_parallel_table(
    bij: ProdBij, b_labels: Sequence[str], c_labels: Sequence[str]
) -> str:
    """Simplified display of a parallel bijection: B labels only, one row per c."""
    if not bij.is_parallel():
        raise ValueError("table display is for parallel bijections")
    lines = []
    for c in range(bij.n_c):
        lines.append(
            f"row {c_labels[c]}: " + " ".join(b_labels[b] for b in bij.row(c))
        )
    return "\n".join(lines) + "\n"


# -- three-row gadgets --------------------------------------------------------


def shift_table(order: Sequence[str], c_labels: Sequence[str]) -> ProdBij:
    """The 3x3 parallel gadget: rows shift by their position in ``order``.

    Row order[0] is (0,1,2), order[1] is (1,2,0), order[2] is (2,0,1);
    ``c_labels`` fixes which C index carries which label.
    """
    if len(order) != 3 or sorted(order) != sorted(c_labels) or len(c_labels) != 3:
        raise ValueError("order must arrange the three C labels")
    shift = {lab: s for s, lab in enumerate(order)}
    rows = [[(a + shift[lab]) % 3 for a in range(3)] for lab in c_labels]
    return ProdBij.parallel_from_rows(rows)


def ordering_gadget_pair(first: str, second: str, fixed: str) -> LazyBij:
    """Lazy ordering gadget; see :func:`equidiv.lazy.ordering_gadget`."""
    return ordering_gadget(first, second, fixed)
