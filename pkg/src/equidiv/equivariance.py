"""Symmetries of a product bijection, and equivariant-quotient certificates.

A symmetry of f is a triple (alpha, beta, gamma) whose relabeling fixes f.
A quotient h : A -> B is Gamma-equivariant when every symmetry with gamma in
Gamma also fixes h, i.e. h = alpha^-1 then h then beta.  Equivalently the
graph of h is invariant under (a, b) -> (alpha(a), beta(b)), which turns the
existence question into a perfect-matching search over orbits of A x B.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bijection import ProdBij
from .errors import BudgetExceeded, FormatError
from .perm import Perm, PermGroup, format_cycles, parse_cycles

DEFAULT_NODE_LIMIT = 10_000_000


class Budget:
    """Backtrack-node counter shared across one solver run."""

    def __init__(self, limit: int = DEFAULT_NODE_LIMIT) -> None:
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"search exceeded {self.limit} nodes")


@dataclass(frozen=True)
class SymTriple:
    """(alpha, beta, gamma) with the transform by the triple fixing f."""

    alpha: Perm
    beta: Perm
    gamma: Perm

    def sort_key(self) -> tuple:
        return (self.alpha.images, self.beta.images, self.gamma.images)


@dataclass(frozen=True)
class Orbit:
    """An orbit of A x B cells; matchable iff no two cells share a row or column."""

    cells: tuple[tuple[int, int], ...]
    matchable: bool


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable outcome of an equivariant-quotient search."""

    verdict: str  # "exists" | "not-exists"
    quotient: Perm | None
    verified_against: tuple[SymTriple, ...]
    reason: str  # "matching-found" | "half-fixed-witness" | "orbit-exhaustion"
    witness: SymTriple | None = None
    orbits: tuple[Orbit, ...] | None = None


def is_symmetry(f: ProdBij, t: SymTriple) -> bool:
    return f.transform(t.alpha, t.beta, t.gamma) == f


def apply_pair(h: Perm, alpha: Perm, beta: Perm) -> Perm:
    """h_{alpha,beta} = alpha^-1 then h then beta."""
    return alpha.inverse().then(h).then(beta)


def _identityish(p: Perm | None) -> bool:
    return p is None or p.is_identity()


# -- stabilizer search --------------------------------------------------------


def _pairs_for_gamma(
    f: ProdBij, finv: ProdBij, gamma: Perm, budget: Budget
) -> list[tuple[Perm, Perm]]:
    """All (alpha, beta) making (alpha, beta, gamma) a symmetry of f.

    Backtracks over beta; each assignment beta(b) = b2 forces alpha values
    through the table (and vice versa), so contradictions surface after a
    handful of propagations rather than after |B|! candidates.
    """
    n_a, n_c = f.n_a, f.n_c
    g = gamma.images
    if n_a == 0:
        return [(Perm(()), Perm(()))]
    occ: list[list[tuple[int, int, int]]] = [[] for _ in range(n_a)]
    for c in range(n_c):
        for a in range(n_a):
            b, c2 = f.entries[c][a]
            occ[b].append((a, c, c2))
    solutions: list[tuple[Perm, Perm]] = []

    def propagate(alpha, ainv, beta, binv, queue) -> bool:
        def assign(arr, inv, x, y, kind) -> bool:
            if arr[x] != -1:
                return arr[x] == y
            if inv[y] != -1:
                return False
            arr[x] = y
            inv[y] = x
            queue.append((kind, x))
            return True

        while queue:
            kind, x = queue.pop()
            if kind == "b":
                b2 = beta[x]
                for a, c, c2 in occ[x]:
                    a2, c_src = finv.entries[g[c2]][b2]
                    if c_src != g[c]:
                        return False
                    if not assign(alpha, ainv, a, a2, "a"):
                        return False
            else:
                a2 = alpha[x]
                for c in range(n_c):
                    b, c2 = f.entries[c][x]
                    b2, c22 = f.entries[g[c]][a2]
                    if c22 != g[c2]:
                        return False
                    if not assign(beta, binv, b, b2, "b"):
                        return False
        return True

    def backtrack(alpha, ainv, beta, binv) -> None:
        try:
            b = beta.index(-1)
        except ValueError:
            # beta complete forces alpha complete via propagation
            solutions.append((Perm(tuple(alpha)), Perm(tuple(beta))))
            return
        for b2 in range(n_a):
            if binv[b2] != -1:
                continue
            budget.tick()
            al, ai, be, bi = alpha[:], ainv[:], beta[:], binv[:]
            queue: list[tuple[str, int]] = []
            be[b] = b2
            bi[b2] = b
            queue.append(("b", b))
            if propagate(al, ai, be, bi, queue):
                backtrack(al, ai, be, bi)

    blank = [-1] * n_a
    backtrack(blank[:], blank[:], blank[:], blank[:])
    return solutions


def stabilizer(
    f: ProdBij, group: PermGroup, budget: Budget | None = None
) -> list[SymTriple]:
    """All symmetry triples of f with gamma ranging over the given group."""
    if group.degree != f.n_c:
        raise ValueError("group degree must equal nC")
    budget = budget or Budget()
    finv = f.inverse()
    triples = [
        SymTriple(alpha, beta, gamma)
        for gamma in group.elements()
        for alpha, beta in _pairs_for_gamma(f, finv, gamma, budget)
    ]
    return sorted(triples, key=SymTriple.sort_key)


# -- orbits and matching ------------------------------------------------------


def pair_orbits(
    pairs: Iterable[tuple[Perm, Perm]], n_a: int, n_b: int
) -> list[Orbit]:
    """Orbits of the group generated by the pairs acting on A x B cells."""
    gens = list(pairs)
    if not gens:
        raise ValueError("need at least one pair (identity pair allowed)")
    moves = []
    for alpha, beta in gens:
        moves.append((alpha.images, beta.images))
        moves.append((alpha.inverse().images, beta.inverse().images))
    seen = [[False] * n_b for _ in range(n_a)]
    orbits: list[Orbit] = []
    for a0 in range(n_a):
        for b0 in range(n_b):
            if seen[a0][b0]:
                continue
            stack = [(a0, b0)]
            seen[a0][b0] = True
            cells = []
            while stack:
                a, b = stack.pop()
                cells.append((a, b))
                for am, bm in moves:
                    a2, b2 = am[a], bm[b]
                    if not seen[a2][b2]:
                        seen[a2][b2] = True
                        stack.append((a2, b2))
            cells.sort()
            rows = [a for a, _ in cells]
            cols = [b for _, b in cells]
            matchable = len(set(rows)) == len(cells) and len(set(cols)) == len(cells)
            orbits.append(Orbit(tuple(cells), matchable))
    orbits.sort(key=lambda o: o.cells[0])
    return orbits


def _orbit_union_matching(
    orbits: Sequence[Orbit], n_a: int, n_b: int, budget: Budget
) -> list[Orbit] | None:
    """Select matchable orbits whose union is a perfect matching of A x B.

    Orbits are tried in lexicographic order (by least cell), always branching
    on the first uncovered row, so the first solution found is canonical.
    """
    matchable = [o for o in orbits if o.matchable]
    by_row: list[list[Orbit]] = [[] for _ in range(n_a)]
    for o in matchable:
        for a, _ in o.cells:
            by_row[a].append(o)
    row_free = [True] * n_a
    col_free = [True] * n_b
    chosen: list[Orbit] = []

    def backtrack() -> bool:
        try:
            a = row_free.index(True)
        except ValueError:
            return True
        for o in by_row[a]:
            if all(row_free[r] and col_free[c] for r, c in o.cells):
                budget.tick()
                for r, c in o.cells:
                    row_free[r] = col_free[c] = False
                chosen.append(o)
                if backtrack():
                    return True
                chosen.pop()
                for r, c in o.cells:
                    row_free[r] = col_free[c] = True
        return False

    return chosen[:] if backtrack() else None


def nonexistence_by_halffixed(
    symmetries: Iterable[SymTriple],
) -> SymTriple | None:
    """First symmetry with exactly one of alpha, beta equal to the identity.

    Such a triple is an immediate obstruction: a bijection h cannot satisfy
    h = h then beta (beta nontrivial) or alpha^-1 then h = h (alpha
    nontrivial) since h hits every value.
    """
    for t in symmetries:
        if _identityish(t.alpha) != _identityish(t.beta):
            return t
    return None


def _matching_to_perm(chosen: Iterable[Orbit], n_a: int) -> Perm:
    images = [-1] * n_a
    for o in chosen:
        for a, b in o.cells:
            images[a] = b
    return Perm(tuple(images))


def equivariant_quotient(
    f: ProdBij, group: PermGroup, budget: Budget | None = None
) -> Certificate:
    """Decide whether f has a Gamma-equivariant quotient, with certificate."""
    budget = budget or Budget()
    syms = tuple(stabilizer(f, group, budget))
    witness = nonexistence_by_halffixed(syms)
    if witness is not None:
        return Certificate("not-exists", None, syms, "half-fixed-witness", witness=witness)
    pairs = sorted({(t.alpha, t.beta) for t in syms}, key=lambda p: (p[0].images, p[1].images))
    orbits = tuple(pair_orbits(pairs, f.n_a, f.n_b))
    chosen = _orbit_union_matching(orbits, f.n_a, f.n_b, budget)
    if chosen is None:
        return Certificate("not-exists", None, syms, "orbit-exhaustion", orbits=orbits)
    h = _matching_to_perm(chosen, f.n_a)
    for t in syms:  # soundness re-check; cheap relative to the search
        if apply_pair(h, t.alpha, t.beta) != h:
            raise AssertionError("solver produced a non-equivariant quotient (bug)")
    return Certificate("exists", h, syms, "matching-found", orbits=orbits)


def check_quotient(
    f: ProdBij, group: PermGroup, h: Perm, budget: Budget | None = None
) -> bool:
    """True iff h is fixed by every symmetry of f over the given group."""
    if h.degree != f.n_a:
        raise ValueError("quotient degree mismatch")
    syms = stabilizer(f, group, budget)
    return all(apply_pair(h, t.alpha, t.beta) == h for t in syms)


def nonexistence_from_symmetries(
    f: ProdBij, symmetries: Sequence[SymTriple], budget: Budget | None = None
) -> Certificate | None:
    """Nonexistence proof from a user-supplied symmetry subset, or None.

    Invariance under a subset of the stabilizer is necessary, so a failed
    orbit matching against the subset soundly proves not-exists.  A found
    matching proves nothing (the full stabilizer may reject it): returns None.
    """
    budget = budget or Budget()
    for t in symmetries:
        if not is_symmetry(f, t):
            raise ValueError("supplied triple is not a symmetry of f")
    syms = tuple(symmetries)
    witness = nonexistence_by_halffixed(syms)
    if witness is not None:
        return Certificate("not-exists", None, syms, "half-fixed-witness", witness=witness)
    pairs = sorted({(t.alpha, t.beta) for t in syms}, key=lambda p: (p[0].images, p[1].images))
    pairs = pairs or [(Perm.identity(f.n_a), Perm.identity(f.n_b))]
    orbits = tuple(pair_orbits(pairs, f.n_a, f.n_b))
    if _orbit_union_matching(orbits, f.n_a, f.n_b, budget) is None:
        return Certificate("not-exists", None, syms, "orbit-exhaustion", orbits=orbits)
    return None


# -- text formats -------------------------------------------------------------


def render_symmetries(
    triples: Iterable[SymTriple],
    a_labels: Sequence[str] | None = None,
    b_labels: Sequence[str] | None = None,
    c_labels: Sequence[str] | None = None,
) -> str:
    lines = []
    for t in triples:
        lines.append("alpha " + format_cycles(t.alpha, a_labels))
        lines.append("beta " + format_cycles(t.beta, b_labels))
        lines.append("gamma " + format_cycles(t.gamma, c_labels))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_symmetries(
    text: str,
    a_labels: Sequence[str],
    b_labels: Sequence[str],
    c_labels: Sequence[str],
) -> list[SymTriple]:
    parts: dict[str, list[Perm]] = {"alpha": [], "beta": [], "gamma": []}
    labels = {"alpha": a_labels, "beta": b_labels, "gamma": c_labels}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        if kind not in parts:
            raise FormatError(f"unrecognized symmetry line: {line!r}")
        parts[kind].append(parse_cycles(rest.strip(), labels[kind]))
    if not len(parts["alpha"]) == len(parts["beta"]) == len(parts["gamma"]):
        raise FormatError("unbalanced alpha/beta/gamma lines")
    return [
        SymTriple(a, b, g)
        for a, b, g in zip(parts["alpha"], parts["beta"], parts["gamma"])
    ]


def render_certificate(
    cert: Certificate,
    a_labels: Sequence[str] | None = None,
    b_labels: Sequence[str] | None = None,
    c_labels: Sequence[str] | None = None,
) -> str:
    lines = [f"verdict {cert.verdict}"]
    if cert.verdict == "exists":
        assert cert.quotient is not None
        toks = (
            [b_labels[b] for b in cert.quotient.images]
            if b_labels is not None
            else [str(b) for b in cert.quotient.images]
        )
        lines.append("quotient: " + " ".join(toks))
    else:
        lines.append(f"reason: {cert.reason}")
        if cert.witness is not None:
            w = cert.witness
            lines.append(
                "witness: alpha %s beta %s gamma %s"
                % (
                    format_cycles(w.alpha, a_labels),
                    format_cycles(w.beta, b_labels),
                    format_cycles(w.gamma, c_labels),
                )
            )
    body = render_symmetries(cert.verified_against, a_labels, b_labels, c_labels)
    return "\n".join(lines) + "\n" + body
