"""Finitely described infinite bijections: a symbol header plus shifted tails.

Rows range over a finite C, columns over the positive integers.  Rows moved
by a distinguished permutation of C own one symbol each and map their first
|C| columns into symbols; past the header they shift integers down by |C|.
Rows fixed by the permutation map column j to j unchanged.  Structural
bijectivity is a finite case analysis and is verified on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .perm import Perm

LazyValue = tuple[object, int]  # (symbol str or positive int, c index)

#: Symbol names for moved rows, in row order; card ranks, then numbered spares.
SYMBOL_POOL = ["K", "Q", "J", "X"]


def _symbol(i: int) -> str:
    return SYMBOL_POOL[i] if i < len(SYMBOL_POOL) else f"S{i + 1}"


@dataclass(frozen=True)
class SymbolPerm:
    """A permutation of the symbol alphabet, implicitly fixing all integers."""

    mapping: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(tuple(p) for p in self.mapping))
        src = [s for s, _ in self.mapping]
        dst = [d for _, d in self.mapping]
        if sorted(src) != sorted(dst) or len(set(src)) != len(src):
            raise ValueError("not a permutation of the symbols")

    def __call__(self, v):
        if isinstance(v, str):
            return dict(self.mapping)[v]
        return v

    def is_identity(self) -> bool:
        return all(s == d for s, d in self.mapping)


@dataclass(frozen=True)
class LazySymmetry:
    """(id on A, symbol permutation on B, gamma on C) fixing a lazy bijection."""

    beta: SymbolPerm
    gamma: Perm
    alpha: None = None  # the A side is the positive integers; always identity


@dataclass(frozen=True)
class LazyBij:
    """A bijection (positive integers) x C -> (symbols + positive integers) x C."""

    c_labels: tuple[str, ...]
    gamma: Perm
    symbol_by_row: tuple[object, ...]  # str for moved rows, None for fixed
    header: tuple[object, ...]  # per row: tuple of width LazyValue entries, or None
    beta_on_symbols: SymbolPerm

    def __post_init__(self) -> None:
        self.validate()

    @property
    def width(self) -> int:
        return len(self.c_labels)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(s for s in self.symbol_by_row if s is not None)

    def moved_rows(self) -> list[int]:
        return [i for i, s in enumerate(self.symbol_by_row) if s is not None]

    def validate(self) -> None:
        """Case analysis establishing that every output cell is hit once.

        Header cells must cover symbols x C exactly; the shifted tails of
        moved rows and the full rules of fixed rows then cover the integer
        cells (n, c) exactly once each, by construction of the rules.
        """
        n_c = len(self.c_labels)
        if self.gamma.degree != n_c or len(self.symbol_by_row) != n_c:
            raise ValueError("row metadata shape mismatch")
        if len(self.header) != n_c:
            raise ValueError("header shape mismatch")
        for i in range(n_c):
            moved = self.gamma(i) != i
            if moved != (self.symbol_by_row[i] is not None):
                raise ValueError("moved/fixed classification disagrees with gamma")
            if moved != (self.header[i] is not None):
                raise ValueError("header present iff row is moved")
        cells = set()
        for i, head in enumerate(self.header):
            if head is None:
                continue
            if len(head) != n_c:
                raise ValueError("header row must have |C| entries")
            for v, c in head:
                if not isinstance(v, str):
                    raise ValueError("header entries must be symbols")
                if not 0 <= c < n_c:
                    raise ValueError("header C index out of range")
                cells.add((v, c))
        want = {(s, c) for s in self.symbols for c in range(n_c)}
        if cells != want:
            raise ValueError("header does not cover symbols x C exactly once")

    def eval(self, n: int, row: int) -> LazyValue:
        """Table entry at column n >= 1 of the given C row."""
        if n < 1:
            raise ValueError("columns are 1-based")
        head = self.header[row]
        if head is None:
            return (n, row)
        if n <= self.width:
            return head[n - 1]
        return (n - self.width, row)

    def eval_label(self, n: int, label: str) -> tuple[object, str]:
        v, c = self.eval(n, self.c_labels.index(label))
        return v, self.c_labels[c]

    def printed_symmetry(self) -> LazySymmetry:
        return LazySymmetry(self.beta_on_symbols, self.gamma)


def lazy_check_symmetry(lazy: LazyBij, beta: SymbolPerm, gamma: Perm) -> bool:
    """Exact verification that (id, beta, gamma) is a symmetry.

    Header columns are compared entry by entry; beyond the header both sides
    reduce to the shift/full rules, which agree exactly when gamma maps moved
    rows to moved rows and fixed rows to fixed rows.  Nothing is sampled.
    """
    if gamma.degree != len(lazy.c_labels):
        raise ValueError("gamma degree mismatch")
    for i in range(len(lazy.c_labels)):
        if (lazy.header[i] is None) != (lazy.header[gamma(i)] is None):
            return False
    for i in range(len(lazy.c_labels)):
        for n in range(1, lazy.width + 1):
            v, c = lazy.eval(n, i)
            if lazy.eval(n, gamma(i)) != (beta(v), gamma(c)):
                return False
    return True


def lazy_apply_symbols(lazy: LazyBij, beta: SymbolPerm) -> LazyBij:
    """Post-compose with a symbol permutation (identity on integers)."""
    header = tuple(
        None if head is None else tuple((beta(v), c) for v, c in head)
        for head in lazy.header
    )
    symbol_by_row = tuple(
        None if s is None else beta(s) for s in lazy.symbol_by_row
    )
    conj = tuple((beta(s), beta(d)) for s, d in lazy.beta_on_symbols.mapping)
    return LazyBij(lazy.c_labels, lazy.gamma, symbol_by_row, header, SymbolPerm(conj))


def lazy_equal(x: LazyBij, y: LazyBij) -> bool:
    """Equality as functions, matching rows by label rather than position."""
    if set(x.c_labels) != set(y.c_labels):
        return False
    if x.width != y.width:
        return False  # tail shifts would disagree past the shorter header
    for label in x.c_labels:
        xi = x.c_labels.index(label)
        yi = y.c_labels.index(label)
        if (x.header[xi] is None) != (y.header[yi] is None):
            return False
        for n in range(1, x.width + 1):
            xv, xc = x.eval(n, xi)
            yv, yc = y.eval(n, yi)
            if xv != yv or x.c_labels[xc] != y.c_labels[yc]:
                return False
    return True


def render_lazy(lazy: LazyBij, window: int) -> str:
    """Window of the table: one line per row, entries like "Ka" or "12c"."""
    lines = []
    for i, label in enumerate(lazy.c_labels):
        entries = []
        for n in range(1, window + 1):
            v, c = lazy.eval(n, i)
            entries.append(f"{v}{lazy.c_labels[c]}")
        lines.append(f"row {label}: " + " ".join(entries))
    return "\n".join(lines) + "\n"


def build_counterexample(gamma: Perm, c_labels: Sequence[str]) -> LazyBij:
    """The header-plus-shift-tail bijection witnessing that gamma obstructs.

    Requires every nontrivial cycle of gamma to have the same length (take a
    suitable power first if not).  Each moved row x, at position i of its
    cycle, maps header column j to (symbol of x, gamma^i of the j-th label);
    the printed symmetry is (id, symbol shift along the cycles, gamma).
    """
    c_labels = tuple(c_labels)
    if gamma.degree != len(c_labels):
        raise ValueError("gamma degree must match |C|")
    if gamma.is_identity():
        raise ValueError("gamma must be nontrivial")
    lengths = {len(c) for c in gamma.cycles() if len(c) > 1}
    if len(lengths) != 1:
        raise ValueError(
            "nontrivial cycles must share one length; apply semiregular_power first"
        )
    moved = [i for i in range(gamma.degree) if gamma(i) != i]
    symbol: dict[int, str] = {x: _symbol(k) for k, x in enumerate(moved)}
    position = {}
    for cyc in gamma.cycles():
        if len(cyc) > 1:
            for i, x in enumerate(cyc):
                position[x] = i
    powers = [Perm.identity(gamma.degree)]
    for _ in range(max(position.values(), default=0)):
        powers.append(powers[-1].then(gamma))
    header: list[object] = []
    symbol_by_row: list[object] = []
    for x in range(gamma.degree):
        if x in symbol:
            g_i = powers[position[x]]
            header.append(tuple((symbol[x], g_i(j)) for j in range(len(c_labels))))
            symbol_by_row.append(symbol[x])
        else:
            header.append(None)
            symbol_by_row.append(None)
    beta = SymbolPerm(tuple((symbol[x], symbol[gamma(x)]) for x in moved))
    return LazyBij(c_labels, gamma, tuple(symbol_by_row), tuple(header), beta)


def ordering_gadget(first: str, second: str, fixed: str) -> LazyBij:
    """The two-guise ordering gadget on C = {first, second, fixed}.

    Associates the first symbol with ``first`` and the second with
    ``second``; swapping the symbols turns one guise into the other.
    """
    labels = (first, second, fixed)
    return build_counterexample(Perm.from_cycles([(0, 1)], 3), labels)
