"""Exhaustive and sampled probes of cancellation behavior at small sizes.

Reports never extrapolate: a clean scan at one size says only that no
counterexample exists at that size.  All scans are deterministic for a given
parameter set and seed, independent of the worker count.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial, gcd
from typing import Callable, Sequence

from .bijection import ProdBij
from .division import fp_divide, parallelize
from .equivariance import Budget, Certificate, equivariant_quotient
from .errors import BudgetExceeded, EquidivError
from .gallery import shift_table
from .perm import Perm, PermGroup

ALL_MODE_CAP = factorial(10)
PARALLEL_MODE_CAP = 10**6


def gcd_filter(n: int, k: int) -> bool:
    """True iff gcd(k, n!) = 1, i.e. k has no prime factor <= n."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return gcd(k, factorial(n)) == 1


# -- candidate enumeration ----------------------------------------------------
#
# "all" mode walks every bijection of A x C onto B x C as a flat permutation
# (flat index = c*nA + a).  "parallel" mode walks tuples of nC row
# permutations, which suffices for cancellation verdicts because any finite
# bijection and its parallelization stand or fall together.


def _decode(flat, n_a: int, n_c: int, mode: str) -> ProdBij:
    if mode == "all":
        return ProdBij.from_flat(flat, n_a, n_c)
    return ProdBij.parallel_from_rows(flat)


def _candidates(n_a: int, n_c: int, mode: str):
    if mode == "all":
        return itertools.permutations(range(n_a * n_c))
    return itertools.product(itertools.permutations(range(n_a)), repeat=n_c)


def _total(n_a: int, n_c: int, mode: str) -> int:
    if mode == "all":
        return factorial(n_a * n_c)
    return factorial(n_a) ** n_c


def _sampled(n_a: int, n_c: int, mode: str, count: int, seed: int) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        if mode == "all":
            out.append(tuple(rng.sample(range(n_a * n_c), n_a * n_c)))
        else:
            out.append(
                tuple(tuple(rng.sample(range(n_a), n_a)) for _ in range(n_c))
            )
    return out


def _scan_chunk(args) -> list[int]:
    """Indices (within the chunk's index space) of counterexamples."""
    n_a, n_c, group, mode, flats, base, node_limit = args
    hits = []
    for off, flat in enumerate(flats):
        f = _decode(flat, n_a, n_c, mode)
        cert = equivariant_quotient(f, group, Budget(node_limit))
        if cert.verdict == "not-exists":
            hits.append(base + off)
    return hits


@dataclass(frozen=True)
class ProbeCounterexample:
    index: int
    bij: ProdBij
    certificate: Certificate


@dataclass(frozen=True)
class ProbeReport:
    n_a: int
    n_c: int
    group_name: str
    mode: str
    coverage: str  # "exhaustive" | "sampled"
    seed: int | None
    total: int
    counterexamples: tuple[ProbeCounterexample, ...]

    def render(self) -> str:
        head = (
            f"probe nA {self.n_a} nC {self.n_c} group {self.group_name} "
            f"mode {self.mode} coverage {self.coverage}"
        )
        if self.seed is not None:
            head += f" seed {self.seed}"
        lines = [head]
        for cex in self.counterexamples:
            lines.append(
                f"counterexample {cex.index} cert cex-{cex.index:06d}.cert "
                f"reason {cex.certificate.reason}"
            )
        lines.append(
            f"summary counterexamples {len(self.counterexamples)} of {self.total}"
        )
        return "\n".join(lines) + "\n"


def probe_cancelling(
    n_a: int,
    n_c: int,
    group: PermGroup,
    mode: str = "all",
    *,
    sample: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    group_name: str = "?",
    node_limit: int = 10**7,
) -> ProbeReport:
    """Scan bijections at a fixed size and collect not-exists certificates."""
    if mode not in ("all", "parallel"):
        raise ValueError(f"unknown mode {mode!r}")
    if group.degree != n_c:
        raise ValueError("group degree must equal nC")
    total = _total(n_a, n_c, mode)
    if sample is None:
        cap = ALL_MODE_CAP if mode == "all" else PARALLEL_MODE_CAP
        if total > cap:
            raise BudgetExceeded(
                f"{total} candidates exceeds {mode}-mode cap {cap}; use sampling"
            )
        flats = list(_candidates(n_a, n_c, mode))
        coverage, used_seed = "exhaustive", None
    else:
        flats = _sampled(n_a, n_c, mode, sample, seed)
        total = sample
        coverage, used_seed = "sampled", seed

    if jobs <= 1 or len(flats) < 2 * jobs:
        hit_indices = _scan_chunk((n_a, n_c, group, mode, flats, 0, node_limit))
    else:
        size = (len(flats) + jobs - 1) // jobs
        chunks = [
            (n_a, n_c, group, mode, flats[i : i + size], i, node_limit)
            for i in range(0, len(flats), size)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hit_indices = [i for part in pool.map(_scan_chunk, chunks) for i in part]

    cexs = []
    for i in hit_indices:
        f = _decode(flats[i], n_a, n_c, mode)
        cexs.append(
            ProbeCounterexample(i, f, equivariant_quotient(f, group, Budget(node_limit)))
        )
    return ProbeReport(
        n_a, n_c, group_name, mode, coverage, used_seed, total, tuple(cexs)
    )


@dataclass(frozen=True)
class GapReport:
    """Bijections with a quotient whose parallelization has none."""

    n_a: int
    n_c: int
    group_name: str
    total: int
    gaps: tuple[ProbeCounterexample, ...]  # certificate is the parallelization's

    def render(self) -> str:
        lines = [
            f"parallelization-gap nA {self.n_a} nC {self.n_c} group {self.group_name}"
        ]
        for g in self.gaps:
            lines.append(f"gap {g.index} cert gap-{g.index:06d}.cert")
        if self.gaps:
            lines.append(f"summary gaps {len(self.gaps)} of {self.total}")
        else:
            lines.append(f"summary none found at this size (scanned {self.total})")
        return "\n".join(lines) + "\n"


def parallelization_gap_search(
    n_a: int,
    n_c: int,
    group: PermGroup,
    *,
    group_name: str = "?",
    node_limit: int = 10**7,
) -> GapReport:
    total = _total(n_a, n_c, "all")
    if total > ALL_MODE_CAP:
        raise BudgetExceeded(f"{total} candidates exceeds cap {ALL_MODE_CAP}")
    gaps = []
    for i, flat in enumerate(_candidates(n_a, n_c, "all")):
        f = ProdBij.from_flat(flat, n_a, n_c)
        if equivariant_quotient(f, group, Budget(node_limit)).verdict != "exists":
            continue
        bar_cert = equivariant_quotient(parallelize(f), group, Budget(node_limit))
        if bar_cert.verdict == "not-exists":
            gaps.append(ProbeCounterexample(i, f, bar_cert))
    return GapReport(n_a, n_c, group_name, total, tuple(gaps))


# -- basepoint extraction -----------------------------------------------------


def fp_basepoint_divider(star: int) -> Callable[[ProdBij], Perm]:
    return lambda f: fp_divide(f, star)


def extract_basepoint(
    divider: Callable[[ProdBij], Perm], c_labels: Sequence[str] = ("a", "b", "c")
) -> str:
    """The element of C a division method singles out on the shift gadget.

    Runs the divider on all six guises of the three-row shift table; each
    quotient must coincide with exactly one row, and all six guises must
    point at the same row label (anything else means the divider is not a
    division method).
    """
    if len(c_labels) != 3:
        raise ValueError("extraction gadget needs |C| = 3")
    picks = []
    for order in itertools.permutations(c_labels):
        f = shift_table(order, c_labels)
        h = divider(f)
        rows = [r for r in range(3) if f.row(r) == h.images]
        if len(rows) != 1:
            raise EquidivError("quotient does not match a unique row of the gadget")
        picks.append(c_labels[rows[0]])
    if len(set(picks)) != 1:
        raise EquidivError(f"guises disagree on the basepoint: {picks}")
    return picks[0]
