"""Basepoint division of a bijection A x C -> B x C, and its parallelization.

The division algorithm: read off the basepoint row p and the basepoint row q
of the inverse, follow the functional graph of p-then-q to its cycle core X,
commit p restricted to X to the quotient, subtract, repeat.  X is nonempty at
every step (a finite functional graph always has a cycle), so this
terminates.
"""

from __future__ import annotations

from .bijection import PartialMap, ProdBij
from .perm import Perm


def _cycle_core(fun: list[int]) -> list[int]:
    """Points lying on a cycle of the functional graph x -> fun[x]."""
    n = len(fun)
    color = [0] * n  # 0 unvisited, 1 on current path, 2 finished
    on_cycle = [False] * n
    for start in range(n):
        if color[start]:
            continue
        path = []
        x = start
        while color[x] == 0:
            color[x] = 1
            path.append(x)
            x = fun[x]
        if color[x] == 1:
            # found a new cycle: the tail of `path` from x onward
            for y in path[path.index(x):]:
                on_cycle[y] = True
        for y in path:
            color[y] = 2
    return [x for x in range(n) if on_cycle[x]]


def fp_divide(f: ProdBij, star: int) -> Perm:
    """Quotient bijection A -> B extracted at basepoint ``star``."""
    if not 0 <= star < f.n_c:
        raise IndexError(f"basepoint {star} out of range")
    images: list[int] = [-1] * f.n_a
    cur = f
    cur_a = list(range(f.n_a))
    cur_b = list(range(f.n_b))
    while cur.n_a > 0:
        p = cur.row(star)
        q = cur.inverse().row(star)
        core = _cycle_core([q[p[a]] for a in range(cur.n_a)])
        taken = [p[x] for x in core]
        if len(set(taken)) != len(taken):
            raise AssertionError("basepoint row not injective on cycle core (bug)")
        for x in core:
            images[cur_a[x]] = cur_b[p[x]]
        res = cur.subtract(PartialMap(tuple((x, p[x]) for x in core)))
        cur_a = [cur_a[i] for i in res.a_old]
        cur_b = [cur_b[i] for i in res.b_old]
        cur = res.bij
    return Perm(tuple(images))


def parallelize(f: ProdBij) -> ProdBij:
    """Collect the basepoint quotients for every c into one parallel bijection."""
    return ProdBij.parallel_from_rows(
        [fp_divide(f, c).images for c in range(f.n_c)]
    )
