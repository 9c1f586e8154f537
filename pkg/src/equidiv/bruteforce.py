"""Independent oracle: decide quotient existence by enumerating every h.

Used to cross-check the orbit-matching solver; shares only the stabilizer
computation with it, never the matching search.
"""

from __future__ import annotations

import itertools

from .bijection import ProdBij
from .equivariance import Budget, apply_pair, stabilizer
from .perm import Perm, PermGroup


def all_equivariant_quotients(
    f: ProdBij, group: PermGroup, budget: Budget | None = None
) -> list[Perm]:
    """Every bijection h : A -> B fixed by the full stabilizer, in lex order."""
    syms = stabilizer(f, group, budget)
    pairs = sorted(
        {(t.alpha, t.beta) for t in syms}, key=lambda p: (p[0].images, p[1].images)
    )
    out = []
    for images in itertools.permutations(range(f.n_a)):
        h = Perm(images)
        if all(apply_pair(h, a, b) == h for a, b in pairs):
            out.append(h)
    return out


def quotient_exists_bruteforce(
    f: ProdBij, group: PermGroup, budget: Budget | None = None
) -> bool:
    return bool(all_equivariant_quotients(f, group, budget))
