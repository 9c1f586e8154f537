import random

from equidiv import Perm, ProdBij


def random_perm(rng: random.Random, n: int) -> Perm:
    return Perm(tuple(rng.sample(range(n), n)))


def random_bij(rng: random.Random, n_a: int, n_c: int) -> ProdBij:
    flat = rng.sample(range(n_a * n_c), n_a * n_c)
    return ProdBij.from_flat(flat, n_a, n_c)


def random_parallel(rng: random.Random, n_a: int, n_c: int) -> ProdBij:
    return ProdBij.parallel_from_rows(
        [rng.sample(range(n_a), n_a) for _ in range(n_c)]
    )
