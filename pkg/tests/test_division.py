import random

import pytest

from equidiv import (
    Perm,
    PermGroup,
    ProdBij,
    apply_pair,
    fp_divide,
    parallelize,
    stabilizer,
)
from equidiv.corpus import two_by_two_counterexample, two_row_nonparallel

from conftest import random_bij, random_perm


class TestFpDivide:
    def test_basepoint_out_of_range(self):
        with pytest.raises(IndexError):
            fp_divide(ProdBij.identity(2, 2), 2)

    def test_xor_instance(self):
        f = two_by_two_counterexample()
        assert fp_divide(f, 0) == Perm.identity(2)
        assert fp_divide(f, 1) == Perm((1, 0))

    def test_nonparallel_instance(self):
        f = two_row_nonparallel()
        assert fp_divide(f, 0) == Perm.identity(2)
        assert fp_divide(f, 1) == Perm((1, 0))

    def test_parallel_input_reads_off_rows(self):
        rng = random.Random(3)
        for _ in range(20):
            rows = [rng.sample(range(4), 4) for _ in range(3)]
            f = ProdBij.parallel_from_rows(rows)
            for c in range(3):
                assert fp_divide(f, c).images == tuple(rows[c])

    def test_always_a_bijection(self):
        rng = random.Random(5)
        for _ in range(200):
            n_a, n_c = rng.randint(1, 6), rng.randint(1, 4)
            f = random_bij(rng, n_a, n_c)
            h = fp_divide(f, rng.randrange(n_c))
            assert h.degree == n_a  # Perm construction validates bijectivity

    def test_naturality_under_relabeling(self):
        # dividing the (alpha, beta)-relabeled table relabels the quotient
        rng = random.Random(9)
        for _ in range(100):
            n_a, n_c = rng.randint(1, 5), rng.randint(1, 3)
            f = random_bij(rng, n_a, n_c)
            alpha, beta = random_perm(rng, n_a), random_perm(rng, n_a)
            star = rng.randrange(n_c)
            g = f.transform(alpha, beta, Perm.identity(n_c))
            assert fp_divide(g, star) == apply_pair(fp_divide(f, star), alpha, beta)

    def test_naturality_under_c_relabeling(self):
        # moving the basepoint along gamma tracks the same quotient
        rng = random.Random(13)
        for _ in range(100):
            n_a, n_c = rng.randint(1, 5), rng.randint(2, 4)
            f = random_bij(rng, n_a, n_c)
            gamma = random_perm(rng, n_c)
            star = rng.randrange(n_c)
            g = f.transform(Perm.identity(n_a), Perm.identity(n_a), gamma)
            assert fp_divide(g, gamma(star)) == fp_divide(f, star)

    def test_basepoint_equivariance(self):
        # every stabilizer triple fixing the basepoint also fixes the quotient
        rng = random.Random(17)
        for _ in range(50):
            n_a, n_c = rng.randint(1, 4), rng.randint(1, 3)
            f = random_bij(rng, n_a, n_c)
            star = rng.randrange(n_c)
            h = fp_divide(f, star)
            for t in stabilizer(f, PermGroup.symmetric(n_c)):
                if t.gamma(star) == star:
                    assert apply_pair(h, t.alpha, t.beta) == h


class TestParallelize:
    def test_result_is_parallel(self):
        rng = random.Random(21)
        for _ in range(50):
            f = random_bij(rng, rng.randint(1, 5), rng.randint(1, 3))
            assert parallelize(f).is_parallel()

    def test_fixes_parallel_inputs(self):
        rng = random.Random(23)
        for _ in range(50):
            rows = [rng.sample(range(4), 4) for _ in range(3)]
            f = ProdBij.parallel_from_rows(rows)
            assert parallelize(f) == f

    def test_idempotent(self):
        rng = random.Random(27)
        for _ in range(50):
            f = random_bij(rng, rng.randint(1, 5), rng.randint(1, 3))
            bar = parallelize(f)
            assert parallelize(bar) == bar

    def test_commutes_with_transform(self):
        rng = random.Random(31)
        for _ in range(100):
            n_a, n_c = rng.randint(1, 4), rng.randint(1, 3)
            f = random_bij(rng, n_a, n_c)
            alpha, beta = random_perm(rng, n_a), random_perm(rng, n_a)
            gamma = random_perm(rng, n_c)
            assert parallelize(f.transform(alpha, beta, gamma)) == parallelize(
                f
            ).transform(alpha, beta, gamma)
