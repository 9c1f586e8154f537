import itertools

import pytest

from equidiv import (
    CayleyTable,
    Perm,
    PermGroup,
    checkered_product,
    equivariant_quotient,
    is_symmetry,
    parse_cycles,
    regular_rep,
    render_parallel_table,
    shift_table,
)
from equidiv.corpus import (
    check_checkered_nonexistence,
    check_checkered_symmetries,
    check_checkered_table,
    check_guise_identities,
    check_klein_table,
    check_regular_rep_forcing,
    check_right_translation,
)


class TestCayleyTable:
    def test_cyclic_and_klein_are_groups(self):
        for t in (CayleyTable.cyclic(1), CayleyTable.cyclic(5), CayleyTable.klein()):
            assert t.identity == 0

    @pytest.mark.parametrize(
        "rows",
        [
            ((0, 1), (0, 1)),  # no two-sided identity
            ((0, 1), (1, 1)),  # no inverse for 1
            ((0, 1, 2), (1, 2, 0)),  # not square
        ],
    )
    def test_rejects_non_groups(self, rows):
        with pytest.raises(ValueError):
            CayleyTable(rows)

    def test_rejects_nonassociative(self):
        # a quasigroup with identity that is not a group
        rows = (
            (0, 1, 2, 3, 4),
            (1, 0, 3, 4, 2),
            (2, 4, 0, 1, 3),
            (3, 2, 4, 0, 1),
            (4, 3, 1, 2, 0),
        )
        with pytest.raises(ValueError):
            CayleyTable(rows)

    def test_translations(self):
        t = CayleyTable.cyclic(3)
        assert t.left_translation(1) == Perm((1, 2, 0))
        assert t.right_translation(2) == Perm((2, 0, 1))


class TestRegularRep:
    def test_is_parallel_with_translation_rows(self):
        t = CayleyTable.klein()
        f = regular_rep(t)
        assert f.is_parallel()
        for c in range(4):
            assert f.row(c) == t.right_translation(c).images

    def test_klein_corpus(self):
        check_klein_table()

    def test_forcing_corpus(self):
        check_regular_rep_forcing()

    def test_right_translation_corpus(self):
        check_right_translation()

    def test_left_translations_are_symmetries(self):
        # (alpha, beta) = (left mult by g, left mult by g), gamma = id
        from equidiv import SymTriple

        t = CayleyTable.cyclic(4)
        f = regular_rep(t)
        for g in range(4):
            lt = t.left_translation(g)
            assert is_symmetry(f, SymTriple(lt, lt, Perm.identity(4)))


class TestCheckered:
    def test_printed_table_corpus(self):
        check_checkered_table()

    def test_symmetries_corpus(self):
        check_checkered_symmetries()

    def test_nonexistence_corpus(self):
        check_checkered_nonexistence()

    def test_rejects_fixed_points(self):
        with pytest.raises(ValueError):
            checkered_product(parse_cycles("(a,b)", "abc"), ("a", "b", "c"))

    def test_every_triple_nontrivial_gamma(self):
        prod = checkered_product(parse_cycles("(a,b)(c,d)", "abcd"), tuple("abcd"))
        assert all(not t.gamma.is_identity() for t in prod.triples)
        for t in prod.triples:
            assert is_symmetry(prod.bij, t)

    def test_nonexistence_under_generated_group(self):
        sigma = parse_cycles("(a,b,c)(d,e)", "abcde")
        prod = checkered_product(sigma, tuple("abcde"))
        cert = equivariant_quotient(prod.bij, PermGroup.generated([sigma]))
        assert cert.verdict == "not-exists"


class TestShiftTable:
    def test_rows(self):
        f = shift_table(("x", "y", "z"), ("x", "y", "z"))
        assert [f.row(c) for c in range(3)] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]

    def test_guise_identities_corpus(self):
        check_guise_identities()

    def test_all_guises_distinct(self):
        labels = ("a", "b", "c")
        tables = {shift_table(o, labels) for o in itertools.permutations(labels)}
        assert len(tables) == 6

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            shift_table(("a", "b"), ("a", "b", "c"))
        with pytest.raises(ValueError):
            shift_table(("a", "b", "b"), ("a", "b", "c"))

    def test_render_requires_parallel(self):
        from equidiv.corpus import two_row_nonparallel

        with pytest.raises(ValueError):
            render_parallel_table(two_row_nonparallel(), ("0", "1"), ("a", "b"))
