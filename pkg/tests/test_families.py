from fractions import Fraction

import pytest

from conftest import T
from pmtree import (
    Alphabet,
    ContextTree,
    closure,
    closure_oracle,
    closure_trim,
    comb,
    contained_at_root,
    is_complete,
    is_pm_def4,
    metrics,
    minimal_full_mc,
    sparse_example,
    wide_r2,
)
from pmtree.errors import BadParams
from pmtree.families import wide_chain, wide_r2_attainable


def wide_leaves(n, ell):
    return n * n + (ell - 2) * (n - 1)


def wide_closure_leaves(n, ell):
    return n * n * (ell - 1) + n * (2 - ell) + (n - 1) * (ell - 2) * (ell - 3) // 2


class TestComb:
    def test_binary_depth_four(self):
        assert comb(2, 4) == T("1", "10", "100", "0000", "1000")

    def test_depth_one_is_full(self):
        assert comb(2, 1) == ContextTree.full(Alphabet.of_size(2), 1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("ell", [1, 2, 5, 9])
    def test_formula_and_pm(self, n, ell):
        t = comb(n, ell)
        assert len(t) == (n - 1) * ell + 1
        assert t.depth == ell and is_pm_def4(t)
        assert metrics(t).r1 == Fraction((n - 1) * ell + 1, n**ell)

    @pytest.mark.parametrize("args", [(1, 3), (2, 0)])
    def test_bad_params(self, args):
        with pytest.raises(BadParams):
            comb(*args)


class TestSparse:
    def test_shape(self):
        t = sparse_example()
        assert is_complete(t) and t.depth == 6
        assert len(t) == len(comb(2, 6))
        assert not is_pm_def4(t)

    def test_closure(self):
        t = sparse_example()
        c = closure_trim(t)
        assert c == closure_oracle(t)
        assert len(c) == 13
        # closing only grows the tree below the root children 1 and 00
        assert all(x[-1:] == (1,) or x[-2:] == (0, 0) for x in c.contexts - t.contexts)


class TestMinimalFullMc:
    def test_depth_four(self):
        m = metrics(minimal_full_mc(4))
        assert (m.r1, m.r2) == (Fraction(7, 16), Fraction(10, 7))

    @pytest.mark.parametrize("ell", range(3, 21))
    def test_formulas(self, ell):
        t = minimal_full_mc(ell)
        m = metrics(t)
        k = 2 ** (ell - 3)
        assert m.depth == ell and m.leaf_count == 3 * k + 1
        assert m.r1 == Fraction(3 * k + 1, 2**ell)
        assert m.r2 == Fraction(5 * k, 3 * k + 1)

    def test_limits(self):
        m = metrics(minimal_full_mc(20))
        assert abs(m.r1 - Fraction(3, 8)) < 1e-3
        assert abs(m.r2 - Fraction(5, 3)) < 1e-3

    @pytest.mark.parametrize("ell", range(3, 9))
    def test_closure_holds_full_chain(self, ell):
        c = closure(minimal_full_mc(ell))
        full = ContextTree.full(Alphabet.of_size(2), ell - 1)
        assert contained_at_root(full, c)
        assert not contained_at_root(ContextTree.full(Alphabet.of_size(2), ell), c)

    def test_bad_params(self):
        with pytest.raises(BadParams):
            minimal_full_mc(2)


class TestWide:
    def test_chain_pairs_are_distinct(self):
        y = wide_chain(4, 8)
        pairs = list(zip(y, y[1:]))
        assert len(pairs) == len(set(pairs)) and y[0] == 1 and y[-1] == 0

    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("ell", range(4, 11))
    def test_leaf_count(self, n, ell):
        t = wide_r2(n, ell)
        assert is_complete(t) and t.depth == ell
        assert len(t) == wide_leaves(n, ell)

    @pytest.mark.parametrize(
        "n,ell", [(n, ell) for n in range(2, 7) for ell in range(4, 11) if wide_r2_attainable(n, ell)]
    )
    def test_closure_count(self, n, ell):
        c = closure_trim(wide_r2(n, ell))
        assert len(c) == wide_closure_leaves(n, ell)

    def test_small_case(self):
        assert len(closure(wide_r2(3, 4))) == wide_closure_leaves(3, 4) == 23

    def test_r2_grows_with_n(self):
        r2 = [metrics(wide_r2(n, 6)).r2 for n in range(2, 9)]
        assert r2 == sorted(r2) and all(x <= 5 for x in r2)

    def test_bad_params(self):
        with pytest.raises(BadParams):
            wide_r2(2, 3)


@pytest.mark.parametrize(
    "t",
    [comb(3, 4), sparse_example(), minimal_full_mc(6), wide_r2(3, 6), wide_r2(2, 7)],
    ids=["comb", "sparse", "minfull", "wide3", "wide2"],
)
def test_trim_matches_oracle(t):
    assert closure_trim(t) == closure_oracle(t)
    assert 1 <= metrics(t).r2 <= t.depth
