import random
from itertools import combinations

import pytest

from orthocone.lattice import (
    Dimension,
    IndexTuple,
    InvalidIndexError,
    IsotropicIndex,
    Root,
    RootMonomial,
    bruhat_leq,
    element_dominates,
    enumerate_isotropic,
    enumerate_isotropic_bruteforce,
    p_h,
    p_v,
    project,
    roots_of,
    star,
    top_element,
)


def test_small_enumerations():
    assert [e.entries for e in enumerate_isotropic(1)] == [(1,)]
    assert [e.entries for e in enumerate_isotropic(2)] == [(1, 2), (3, 4)]
    assert len(enumerate_isotropic(5)) == 16


@pytest.mark.parametrize("d", range(1, 9))
def test_count_matches_filter(d):
    fast = enumerate_isotropic(d)
    assert len(fast) == 2 ** (d - 1)
    assert fast == sorted(fast)
    assert fast == enumerate_isotropic_bruteforce(d)


def test_zero_dimension_rejected():
    with pytest.raises(InvalidIndexError):
        enumerate_isotropic(0)
    with pytest.raises(InvalidIndexError):
        Dimension(0)


@pytest.mark.parametrize("d", [1, 3, 6])
def test_star_involution(d):
    D = Dimension(d)
    assert D.two_d == 2 * d
    for k in range(1, 2 * d + 1):
        assert star(star(k, d), d) == k
    for v in enumerate_isotropic(d):
        for k in range(1, 2 * d + 1):
            assert (k in v) != (star(k, d) in v)


def test_index_validation():
    with pytest.raises(InvalidIndexError):
        IndexTuple((2, 1))
    with pytest.raises(InvalidIndexError):
        IsotropicIndex.of([1, 2, 3, 4, 6])  # odd number above d
    with pytest.raises(InvalidIndexError):
        IsotropicIndex.of([1, 2, 3, 4, 10])  # contains both 1 and 10


def test_bruhat_examples():
    v = IsotropicIndex.of([1, 2, 3, 4, 5])
    w = IsotropicIndex.of([3, 4, 5, 9, 10])
    assert bruhat_leq(v, w)
    assert bruhat_leq(w, w)
    assert not bruhat_leq(IsotropicIndex.of([1, 6, 7, 8, 9]), w)
    with pytest.raises(InvalidIndexError):
        bruhat_leq(v, IsotropicIndex.of([1, 2]))


def test_bruhat_partial_order():
    rng = random.Random(1)
    for d in (4, 5, 6):
        elems = enumerate_isotropic(d)
        for _ in range(300):
            a, b, c = (rng.choice(elems) for _ in range(3))
            if bruhat_leq(a, b) and bruhat_leq(b, a):
                assert a == b
            if bruhat_leq(a, b) and bruhat_leq(b, c):
                assert bruhat_leq(a, c)
        top = top_element(d)
        assert all(bruhat_leq(e, top) for e in elems)


def test_root_regions_d5():
    R = roots_of(IsotropicIndex.of([1, 2, 3, 4, 5]))
    assert len(R) == 25
    assert len(R.OR) == 10
    assert set(R.OR) == set(R.ON)
    assert len(R.diagonal) == 5


def test_root_regions_d1():
    R = roots_of(IsotropicIndex.of([1]))
    (alpha,) = R.roots
    assert (alpha.row, alpha.col) == (2, 1)
    assert alpha.on_diagonal and alpha.in_N and not alpha.in_OR


def test_rows_of_patch_example():
    R = roots_of(IsotropicIndex.of([1, 3, 4, 6, 9]))
    assert R.rows() == (2, 5, 7, 8, 10)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_flag_consistency(d):
    for v in enumerate_isotropic(d):
        R = roots_of(v)
        assert len(R) == d * d
        for a in R:
            assert a.in_ON == (a.in_OR and a.in_N)
            if a.on_diagonal:
                # a diagonal point lies in N(v) exactly when its column is at most d
                assert not a.in_OR and a.in_N == (a.col <= d)
        for a in R.ON:
            assert p_v(a) in R and p_v(a).in_N
            assert p_h(a) in R


def test_projections_hand_examples():
    d = 4
    assert project(Root(7, 1, d), "horizontal") == Root(7, 2, d)
    assert project(Root(5, 2, d), "vertical") == Root(7, 2, d)
    diag = Root(8, 1, d)
    assert p_h(diag) == p_v(diag) == diag
    with pytest.raises(ValueError):
        project(diag, "sideways")


def test_element_domination():
    d = 4
    a = Root(7, 2, d)
    assert element_dominates(a, a)
    assert not element_dominates(Root(5, 4, d), a)
    assert element_dominates(Root(8, 1, d), a)


def test_chain_order_on_roots():
    d = 4
    assert Root(7, 1, d) > Root(5, 2, d)
    assert not Root(7, 1, d) > Root(8, 2, d)
    assert Root(5, 2, d) < Root(7, 1, d)


def test_json_forms():
    v = IsotropicIndex.of([1, 3, 4, 6, 9])
    assert v.to_json() == [1, 3, 4, 6, 9]
    a = Root(5, 4, 5)
    assert a.to_json() == {"row": 5, "col": 4}
    flags = a.to_json(flags=True)
    assert set(flags) >= {"row", "col", "in_OR", "in_N", "in_ON", "on_diagonal"}


def test_root_monomial():
    d = 4
    x, y = Root(7, 1, d), Root(5, 2, d)
    m = RootMonomial.from_mapping({x: 2, y: 1})
    assert m.degree == 3 and not m.is_squarefree()
    assert RootMonomial().degree == 0
    assert RootMonomial.from_roots([x]).divides(m)
    assert not m.divides(RootMonomial.from_roots([x, y]))
    assert (m * RootMonomial.from_roots([y])).as_dict() == {x: 2, y: 2}
    assert m.intersection([y]).as_dict() == {y: 1}
    with pytest.raises(ValueError):
        RootMonomial(((x, -1),))


def test_membership_matches_definition():
    for d in (2, 3, 4):
        valid = set(enumerate_isotropic(d))
        for c in combinations(range(1, 2 * d + 1), d):
            ok = all((k in c) != (star(k, d) in c) for k in range(1, d + 1))
            even = sum(1 for e in c if e > d) % 2 == 0
            assert (IndexTuple(c).entries in {v.entries for v in valid}) == (ok and even)
