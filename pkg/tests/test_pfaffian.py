import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orthocone.algebra import QQ, PolynomialRing, PrimeField, determinant, make_order
from orthocone.lattice import InvalidIndexError, IsotropicIndex, Root, enumerate_isotropic, star, top_element
from orthocone.pfaffian import (
    MAX_SYMBOLIC_N,
    AntiSkewMatrix,
    MatrixError,
    PatchMatrix,
    build_patch_matrix,
    f_tau,
    generator_indices,
    generators,
    pfaffian,
    pfaffian_by_column,
    pfaffian_expansions,
    pfaffian_submatrix,
    pfaffian_term_count,
    ring_for,
    sub_pfaffian,
    v_degree,
    verify_det_identity,
    verify_minor_identity,
)
from orthocone.verify import classical_pfaffian

EQ_MATRIX = [
    "1 0 0 0 0",
    "X21 X23 X24 X26 0",
    "0 1 0 0 0",
    "0 0 1 0 0",
    "X51 X53 X54 0 -X26",
    "0 0 0 1 0",
    "X71 X73 0 -X54 -X24",
    "X81 0 -X73 -X53 -X23",
    "0 0 0 0 1",
    "0 -X81 -X71 -X51 -X21",
]


def test_patch_matrix_reproduces_display():
    P = build_patch_matrix(IsotropicIndex.of([1, 3, 4, 6, 9]))
    got = [" ".join(x.replace("X[", "X").replace(",", "").replace("]", "") for x in row) for row in P.rows()]
    assert got == EQ_MATRIX
    assert P.entry(5, 9) == (-1, Root(2, 6, 5))
    assert P.entry(2, 1) == (1, Root(2, 1, 5))
    with pytest.raises(InvalidIndexError):
        P.entry(5, 2)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_patch_matrix_structure(d):
    for v in enumerate_isotropic(d):
        P = PatchMatrix(v)
        R = {a for a in ring_for(v).variables}
        assert P.variables() == R
        for c in v.entries:
            assert P.entry(c, c) == (1, None)
            assert P.entry(star(c, d), c) == (0, None)
        assert P.to_json()["v"] == list(v.entries)


def test_pfaffian_base_cases():
    assert pfaffian(AntiSkewMatrix([])) == 1
    A = AntiSkewMatrix.generic(1)
    (x,) = A.ring.gens()
    assert pfaffian(A) == x
    assert A[1, 1] == x and A[2, 2] == -x


def test_pfaffian_of_displayed_4x4():
    ring = PolynomialRing(list("abcdefghij"))
    g = {n: ring.gen(n) for n in "abcdefghij"}
    z = ring.zero()
    b, c, d_, f, g_, i = g["b"], g["c"], g["d"], g["f"], g["g"], g["i"]
    A = AntiSkewMatrix([
        [b, c, d_, z],
        [f, g_, z, -d_],
        [i, z, -g_, -c],
        [z, -i, -f, -b],
    ])
    assert pfaffian(A) == d_ * i - c * f + b * g_


def test_malformed_matrix_rejected():
    with pytest.raises(MatrixError):
        AntiSkewMatrix([[1, 2], [3, 4]])
    with pytest.raises(MatrixError):
        AntiSkewMatrix([[0, 1, 2]])
    with pytest.raises(MatrixError):
        AntiSkewMatrix([[1, 0], [0]])


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 3), (3, 15), (4, 105), (5, 945)])
def test_term_count_formula(n, expected):
    assert pfaffian_term_count(n) == expected


@pytest.mark.parametrize("n", range(0, 5))
def test_generic_term_count(n):
    q = pfaffian(AntiSkewMatrix.generic(n))
    terms = len(q.terms) if hasattr(q, "terms") else 1
    assert terms == pfaffian_term_count(n)


def test_symbolic_size_guard():
    A = AntiSkewMatrix.generic(MAX_SYMBOLIC_N + 1)
    with pytest.raises(MatrixError):
        pfaffian(A)


def test_generic_n2_against_matchings():
    A = AntiSkewMatrix.generic(2)
    # reverse the columns: anti-diagonal skew becomes ordinary skew
    M = [[A[i, 5 - j] for j in range(1, 5)] for i in range(1, 5)]
    assert pfaffian(A) in (classical_pfaffian(M, (0, 1, 2, 3)), -classical_pfaffian(M, (0, 1, 2, 3)))


@pytest.mark.parametrize("field", [QQ, PrimeField(32003), PrimeField(7)])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_identities_random(field, n):
    rng = random.Random(n * 101 + (field.p if hasattr(field, "p") else 0))
    for _ in range(15):
        A = AntiSkewMatrix.random(n, field, rng)
        assert verify_det_identity(A)
        values = set(pfaffian_expansions(A).values())
        assert len(values) == 1
        a = rng.randint(1, 2 * n)
        others = [x for x in range(1, 2 * n + 1) if x != a]
        if others:
            j, k = rng.choice(others), rng.choice(others)
            assert verify_minor_identity(A, a, j, k)


def test_minor_identity_with_equal_indices_is_det_identity():
    rng = random.Random(5)
    A = AntiSkewMatrix.random(3, QQ, rng)
    for a in range(1, 7):
        for j in range(1, 7):
            if j != a:
                assert verify_minor_identity(A, a, j, j)
    with pytest.raises(MatrixError):
        verify_minor_identity(A, 2, 2, 3)


def test_n1_det_identity_by_hand():
    A = AntiSkewMatrix([[Fraction(3), 0], [0, Fraction(-3)]], QQ)
    assert determinant(A.entries, QQ) == -9
    assert pfaffian(A) == 3
    assert verify_det_identity(A)


def test_expansion_index_validation():
    A = AntiSkewMatrix.random(2, QQ, random.Random(0))
    with pytest.raises(MatrixError):
        pfaffian(A, 5)
    with pytest.raises(MatrixError):
        pfaffian_by_column(A, 0)
    assert pfaffian(A, 4) == pfaffian_by_column(A, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.randoms(use_true_random=False))
def test_row_column_duality(n, rnd):
    A = AntiSkewMatrix.random(n, PrimeField(32003), rnd)
    m = rnd.randint(1, 2 * n)
    assert pfaffian(A, m) == pfaffian_by_column(A, m) == pfaffian(A)


def test_sub_pfaffian_deletes_rows_and_star_columns():
    A = AntiSkewMatrix.generic(3)
    q = sub_pfaffian(A, (1, 2))
    # rows 3..6 and columns 1..4 remain
    B = AntiSkewMatrix([[A[i, j] for j in range(1, 5)] for i in range(3, 7)])
    assert q == pfaffian(B)


def test_example_generators():
    v = IsotropicIndex.of([1, 2, 3, 4, 5])
    w = IsotropicIndex.of([3, 4, 5, 9, 10])
    taus = [t.entries for t in generator_indices(v, w)]
    assert taus == [(1, 6, 7, 8, 9), (2, 6, 7, 8, 10), (3, 6, 7, 9, 10), (4, 6, 8, 9, 10), (5, 7, 8, 9, 10)]
    ring = ring_for(v, aliases=True)
    texts = [g.format(make_order("hlex", ring)) for g in generators(v, w, ring)]
    assert texts == ["d*i - c*f + b*g", "d*h - c*e + a*g", "d*j - b*e + a*f",
                     "c*j - b*h + a*i", "g*j - f*h + e*i"]


def test_f_tau_examples():
    v = IsotropicIndex.of([1, 2, 3, 4, 5])
    ring = ring_for(v, aliases=True)
    hl = make_order("hlex", ring)
    assert f_tau(v, IsotropicIndex.of([5, 7, 8, 9, 10]), ring).format(hl) == "g*j - f*h + e*i"
    assert f_tau(v, v, ring) == ring.one()


def test_generators_edge_cases():
    v = IsotropicIndex.of([1, 2, 3, 4, 5])
    assert generators(v, top_element(5)) == []
    with pytest.raises(InvalidIndexError):
        generators(IsotropicIndex.of([3, 4, 5, 9, 10]), v)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_homogeneous_of_v_degree(d):
    for v in enumerate_isotropic(d):
        ring = ring_for(v)
        patch = PatchMatrix(v)
        for tau in enumerate_isotropic(d):
            A = pfaffian_submatrix(v, tau, ring, patch)
            assert A.violation() is None
            f = pfaffian(A)
            assert f.is_homogeneous() and f.degree() == v_degree(v, tau)


def test_prime_field_generators_match_rationals():
    v = IsotropicIndex.of([1, 2, 3, 4, 5])
    w = IsotropicIndex.of([3, 4, 5, 9, 10])
    over_q = generators(v, w, ring_for(v))
    over_p = generators(v, w, ring_for(v, PrimeField(32003)))
    assert [set(f.terms) for f in over_q] == [set(f.terms) for f in over_p]
