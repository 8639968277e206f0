"""Metric linear algebra on the signature (2,2) model space."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nact.linalg import (
    DIM,
    EPS,
    basis_vector,
    cayley,
    char_poly,
    determinant,
    identity,
    inner,
    is_isometry,
    is_self_adjoint,
    is_skew_adjoint,
    mat_equal,
    mat_inverse,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_vec,
    metric_adjoint,
    metric_matrix,
    nullspace,
    random_isometry,
    rank,
    trace,
    transpose,
    zero_matrix,
)
from nact.scalars import EXACT, FLOAT

small = st.fractions(min_value=-5, max_value=5, max_denominator=3)


def matrices(n=DIM):
    return st.lists(
        st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(lambda rows: tuple(tuple(r) for r in rows))


def test_metric_signature():
    g = metric_matrix(EXACT)
    for i in range(DIM):
        assert g[i][i] == EPS[i]
    assert EPS == (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))


def test_inner_pinned():
    e1, e3 = basis_vector(0), basis_vector(2)
    assert inner(e1, e1) == -1
    assert inner(e3, e3) == 1
    assert inner(e1, e3) == 0


@given(matrices(), matrices())
def test_transpose_antihomomorphism(a, b):
    assert transpose(mat_mul(a, b)) == mat_mul(transpose(b), transpose(a))


@given(matrices())
def test_metric_adjoint_is_involutive(a):
    assert metric_adjoint(metric_adjoint(a)) == a


@given(matrices())
@settings(max_examples=40)
def test_adjoint_characterizes_inner_product(a):
    """g(Ax, y) == g(x, A*y) on all basis pairs."""
    astar = metric_adjoint(a)
    for i in range(DIM):
        x = basis_vector(i)
        ax = mat_vec(a, x)
        for j in range(DIM):
            y = basis_vector(j)
            assert inner(ax, y) == inner(x, mat_vec(astar, y))


def test_char_poly_pinned():
    # diag(1, 2, 3, 4): p(t) = (t-1)(t-2)(t-3)(t-4), little-endian coefficients
    d = tuple(
        tuple(Fraction(i + 1) if i == j else Fraction(0) for j in range(DIM))
        for i in range(DIM)
    )
    assert char_poly(d) == (Fraction(24), Fraction(-50), Fraction(35), Fraction(-10), Fraction(1))


@given(matrices())
@settings(max_examples=40)
def test_char_poly_trace_and_det(a):
    p = char_poly(a)
    assert p[4] == 1
    assert p[3] == -trace(a)
    assert p[0] == determinant(a)


def test_rank_and_nullspace():
    a = (
        (Fraction(1), Fraction(2), Fraction(3), Fraction(4)),
        (Fraction(2), Fraction(4), Fraction(6), Fraction(8)),
        (Fraction(0), Fraction(0), Fraction(1), Fraction(1)),
        (Fraction(0), Fraction(0), Fraction(2), Fraction(2)),
    )
    assert rank(a) == 2
    ns = nullspace(a)
    assert len(ns) == 2
    for v in ns:
        assert all(c == 0 for c in mat_vec(a, v))


def test_mat_inverse_round_trip():
    q = random_isometry(5)
    qinv = mat_inverse(q, EXACT)
    assert mat_equal(mat_mul(q, qinv), identity(), EXACT)


def test_mat_inverse_singular():
    assert mat_inverse(zero_matrix(DIM, EXACT), EXACT) is None


@pytest.mark.parametrize("seed", range(12))
def test_random_isometry_preserves_metric(seed):
    q = random_isometry(seed)
    assert is_isometry(q, EXACT)
    g = metric_matrix(EXACT)
    assert mat_equal(mat_mul(transpose(q), mat_mul(g, q)), g, EXACT)


def test_random_isometry_deterministic_and_varied():
    assert random_isometry(3) == random_isometry(3)
    assert random_isometry(3) != random_isometry(4)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=25)
def test_cayley_of_skew_is_isometry(seed):
    q = random_isometry(seed)
    assert is_isometry(q, EXACT)


def test_cayley_pinned_shape():
    """Cayley transform of a g-skew matrix lands in the isometry group."""
    s = zero_matrix(DIM, EXACT)
    s = tuple(tuple(Fraction(1) if (i, j) == (0, 1) else (Fraction(-1) if (i, j) == (1, 0) else s[i][j]) for j in range(DIM)) for i in range(DIM))
    # s is g-skew for g = diag(-1,-1,1,1): check then transform
    assert is_skew_adjoint(s, EXACT)
    assert is_isometry(cayley(s, EXACT), EXACT)


def test_self_vs_skew_adjoint():
    g = metric_matrix(EXACT)
    assert is_self_adjoint(g, EXACT)
    assert not is_skew_adjoint(g, EXACT)


def test_identity_modes():
    assert identity()[0][0] == Fraction(1)
    assert identity(6, FLOAT)[5][5] == 1.0
    assert len(identity(6)) == 6


@given(matrices(), small)
def test_scale_linearity(a, c):
    assert mat_sub(mat_scale(c, a), mat_scale(c, a)) == zero_matrix(DIM, EXACT)
    assert trace(mat_scale(c, a)) == c * trace(a)
