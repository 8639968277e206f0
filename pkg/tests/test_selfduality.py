"""Hodge star on 2-forms and the (anti-)self-duality of the Weyl operator."""

from fractions import Fraction

from nact.clifford import is_conformally_osserman, random_osserman
from nact.curvature import build_type, pullback, random_curvature_tensor, weyl
from nact.linalg import determinant, identity, mat_add, mat_equal, mat_mul, mat_scale, mat_sub, mat_vec, rank
from nact.selfduality import (
    LAMBDA2_PAIRS,
    curvature_operator_on_lambda2,
    duality_verdict,
    hodge_star,
    lambda2_metric,
    max_abs_entry,
    weyl_split,
)
from nact.scalars import EXACT


def basis6(k):
    return tuple(Fraction(1) if i == k else Fraction(0) for i in range(6))


def test_lambda2_basis_order():
    assert LAMBDA2_PAIRS == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_hodge_star_pinned_table():
    """*(e12)=e34, *(e13)=e24, *(e14)=-e23 and the involutive images."""
    s = hodge_star()
    table = {0: (5, 1), 1: (4, 1), 2: (3, -1), 3: (2, -1), 4: (1, 1), 5: (0, 1)}
    for src, (dst, sign) in table.items():
        assert mat_vec(s, basis6(src)) == tuple(Fraction(sign) * v for v in basis6(dst))


def test_hodge_star_squares_to_identity():
    s = hodge_star()
    assert mat_equal(mat_mul(s, s), identity(6), EXACT)


def test_lambda2_metric_signature():
    m = lambda2_metric()
    diag = tuple(m[i][i] for i in range(6))
    assert diag == (Fraction(1), Fraction(-1), Fraction(-1), Fraction(-1), Fraction(-1), Fraction(1))
    assert all(m[i][j] == 0 for i in range(6) for j in range(6) if i != j)


def test_projectors_split_lambda2():
    s = hodge_star()
    I = identity(6)
    half = Fraction(1, 2)
    p_plus = mat_scale(half, mat_add(I, s))
    p_minus = mat_scale(half, mat_sub(I, s))
    assert mat_equal(mat_mul(p_plus, p_plus), p_plus, EXACT)
    assert mat_equal(mat_mul(p_minus, p_minus), p_minus, EXACT)
    assert rank(p_plus) == 3
    assert rank(p_minus) == 3
    zero = mat_mul(p_plus, p_minus)
    assert all(v == 0 for row in zero for v in row)


def test_weyl_operator_commutes_with_star():
    """The star commutes with the Weyl operator of every valid tensor, so the
    off-diagonal blocks of the split vanish identically in exact mode."""
    for seed in range(6):
        A = random_curvature_tensor(seed)
        split = weyl_split(A)
        assert split.commutator_norm == 0


def test_weyl_split_blocks_are_3x3():
    split = weyl_split(random_curvature_tensor(2))
    assert len(split.w_plus) == 3 and len(split.w_plus[0]) == 3
    assert len(split.w_minus) == 3 and len(split.w_minus[0]) == 3


def test_standard_reconstructions_are_self_dual():
    for seed in (0, 5, 9):
        v = duality_verdict(random_osserman(seed))
        assert v.self_dual or v.anti_self_dual


def test_type_builds_duality_pinned():
    assert duality_verdict(build_type("I", (1, 2, 3))).self_dual
    assert duality_verdict(build_type("II", (1, 1, 2))).self_dual
    assert duality_verdict(build_type("III", (1, 0, 0))).self_dual
    # the canonical 3-block representative carries the opposite orientation
    v = duality_verdict(build_type("IV", (Fraction(2),)))
    assert v.anti_self_dual and not v.self_dual


def test_orientation_flip_swaps_sides():
    A = build_type("IV", (Fraction(2),))
    Q = tuple(
        tuple(Fraction(1 if (r == c and r < 3) else (-1 if r == c else 0)) for c in range(4))
        for r in range(4)
    )
    assert determinant(Q) == -1
    v = duality_verdict(pullback(A, Q))
    assert v.self_dual and not v.anti_self_dual


def test_generic_tensor_is_neither():
    v = duality_verdict(random_curvature_tensor(1))
    assert not v.self_dual and not v.anti_self_dual
    assert max_abs_entry(v.split.w_plus) > 0
    assert max_abs_entry(v.split.w_minus) > 0


def test_duality_equivalence_samples():
    """Conformally Osserman iff the Weyl operator is one-sided."""
    for seed in (1, 4, 7):
        A = random_osserman(seed)
        v = duality_verdict(A)
        assert is_conformally_osserman(A).osserman == (v.self_dual or v.anti_self_dual)
        B = random_curvature_tensor(seed + 50)
        vb = duality_verdict(B)
        assert is_conformally_osserman(B).osserman == (vb.self_dual or vb.anti_self_dual)


def test_curvature_operator_is_lambda2_self_adjoint():
    """The induced operator is self-adjoint for the Lambda^2 inner product."""
    m = lambda2_metric()
    for seed in (3, 8):
        op = curvature_operator_on_lambda2(random_curvature_tensor(seed))
        lhs = mat_mul(m, op)
        rhs = tuple(tuple(lhs[j][i] for j in range(6)) for i in range(6))
        assert mat_equal(lhs, rhs, EXACT)
