"""Clifford triples, the modified decomposition, and the Osserman decision."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nact.errors import InvalidTriple, NotAnIsometry
from nact.clifford import (
    CliffordTriple,
    ModifiedCliffordDecomposition,
    brute_force_osserman_oracle,
    conjugate_triple,
    decompose,
    decomposition_from_jacobi,
    is_conformally_osserman,
    is_osserman,
    modified_term,
    osserman_witness,
    random_osserman,
    random_unit_vector,
    reconstruct,
    standard_triple,
    verify_triple,
)
from nact.curvature import (
    build_type,
    jacobi_matrix_e1,
    kulkarni_nomizu,
    max_abs_diff,
    pullback,
    r0,
    random_curvature_tensor,
    ricci,
    tensor_add,
    tensors_equal,
    weyl,
)
from nact.linalg import (
    DIM,
    basis_vector,
    identity,
    inner,
    mat_equal,
    mat_mul,
    mat_scale,
    mat_vec,
    metric_matrix,
    random_isometry,
)
from nact.scalars import EXACT

lam = st.fractions(min_value=-4, max_value=4, max_denominator=3)
lam7 = st.tuples(lam, lam, lam, lam, lam, lam, lam)


def standard_record(lams):
    return ModifiedCliffordDecomposition(*lams, triple=standard_triple(EXACT))


# -- triples -------------------------------------------------------------------


def test_standard_triple_relations():
    t = standard_triple()
    p1, p2, p3 = t.matrices()
    I = identity()
    assert mat_equal(mat_mul(p1, p1), mat_scale(-1, I), EXACT)
    assert mat_equal(mat_mul(p2, p2), I, EXACT)
    assert mat_equal(mat_mul(p3, p3), I, EXACT)
    assert mat_equal(p3, mat_mul(p2, p1), EXACT)


def test_standard_triple_adapted_to_e1():
    t = standard_triple()
    e1 = basis_vector(0)
    for k, p in enumerate(t.matrices()):
        assert mat_vec(p, e1) == basis_vector(k + 1)


def test_triple_anticommutators():
    p1, p2, p3 = standard_triple().matrices()
    for a, b in itertools.combinations((p1, p2, p3), 2):
        s = tuple(
            tuple(x + y for x, y in zip(r1, r2))
            for r1, r2 in zip(mat_mul(a, b), mat_mul(b, a))
        )
        assert all(v == 0 for row in s for v in row)


def test_invalid_triple_rejected():
    p1, p2, p3 = standard_triple().matrices()
    with pytest.raises(InvalidTriple):
        verify_triple(CliffordTriple(p2, p1, p3, EXACT))


def test_conjugate_triple_keeps_relations():
    t = conjugate_triple(standard_triple(), random_isometry(9))
    verify_triple(t)


def test_conjugate_triple_requires_isometry():
    bad = tuple(
        tuple(Fraction(2) if i == j else Fraction(0) for j in range(DIM)) for i in range(DIM)
    )
    with pytest.raises(NotAnIsometry):
        conjugate_triple(standard_triple(), bad)


# -- decomposition and reconstruction -------------------------------------------


def test_decompose_r0_pinned():
    d = decompose(r0(), 0)
    c = d.coefficients()
    assert c["lambda0"] == 0
    assert c["lambda1"] == Fraction(-1, 3)
    assert c["lambda2"] == Fraction(1, 3)
    assert c["lambda3"] == Fraction(1, 3)
    assert c["lambda12"] == c["lambda13"] == c["lambda23"] == 0


def test_gauge_identity():
    """3 R0 = -R_phi1 + R_phi2 + R_phi3 for any verified triple."""
    for seed in (None, 2, 5, 8):
        t = standard_triple() if seed is None else conjugate_triple(standard_triple(), random_isometry(seed))
        d = ModifiedCliffordDecomposition(
            Fraction(-3), Fraction(-1), Fraction(1), Fraction(1), 0, 0, 0, triple=t
        )
        z = reconstruct(d)
        assert max_abs_diff(z, tensor_add(z, z)) == 0  # z == 0


@given(lam7)
@settings(max_examples=60, deadline=None)
def test_round_trip_lambda_records(lams):
    """decompose(reconstruct(d), lambda0) recovers every coefficient."""
    d = standard_record(lams)
    A = reconstruct(d)
    back = decompose(A, lams[0])
    assert back.coefficients() == d.coefficients()


@given(lam7, lam)
@settings(max_examples=40, deadline=None)
def test_gauge_freedom_reconstructs_same_tensor(lams, other_gauge):
    d = standard_record(lams)
    A = reconstruct(d)
    regauged = decompose(A, other_gauge)
    assert tensors_equal(reconstruct(regauged), A)


@given(lam7)
@settings(max_examples=40, deadline=None)
def test_restricted_jacobi_closed_form(lams):
    """J(e1) of a reconstruction in terms of the coefficients."""
    l0, l1, l2, l3, l12, l13, l23 = lams
    A = reconstruct(standard_record(lams))
    expected = (
        (l0 - 3 * l1, 3 * l12, 3 * l13),
        (-3 * l12, l0 + 3 * l2, 3 * l23),
        (-3 * l13, 3 * l23, l0 + 3 * l3),
    )
    assert jacobi_matrix_e1(A) == expected


def test_decomposition_from_jacobi_inverts_closed_form():
    J3 = ((Fraction(2), Fraction(3), Fraction(-1)), (Fraction(-3), Fraction(0), Fraction(5)), (Fraction(1), Fraction(5), Fraction(4)))
    d = decomposition_from_jacobi(J3, Fraction(1, 2))
    A = reconstruct(d)
    assert jacobi_matrix_e1(A) == J3


def test_decomposition_from_jacobi_accepts_ints():
    d = decomposition_from_jacobi(((2, 0, 0), (0, 2, 0), (0, 0, 5)))
    assert reconstruct(d).mode == EXACT


def test_modified_term_expansion():
    t = standard_triple()
    T12 = modified_term(t, 1, 2)
    # lambda12 = 1 record must reproduce the raw term
    d = ModifiedCliffordDecomposition(0, 0, 0, 0, Fraction(1), 0, 0, triple=t)
    assert tensors_equal(reconstruct(d), T12)


def test_ricci_of_reconstruction_is_einstein():
    """Ric = 3 (l0 - l1 + l2 + l3) g for every coefficient record."""
    rng = random.Random(4)
    g = metric_matrix(EXACT)
    for _ in range(25):
        lams = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(7)]
        A = reconstruct(standard_record(lams))
        c = 3 * (lams[0] - lams[1] + lams[2] + lams[3])
        assert mat_equal(ricci(A), tuple(tuple(c * v for v in row) for row in g), EXACT)


# -- the Osserman decision -------------------------------------------------------


def test_reconstructions_are_osserman():
    for seed in range(10):
        A = random_osserman(seed)
        d = is_osserman(A)
        assert d.osserman
        assert d.residual == 0
        assert tensors_equal(reconstruct(d.decomposition), A)


def test_type_builds_are_osserman_all_four():
    for tag, params in (("I", (1, 2, 3)), ("II", (1, Fraction(1, 2), 2)),
                        ("III", (-1, 1, 0)), ("IV", (Fraction(5, 2),))):
        d = is_osserman(build_type(tag, params))
        assert d.osserman, tag
        # the returned decomposition reconstructs the input exactly,
        # over the mirrored triple when the standard gauge misses
        assert tensors_equal(reconstruct(d.decomposition), d.target)


def test_type_IV_needs_the_mirrored_gauge():
    """The canonical 3-block tensor is the mirror image of its own
    standard-gauge reconstruction: equal Jacobi readings, different tensors."""
    A = build_type("IV", (Fraction(0),))
    dec = decompose(A, 0)
    R = reconstruct(dec)
    assert not tensors_equal(R, A)
    assert jacobi_matrix_e1(R) == jacobi_matrix_e1(A)
    Q = tuple(
        tuple(Fraction(1 if r == c == 0 else (-1 if r == c else 0)) for c in range(DIM))
        for r in range(DIM)
    )
    assert tensors_equal(pullback(R, Q), A)
    assert is_osserman(A).osserman
    assert brute_force_osserman_oracle(A, 32, 7)


def test_sign_flips_stay_within_the_two_gauges():
    """Every e1-fixing sign flip maps a reconstruction onto the standard or
    the mirrored reconstruction of its own Jacobi readings (by det)."""
    lams = [Fraction(1), Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(1, 4), Fraction(-1), Fraction(3, 2)]
    R = reconstruct(standard_record(lams))
    for signs in itertools.product((1, -1), repeat=3):
        Q = tuple(
            tuple(Fraction(1 if r == c == 0 else (signs[r - 1] if r == c else 0)) for c in range(DIM))
            for r in range(DIM)
        )
        B = pullback(R, Q)
        d = is_osserman(B)
        assert d.osserman
        assert d.residual == 0
        assert tensors_equal(reconstruct(d.decomposition), B)


def test_generic_tensors_are_not_osserman():
    for seed in range(10):
        A = random_curvature_tensor(seed)
        d = is_osserman(A)
        assert not d.osserman
        assert d.decomposition is None
        assert d.residual > 0


def test_decision_agrees_with_sampling_oracle():
    for k in range(15):
        A = random_osserman(300 + k)
        assert is_osserman(A).osserman == brute_force_osserman_oracle(A, 48, k)
        B = random_curvature_tensor(700 + k)
        assert is_osserman(B).osserman == brute_force_osserman_oracle(B, 48, k)


def test_witness_on_non_osserman():
    B = random_curvature_tensor(5)
    w = osserman_witness(B, 64, 1)
    assert w is not None
    x, y = w
    assert inner(x, x) == -1 and inner(y, y) == -1


def test_witness_none_on_osserman():
    assert osserman_witness(random_osserman(2), 48, 1) is None


def test_char_identity_rejects_einstein_non_osserman():
    """Weyl parts of generic tensors are Einstein, so they pass the first
    characteristic stage and must be rejected at the quadratic one."""
    from nact.clifford import _char_identity_osserman

    for seed in (3, 21):
        W = weyl(random_curvature_tensor(seed))
        assert all(v == 0 for row in ricci(W) for v in row)
        assert not _char_identity_osserman(W)


def test_char_identity_accepts_known_osserman():
    from nact.clifford import _char_identity_osserman

    assert _char_identity_osserman(build_type("IV", (Fraction(1),)))
    assert _char_identity_osserman(random_osserman(8))
    assert _char_identity_osserman(pullback(build_type("IV", (Fraction(1),)), random_isometry(99)))


def test_conformally_osserman_vs_osserman():
    rng = random.Random(12)
    A = random_osserman(12)
    # add a pure-trace perturbation: conformal class keeps the Weyl part
    h = tuple(tuple(Fraction(rng.randint(-2, 2)) for _ in range(DIM)) for _ in range(DIM))
    h = tuple(tuple(h[i][j] + h[j][i] for j in range(DIM)) for i in range(DIM))
    B = tensor_add(A, kulkarni_nomizu(h, metric_matrix(EXACT)))
    dc = is_conformally_osserman(B)
    assert dc.osserman
    assert tensors_equal(dc.target, weyl(B))
    assert dc.decomposition.trace_constraint() == 0


def test_unit_vector_sampler():
    rng = random.Random(0)
    for _ in range(20):
        x = random_unit_vector(rng, timelike=True)
        assert inner(x, x) == -1
    for _ in range(10):
        y = random_unit_vector(rng, timelike=False)
        assert inner(y, y) == 1


def test_random_osserman_deterministic():
    assert tensors_equal(random_osserman(42), random_osserman(42))
    assert not tensors_equal(random_osserman(42), random_osserman(43))
