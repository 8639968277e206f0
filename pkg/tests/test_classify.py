"""Jordan-type classification and field constancy."""

from fractions import Fraction

import pytest

from nact.errors import NotOsserman
from nact.classify import (
    classify,
    classify_jacobi,
    field_constancy_check,
    keys_equal,
)
from nact.clifford import random_osserman
from nact.curvature import build_type, pullback, random_curvature_tensor, to_float
from nact.linalg import random_isometry
from nact.scalars import FLOAT
from nact.spectral import RealAlgebraic


def test_classify_type_I_sorted_params():
    t = classify(build_type("I", (3, 1, 2)))
    assert t.tag == "I"
    assert t.params == (Fraction(1), Fraction(2), Fraction(3))
    assert all(isinstance(p, Fraction) for p in t.params)


def test_classify_type_I_with_multiplicity():
    t = classify(build_type("I", (2, 2, 5)))
    assert t.tag == "I"
    assert t.params == (Fraction(2), Fraction(2), Fraction(5))


def test_classify_type_II():
    t = classify(build_type("II", (Fraction(1, 2), 2, -1)))
    assert t.tag == "II"
    alpha, beta, gamma = t.params
    assert alpha == Fraction(1, 2)
    assert beta == Fraction(2)
    assert gamma == Fraction(-1)


def test_classify_type_II_negative_beta_normalized():
    """The complex pair is alpha +/- i beta; beta is reported positive."""
    t = classify(build_type("II", (0, Fraction(-3, 2), 1)))
    assert t.tag == "II"
    assert t.params[1] == Fraction(3, 2)


def test_classify_type_III_epsilon_signs():
    t = classify(build_type("III", (1, 0, 0)))
    assert (t.tag, t.epsilon) == ("III", 1)
    assert t.params == (1, Fraction(0), Fraction(0))
    t = classify(build_type("III", (-1, Fraction(1, 2), 2)))
    assert (t.tag, t.epsilon) == ("III", -1)
    assert t.params == (-1, Fraction(1, 2), Fraction(2))


def test_classify_type_IV():
    t = classify(build_type("IV", (Fraction(-3, 4),)))
    assert t.tag == "IV"
    assert t.params == (Fraction(-3, 4),)


def test_classify_raises_on_non_osserman():
    with pytest.raises(NotOsserman):
        classify(random_curvature_tensor(1))


def test_classify_is_frame_independent():
    base = build_type("III", (1, Fraction(3, 2), -2))
    t0 = classify(base)
    for seed in (4, 9):
        t = classify(pullback(base, random_isometry(seed)))
        assert keys_equal(t0.key(), t.key())
        assert t.epsilon == t0.epsilon


def test_classify_conformal_variant():
    A = random_osserman(6)
    t = classify(A, conformal=True)
    assert t.tag in ("I", "II", "III", "IV")


def test_classify_float_mode_all_types():
    for tag, params in (("I", (1, 2, 3)), ("II", (Fraction(1, 2), 2, -1)),
                        ("III", (1, Fraction(3, 2), -2)), ("IV", (Fraction(3, 2),))):
        t = classify(to_float(build_type(tag, params)))
        assert t.tag == tag
        assert t.mode == FLOAT


def test_classify_unwraps_field_eigenvalues():
    """Eigenvalues inside Q(sqrt2) come back as plain field elements."""
    M = ((Fraction(0), Fraction(0), Fraction(0)),
         (Fraction(0), Fraction(0), Fraction(2)),
         (Fraction(0), Fraction(2), Fraction(0)))
    t = classify_jacobi(M)
    assert t.tag == "I"
    assert not any(isinstance(p, RealAlgebraic) for p in t.params)


def test_keys_equal_distinguishes_epsilon():
    a = classify(build_type("III", (1, 1, 0)))
    b = classify(build_type("III", (-1, -1, 0)))
    # same repeated eigenvalue magnitude but opposite block sign
    assert a.char_poly == b.char_poly
    assert not keys_equal(a.key(), b.key())


def test_field_constancy_constant_family():
    base = random_osserman(3)
    fam = [base] + [pullback(base, random_isometry(s)) for s in (1, 2, 3)]
    res = field_constancy_check(fam)
    assert res.constant and res.first_deviation is None
    assert res.type0.tag == classify(base).tag


def test_field_constancy_locates_parameter_change():
    same = build_type("I", (1, 2, 3))
    other = build_type("I", (1, 2, 4))
    res = field_constancy_check([same, same, same, other, same])
    assert not res.constant
    assert res.first_deviation == 3


def test_field_constancy_char_poly_equal_pair():
    """III(1,0,0) and IV(0) share the characteristic polynomial t^3 and are
    separated only by the Jordan block structure."""
    a, b = build_type("III", (1, 0, 0)), build_type("IV", (0,))
    ta, tb = classify(a), classify(b)
    assert ta.char_poly == tb.char_poly
    res = field_constancy_check([a, b])
    assert not res.constant
    assert res.first_deviation == 1


def test_field_constancy_raises_with_position():
    fam = [random_osserman(1), random_curvature_tensor(2)]
    with pytest.raises(NotOsserman) as err:
        field_constancy_check(fam)
    assert err.value.index == 1


def test_field_constancy_conformal():
    base = random_osserman(9)
    res = field_constancy_check([base, pullback(base, random_isometry(5))], conformal=True)
    assert res.constant


def test_field_constancy_empty():
    res = field_constancy_check([])
    assert res.constant and res.type0 is None
