"""Exact spectral analysis of 3x3 restricted Jacobi matrices."""

from fractions import Fraction

import pytest

from nact.scalars import FLOAT, QSqrt2
from nact.spectral import (
    RealAlgebraic,
    peval,
    real_roots_squarefree,
    spectral_analysis_3,
)


def M(rows):
    return tuple(tuple(Fraction(v) if isinstance(v, int) else v for v in row) for row in rows)


def test_rational_roots():
    # (t - 1)(t + 2) = t^2 + t - 2, little-endian
    roots = real_roots_squarefree((Fraction(-2), Fraction(1), Fraction(1)))
    assert [r.exact for r in roots] == [Fraction(-2), Fraction(1)]


def test_sqrt2_roots_are_field_elements():
    # t^2 - 2
    roots = real_roots_squarefree((Fraction(-2), Fraction(0), Fraction(1)))
    assert roots[0].exact == QSqrt2(0, -1)
    assert roots[1].exact == QSqrt2(0, 1)


def test_irrational_cubic_roots_isolated():
    # t^3 - 3t + 1 has three real irrational roots, none in Q(sqrt2)
    p = (Fraction(1), Fraction(-3), Fraction(0), Fraction(1))
    roots = real_roots_squarefree(p)
    assert len(roots) == 3
    for r in roots:
        assert r.exact is None
        assert abs(peval(p, Fraction(r.approx_float()).limit_denominator(10**6))) < 1e-4
    assert roots[0] < roots[1] < roots[2]


def test_real_algebraic_ordering_mixed():
    p = (Fraction(-2), Fraction(0), Fraction(1))  # sqrt2
    r = real_roots_squarefree(p)[1]
    assert r > Fraction(1)
    assert r < Fraction(3, 2)
    assert RealAlgebraic.from_exact(Fraction(2)) > r


def test_spectral_distinct_eigenvalues():
    rep = spectral_analysis_3(M([[1, 0, 0], [0, 2, 0], [0, 0, 3]]))
    assert [(v.exact, m) for v, m in rep.real_eigenvalues] == [
        (Fraction(1), 1),
        (Fraction(2), 1),
        (Fraction(3), 1),
    ]
    assert rep.complex_pair is None
    assert rep.max_block_size == 1


def test_spectral_triple_root_diagonalizable():
    rep = spectral_analysis_3(M([[2, 0, 0], [0, 2, 0], [0, 0, 2]]))
    assert [(v.exact, m) for v, m in rep.real_eigenvalues] == [(Fraction(2), 3)]
    assert rep.max_block_size == 1


def test_spectral_jordan_block_2():
    # [[a, 0, 0], [0, a, 1], [0, 0, a]] has a 2-block at a
    rep = spectral_analysis_3(M([[5, 0, 0], [0, 5, 1], [0, 0, 5]]))
    assert rep.max_block_size == 2


def test_spectral_jordan_block_3():
    rep = spectral_analysis_3(M([[1, 1, 0], [0, 1, 1], [0, 0, 1]]))
    assert rep.max_block_size == 3
    assert [(v.exact, m) for v, m in rep.real_eigenvalues] == [(Fraction(1), 3)]


def test_spectral_complex_pair():
    # rotation block: eigenvalues 3, +/- i
    rep = spectral_analysis_3(M([[0, -1, 0], [1, 0, 0], [0, 0, 3]]))
    pair = rep.complex_pair
    assert pair is not None
    assert pair.real == 0 or pair.real.exact == 0
    assert rep.real_eigenvalues[0][0].exact == Fraction(3)


def test_spectral_complex_pair_irrational_imag():
    # t^2 + 3 factor: imaginary part sqrt3 is not in the field, approx kept
    rep = spectral_analysis_3(M([[0, -3, 0], [1, 0, 0], [0, 0, 1]]))
    pair = rep.complex_pair
    assert pair is not None
    if pair.imag is None:
        assert pair.imag_approx == pytest.approx(3**0.5, rel=1e-6)


def test_float_branch_matches_exact_on_jordan_3():
    exact_rep = spectral_analysis_3(M([[1, 1, 0], [0, 1, 1], [0, 0, 1]]))
    float_rep = spectral_analysis_3(
        ((1.0, 1.0, 0.0), (0.0, 1.0, 1.0), (0.0, 0.0, 1.0)), FLOAT
    )
    assert float_rep.max_block_size == exact_rep.max_block_size == 3
    assert float_rep.real_eigenvalues[0][1] == 3


def test_float_branch_complex_pair():
    rep = spectral_analysis_3(((0.0, -1.0, 0.0), (1.0, 0.0, 0.0), (0.0, 0.0, 3.0)), FLOAT)
    assert rep.complex_pair is not None
    assert rep.complex_pair.imag_approx == pytest.approx(1.0)


def test_char_poly_exposed():
    rep = spectral_analysis_3(M([[1, 0, 0], [0, 2, 0], [0, 0, 3]]))
    # (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    assert rep.char_poly == (Fraction(-6), Fraction(11), Fraction(-6), Fraction(1))
