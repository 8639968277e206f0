"""Jordan-type classification of Osserman curvature models.

The restricted Jacobi operator of a (timelike) Osserman tensor on the
neutral 4-space falls into exactly one of four normal forms:

    I   - diagonalizable with three real eigenvalues,
    II  - one real eigenvalue and a complex conjugate pair,
    III - a 2x2 Jordan block (sign epsilon) plus one more eigenvalue,
    IV  - a 3x3 Jordan block (triple eigenvalue, sqrt(2)/2 nilpotent part).

The classification decides everything exactly from the characteristic
polynomial structure plus, for type III, the sign of the rank-one form
g((J - m I)v, v) on the generalized eigenspace of the repeated root m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import InternalError, NotOsserman
from .clifford import is_conformally_osserman, is_osserman
from .curvature import CurvatureTensor, jacobi_matrix_e1
from .linalg import Matrix, identity, mat_mul, mat_scale, mat_sub, mat_vec, nullspace
from .scalars import EXACT, FLOAT, check_mode, scalars_equal, sign
from .spectral import RealAlgebraic, SpectralReport3, spectral_analysis_3

# restriction of g to span(e2, e3, e4)
_EPS3 = (Fraction(-1), Fraction(1), Fraction(1))


def _inner3(x, y):
    return sum(_EPS3[i] * x[i] * y[i] for i in range(3))


def _plain(v):
    """Strip the RealAlgebraic wrapper whenever the value is a field element."""
    if isinstance(v, RealAlgebraic) and v.is_exact:
        return v.exact
    return v


@dataclass(frozen=True)
class OssermanType:
    """The Jordan type of an Osserman model.

    ``params`` is the per-type payload:
      I   -> the three real Jacobi eigenvalues, ascending, with multiplicity
      II  -> (alpha, beta, gamma): complex pair alpha +/- i beta, real gamma
      III -> (epsilon, alpha, beta) with the repeated eigenvalue epsilon*alpha
      IV  -> (alpha,) the triple eigenvalue

    ``char_poly`` and ``epsilon`` together form the exact comparison key
    used for field-constancy checks: two classifications agree exactly when
    tag, characteristic polynomial, and (for III) epsilon agree.
    """

    tag: str
    params: Tuple
    char_poly: Tuple
    epsilon: Optional[int] = None
    mode: str = EXACT

    def key(self):
        return (self.tag, self.char_poly, self.epsilon)


def keys_equal(k1, k2, mode: str = EXACT) -> bool:
    if k1[0] != k2[0] or k1[2] != k2[2]:
        return False
    return all(scalars_equal(a, b, mode) for a, b in zip(k1[1], k2[1]))


def _epsilon_sign(J3: Matrix, m, mode: str) -> int:
    """Sign of the rank-one form v -> g((J - m I)v, v) on ker((J - m I)^2)."""
    N = mat_sub(J3, mat_scale(m, identity(3, mode)))
    if mode == FLOAT:
        return _epsilon_sign_float(N)
    E = nullspace(mat_mul(N, N))
    if not E:
        raise InternalError("repeated eigenvalue with trivial generalized eigenspace")
    for u in E:
        h = _inner3(mat_vec(N, u), u)
        s = sign(h)
        if s != 0:
            return s
    raise InternalError("rank-one sign form vanished on a whole basis")


def _epsilon_sign_float(N) -> int:
    import numpy as np

    A = np.array([[float(v) for v in row] for row in N], dtype=float)
    # ker(N^2) numerically: smallest singular vectors of N^2
    _, s, vt = np.linalg.svd(A @ A)
    tol = 1e-6 * max(1.0, float(s[0]) if s.size else 1.0)
    kernel = [vt[i] for i in range(3) if s[i] <= tol]
    g3 = np.diag([-1.0, 1.0, 1.0])
    best = 0.0
    for u in kernel:
        h = float((A @ u) @ (g3 @ u))
        if abs(h) > abs(best):
            best = h
    if best == 0.0:
        raise InternalError("rank-one sign form vanished numerically")
    return 1 if best > 0 else -1


def classify_jacobi(J3: Matrix, mode: str = EXACT) -> OssermanType:
    """Classify a restricted Jacobi matrix by its Jordan normal form."""
    check_mode(mode)
    rep: SpectralReport3 = spectral_analysis_3(J3, mode)
    if rep.complex_pair is not None:
        pair = rep.complex_pair
        if len(rep.real_eigenvalues) != 1 or rep.real_eigenvalues[0][1] != 1:
            raise InternalError("complex pair must come with a single simple real root")
        gamma = rep.real_eigenvalues[0][0]
        beta = pair.imag if pair.imag is not None else pair.imag_approx
        return OssermanType(
            tag="II",
            params=(_plain(pair.real), _plain(beta), _plain(gamma)),
            char_poly=rep.char_poly,
            mode=mode,
        )
    if rep.max_block_size == 1:
        values = []
        for v, m in rep.real_eigenvalues:
            values.extend([_plain(v)] * m)
        return OssermanType(tag="I", params=tuple(values), char_poly=rep.char_poly, mode=mode)
    if rep.max_block_size == 2:
        repeated = [v for v, m in rep.real_eigenvalues if m >= 2]
        if len(repeated) != 1:
            raise InternalError("block size 2 without a unique repeated eigenvalue")
        m_val = repeated[0]
        if isinstance(m_val, RealAlgebraic) and not m_val.is_exact:
            raise InternalError("repeated eigenvalues are always field elements")
        m_scalar = _plain(m_val)
        others = [v for v, m in rep.real_eigenvalues if m == 1]
        beta = _plain(others[0]) if others else m_scalar  # no others: triple root, 2-block
        ep = _epsilon_sign(J3, m_scalar, mode)
        alpha = ep * m_scalar
        return OssermanType(
            tag="III",
            params=(ep, alpha, beta),
            char_poly=rep.char_poly,
            epsilon=ep,
            mode=mode,
        )
    if rep.max_block_size == 3:
        (v, m), = rep.real_eigenvalues
        if m != 3:
            raise InternalError("block size 3 requires a triple eigenvalue")
        return OssermanType(tag="IV", params=(_plain(v),), char_poly=rep.char_poly, mode=mode)
    raise InternalError(f"impossible max block size {rep.max_block_size}")


def classify(A: CurvatureTensor, conformal: bool = False) -> OssermanType:
    """Classify an Osserman tensor (or its Weyl part); raises NotOsserman otherwise."""
    decision = is_conformally_osserman(A) if conformal else is_osserman(A)
    if not decision.osserman:
        raise NotOsserman(
            "tensor is not " + ("conformally " if conformal else "") + "Osserman"
        )
    return classify_jacobi(jacobi_matrix_e1(decision.target), A.mode)


@dataclass
class FieldConstancyResult:
    """Whether a finite family of tensors shares one Jordan type.

    ``first_deviation`` is the 0-based position of the first family member
    whose classification key differs from member 0 (None when constant).
    """

    constant: bool
    type0: Optional[OssermanType]
    first_deviation: Optional[int]
    types: Tuple = field(default_factory=tuple)


def field_constancy_check(
    tensors: Sequence[CurvatureTensor], conformal: bool = False
) -> FieldConstancyResult:
    """Classify every member and compare against the first.

    With ``conformal=True`` the Weyl parts are classified instead, and the
    precondition becomes conformally Osserman.  A non-Osserman member
    raises NotOsserman carrying its position.
    """
    if not tensors:
        return FieldConstancyResult(True, None, None, ())
    types = []
    for idx, A in enumerate(tensors):
        decision = is_conformally_osserman(A) if conformal else is_osserman(A)
        if not decision.osserman:
            raise NotOsserman(
                "family member fails the "
                + ("conformally " if conformal else "")
                + "Osserman precondition",
                index=idx,
            )
        types.append(classify_jacobi(jacobi_matrix_e1(decision.target), A.mode))
    key0 = types[0].key()
    for idx in range(1, len(types)):
        if not keys_equal(key0, types[idx].key(), tensors[idx].mode):
            return FieldConstancyResult(False, types[0], idx, tuple(types))
    return FieldConstancyResult(True, types[0], None, tuple(types))
