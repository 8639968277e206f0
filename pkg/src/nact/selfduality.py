"""Hodge-star machinery on 2-forms and the Weyl operator splitting.

The 6-dimensional space Lambda^2 carries the induced inner product and
the Hodge star of the volume form e1 ^ e2 ^ e3 ^ e4.  In neutral
signature the star squares to +Id on 2-forms, so Lambda^2 splits into
the +1 and -1 eigenspaces Lambda+ and Lambda-, each 3-dimensional.  A
curvature tensor acts on Lambda^2 through the induced operator; its Weyl
part commutes with the star exactly when the tensor's conformal class is
on one side, and the blocks W+ and W- decide (anti-)self-duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import InternalError
from .curvature import CurvatureTensor, weyl
from .linalg import EPS, Matrix, mat_inverse, mat_mul, max_abs_entry
from .scalars import EXACT, scalar_is_zero

# index pairs (i < j), 0-based, ordering the 2-form basis e_i ^ e_j
LAMBDA2_PAIRS: Tuple[Tuple[int, int], ...] = (
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
)


def _perm_sign(p) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def lambda2_metric(mode: str = EXACT) -> Matrix:
    """The induced inner product <e_i^e_j, e_k^e_l> = g_ik g_jl - g_il g_jk."""
    one = Fraction(1) if mode == EXACT else 1.0
    out = []
    for (i, j) in LAMBDA2_PAIRS:
        row = []
        for (k, l) in LAMBDA2_PAIRS:
            v = one * 0
            if (i, j) == (k, l):
                v = EPS[i] * EPS[j] * one
            row.append(v)
        out.append(tuple(row))
    return tuple(out)


def hodge_star(mode: str = EXACT) -> Matrix:
    """The Hodge star on 2-forms for the volume form e1^e2^e3^e4.

    Determined by omega ^ eta = <*omega, eta> vol; in signature (2,2) it
    satisfies star^2 = +Id.
    """
    one = Fraction(1) if mode == EXACT else 1.0
    eta = [EPS[i] * EPS[j] for (i, j) in LAMBDA2_PAIRS]
    n = len(LAMBDA2_PAIRS)
    star = [[one * 0 for _ in range(n)] for _ in range(n)]
    for J, (i, j) in enumerate(LAMBDA2_PAIRS):
        comp = tuple(sorted(set(range(4)) - {i, j}))
        s = _perm_sign((i, j) + comp)
        K = LAMBDA2_PAIRS.index(comp)
        # (e_i^e_j) ^ (e_comp) = s vol  =>  <*b_J, b_K> = s
        star[K][J] = s * eta[K] * one
    M = tuple(tuple(row) for row in star)
    sq = mat_mul(M, M)
    for a in range(n):
        for b in range(n):
            expect = one if a == b else one * 0
            if not scalar_is_zero(sq[a][b] - expect, mode):
                raise InternalError("Hodge star does not square to the identity")
    return M


def curvature_operator_on_lambda2(A: CurvatureTensor) -> Matrix:
    """The induced operator on 2-forms: <Op(b_J), b_K> = A(i_J, j_J, i_K, j_K)."""
    eta = [EPS[i] * EPS[j] for (i, j) in LAMBDA2_PAIRS]
    out = []
    for K, (k, l) in enumerate(LAMBDA2_PAIRS):
        row = []
        for (i, j) in LAMBDA2_PAIRS:
            row.append(eta[K] * A.comp[i][j][k][l])
        out.append(tuple(row))
    return tuple(out)


def _plus_minus_basis(mode: str = EXACT):
    """Columns spanning Lambda+ then Lambda- in the 2-form basis."""
    one = Fraction(1) if mode == EXACT else 1.0
    z = one * 0
    cols = [
        (one, z, z, z, z, one),     # e12 + e34
        (z, one, z, z, one, z),     # e13 + e24
        (z, z, one, -one, z, z),    # e14 - e23
        (one, z, z, z, z, -one),    # e12 - e34
        (z, one, z, z, -one, z),    # e13 - e24
        (z, z, one, one, z, z),     # e14 + e23
    ]
    return tuple(tuple(cols[c][r] for c in range(6)) for r in range(6))


@dataclass
class WeylSplit:
    """The Weyl operator written against the Lambda+ (+) Lambda- splitting.

    ``w_plus`` and ``w_minus`` are the diagonal 3x3 blocks in the fixed
    bases above; ``commutator_norm`` is the largest absolute entry of the
    off-diagonal blocks, i.e. of P_-/+ W P_+/-.  The Weyl operator of any
    valid tensor commutes with the star, so this is exactly zero in exact
    mode and a roundoff diagnostic in float mode.
    """

    w_plus: Matrix
    w_minus: Matrix
    commutator_norm: object
    mode: str


def weyl_split(A: CurvatureTensor) -> WeylSplit:
    """Split the Weyl operator of A into its Lambda+/- blocks."""
    mode = A.mode
    W = weyl(A)
    op = curvature_operator_on_lambda2(W)
    C = _plus_minus_basis(mode)
    Cinv = mat_inverse(C, mode)
    if Cinv is None:
        raise InternalError("the Lambda+/- basis must be invertible")
    M = mat_mul(mat_mul(Cinv, op), C)
    w_plus = tuple(tuple(M[r][c] for c in range(3)) for r in range(3))
    w_minus = tuple(tuple(M[r][c] for c in range(3, 6)) for r in range(3, 6))
    off1 = tuple(tuple(M[r][c] for c in range(3, 6)) for r in range(3))
    off2 = tuple(tuple(M[r][c] for c in range(3)) for r in range(3, 6))
    cn = max(max_abs_entry(off1), max_abs_entry(off2))
    return WeylSplit(w_plus, w_minus, cn, mode)


@dataclass
class DualityVerdict:
    """(Anti-)self-duality of the Weyl part.

    self_dual means W- = 0, anti_self_dual means W+ = 0; both hold exactly
    when the Weyl tensor vanishes.
    """

    self_dual: bool
    anti_self_dual: bool
    split: WeylSplit


def duality_verdict(A: CurvatureTensor) -> DualityVerdict:
    split = weyl_split(A)
    mode = split.mode
    minus_zero = all(scalar_is_zero(v, mode) for row in split.w_minus for v in row)
    plus_zero = all(scalar_is_zero(v, mode) for row in split.w_plus for v in row)
    if (minus_zero or plus_zero) and not scalar_is_zero(split.commutator_norm, mode):
        raise InternalError("one-sided Weyl operator must commute with the star")
    return DualityVerdict(minus_zero, plus_zero, split)
