"""Algebraic curvature tensors on the neutral 4-space.

A curvature tensor is stored as the full 4x4x4x4 component array
A[i][j][k][l] = A(e_{i+1}, e_{j+1}, e_{k+1}, e_{l+1}) together with its
computation mode.  Construction goes through :func:`validate`, which
enforces the four defining identities

    A(x,y,z,v) = -A(y,x,z,v) = -A(x,y,v,z) = A(z,v,x,y)
    A(x,y,z,v) + A(y,z,x,v) + A(z,x,y,v) = 0

and reports the first violated one with 1-based indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import (
    InternalError,
    InvalidParameter,
    ModeMismatch,
    NonUnitVector,
    NotAnIsometry,
    NotSkewAdjoint,
    SymmetryViolation,
)
from .linalg import (
    DIM,
    EPS,
    Matrix,
    is_isometry,
    is_skew_adjoint,
    mat_vec,
    metric_matrix,
)
from .scalars import (
    EXACT,
    FLOAT,
    SQRT2_HALF,
    abs_value,
    as_mode_scalar,
    check_mode,
    scalar_is_zero,
    scalars_equal,
)

Tensor4 = Tuple  # 4x4x4x4 nested tuple of scalars

_RANGE = range(DIM)


@dataclass(frozen=True)
class CurvatureTensor:
    """A validated algebraic curvature tensor with its computation mode."""

    comp: Tensor4
    mode: str

    def component(self, i: int, j: int, k: int, l: int):
        """A(e_i, e_j, e_k, e_l) with 1-based indices."""
        return self.comp[i - 1][j - 1][k - 1][l - 1]

    def __iter__(self):
        return iter(self.comp)


def _freeze4(arr) -> Tensor4:
    return tuple(
        tuple(tuple(tuple(arr[i][j][k]) for k in _RANGE) for j in _RANGE) for i in _RANGE
    )


def _zero4(mode: str):
    z = Fraction(0) if mode == EXACT else 0.0
    return [[[[z for _ in _RANGE] for _ in _RANGE] for _ in _RANGE] for _ in _RANGE]


def _check_shape(raw) -> None:
    try:
        ok = len(raw) == DIM and all(
            len(raw[i]) == DIM
            and all(
                len(raw[i][j]) == DIM and all(len(raw[i][j][k]) == DIM for k in _RANGE)
                for j in _RANGE
            )
            for i in _RANGE
        )
    except TypeError:
        ok = False
    if not ok:
        raise InvalidParameter("curvature components must form a 4x4x4x4 array")


def validate(raw, mode: str = EXACT) -> CurvatureTensor:
    """Check the curvature identities and wrap the components.

    Raises SymmetryViolation naming the first failed identity (scanning
    antisymmetry in slots 1-2, antisymmetry in slots 3-4, pair symmetry,
    then the first Bianchi identity, each in lexicographic index order).
    """
    check_mode(mode)
    _check_shape(raw)
    A = [
        [
            [[as_mode_scalar(raw[i][j][k][l], mode) for l in _RANGE] for k in _RANGE]
            for j in _RANGE
        ]
        for i in _RANGE
    ]
    for i in _RANGE:
        for j in _RANGE:
            for k in _RANGE:
                for l in _RANGE:
                    if not scalar_is_zero(A[i][j][k][l] + A[j][i][k][l], mode):
                        raise SymmetryViolation("antisymmetry-12", (i + 1, j + 1, k + 1, l + 1))
    for i in _RANGE:
        for j in _RANGE:
            for k in _RANGE:
                for l in _RANGE:
                    if not scalar_is_zero(A[i][j][k][l] + A[i][j][l][k], mode):
                        raise SymmetryViolation("antisymmetry-34", (i + 1, j + 1, k + 1, l + 1))
    for i in _RANGE:
        for j in _RANGE:
            for k in _RANGE:
                for l in _RANGE:
                    if not scalars_equal(A[i][j][k][l], A[k][l][i][j], mode):
                        raise SymmetryViolation("pair-symmetry", (i + 1, j + 1, k + 1, l + 1))
    for i in _RANGE:
        for j in _RANGE:
            for k in _RANGE:
                for l in _RANGE:
                    b = A[i][j][k][l] + A[j][k][i][l] + A[k][i][j][l]
                    if not scalar_is_zero(b, mode):
                        raise SymmetryViolation("first-bianchi", (i + 1, j + 1, k + 1, l + 1))
    return CurvatureTensor(_freeze4(A), mode)


# ---------------------------------------------------------------------------
# symmetry-orbit completion (used by the type tables and document parsing)


def _orbit(i, j, k, l):
    """The symmetry orbit of one index quadruple with relative signs."""
    yield (i, j, k, l), 1
    yield (j, i, k, l), -1
    yield (i, j, l, k), -1
    yield (j, i, l, k), 1
    yield (k, l, i, j), 1
    yield (l, k, i, j), -1
    yield (k, l, j, i), -1
    yield (l, k, j, i), 1


def set_component(arr, store, idx, value, mode: str) -> None:
    """Assign one component and its symmetry orbit into a working array.

    ``store`` tracks which entries were already pinned so that conflicting
    assignments surface as SymmetryViolation("inconsistent-components").
    Indices here are 1-based, matching the document format.
    """
    i, j, k, l = (idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1)
    value = as_mode_scalar(value, mode)
    for (a, b, c, d), s in _orbit(i, j, k, l):
        v = s * value
        if (a, b, c, d) in store:
            if not scalars_equal(store[(a, b, c, d)], v, mode):
                raise SymmetryViolation(
                    "inconsistent-components",
                    (a + 1, b + 1, c + 1, d + 1),
                    "conflicting values for symmetry-equivalent components at "
                    f"({a + 1},{b + 1},{c + 1},{d + 1})",
                )
        else:
            store[(a, b, c, d)] = v
            arr[a][b][c][d] = v


def from_components(pairs, mode: str = EXACT) -> CurvatureTensor:
    """Build a tensor from 1-based (indices, value) pairs.

    Symmetry-equivalent components are filled in automatically; everything
    not determined by the listed entries is zero.  The result is validated,
    so a component list that breaks the Bianchi identity is rejected.
    """
    arr = _zero4(mode)
    store = {}
    for idx, value in pairs:
        if len(idx) != 4 or not all(1 <= t <= 4 for t in idx):
            raise InvalidParameter(f"component indices must be four values in 1..4, got {idx}")
        set_component(arr, store, tuple(idx), value, mode)
    return validate(arr, mode)


# ---------------------------------------------------------------------------
# tensor arithmetic


def tensor_add(A: CurvatureTensor, B: CurvatureTensor) -> CurvatureTensor:
    if A.mode != B.mode:
        raise ModeMismatch("cannot add tensors of different modes")
    comp = tuple(
        tuple(
            tuple(
                tuple(A.comp[i][j][k][l] + B.comp[i][j][k][l] for l in _RANGE)
                for k in _RANGE
            )
            for j in _RANGE
        )
        for i in _RANGE
    )
    return CurvatureTensor(comp, A.mode)


def tensor_sub(A: CurvatureTensor, B: CurvatureTensor) -> CurvatureTensor:
    if A.mode != B.mode:
        raise ModeMismatch("cannot subtract tensors of different modes")
    comp = tuple(
        tuple(
            tuple(
                tuple(A.comp[i][j][k][l] - B.comp[i][j][k][l] for l in _RANGE)
                for k in _RANGE
            )
            for j in _RANGE
        )
        for i in _RANGE
    )
    return CurvatureTensor(comp, A.mode)


def tensor_scale(c, A: CurvatureTensor) -> CurvatureTensor:
    c = as_mode_scalar(c, A.mode)
    comp = tuple(
        tuple(
            tuple(tuple(c * A.comp[i][j][k][l] for l in _RANGE) for k in _RANGE)
            for j in _RANGE
        )
        for i in _RANGE
    )
    return CurvatureTensor(comp, A.mode)


def tensors_equal(A: CurvatureTensor, B: CurvatureTensor) -> bool:
    if A.mode != B.mode:
        raise ModeMismatch("cannot compare tensors of different modes")
    return all(
        scalars_equal(A.comp[i][j][k][l], B.comp[i][j][k][l], A.mode)
        for i in _RANGE
        for j in _RANGE
        for k in _RANGE
        for l in _RANGE
    )


def max_abs_diff(A: CurvatureTensor, B: CurvatureTensor):
    if A.mode != B.mode:
        raise ModeMismatch("cannot compare tensors of different modes")
    best = None
    for i in _RANGE:
        for j in _RANGE:
            for k in _RANGE:
                for l in _RANGE:
                    d = abs_value(A.comp[i][j][k][l] - B.comp[i][j][k][l])
                    if best is None or d > best:
                        best = d
    return best


def is_zero_tensor(A: CurvatureTensor) -> bool:
    return all(
        scalar_is_zero(A.comp[i][j][k][l], A.mode)
        for i in _RANGE
        for j in _RANGE
        for k in _RANGE
        for l in _RANGE
    )


def to_float(A: CurvatureTensor) -> CurvatureTensor:
    """The float-mode copy of a tensor (exact values are narrowed once)."""
    comp = tuple(
        tuple(
            tuple(tuple(float(A.comp[i][j][k][l]) for l in _RANGE) for k in _RANGE)
            for j in _RANGE
        )
        for i in _RANGE
    )
    return CurvatureTensor(comp, FLOAT)


# ---------------------------------------------------------------------------
# standard constructions


def kulkarni_nomizu(h: Matrix, k: Matrix, mode: str = EXACT) -> CurvatureTensor:
    """The Kulkarni-Nomizu product of two symmetric bilinear forms.

    (h . k)(x,y,z,v) = h(x,z)k(y,v) + h(y,v)k(x,z) - h(x,v)k(y,z) - h(y,z)k(x,v)
    """
    for m, name in ((h, "h"), (k, "k")):
        for i in _RANGE:
            for j in _RANGE:
                if not scalars_equal(m[i][j], m[j][i], mode):
                    raise InvalidParameter(f"{name} is not a symmetric bilinear form")
    comp = tuple(
        tuple(
            tuple(
                tuple(
                    h[i][kk] * k[j][l]
                    + h[j][l] * k[i][kk]
                    - h[i][l] * k[j][kk]
                    - h[j][kk] * k[i][l]
                    for l in _RANGE
                )
                for kk in _RANGE
            )
            for j in _RANGE
        )
        for i in _RANGE
    )
    return CurvatureTensor(comp, mode)


def r0(mode: str = EXACT) -> CurvatureTensor:
    """The constant-curvature tensor R0(x,y,z,v) = g(x,z)g(y,v) - g(y,z)g(x,v)."""
    g = metric_matrix(mode)
    comp = tuple(
        tuple(
            tuple(
                tuple(g[i][k] * g[j][l] - g[j][k] * g[i][l] for l in _RANGE)
                for k in _RANGE
            )
            for j in _RANGE
        )
        for i in _RANGE
    )
    return CurvatureTensor(comp, mode)


def r_phi(phi: Matrix, mode: str = EXACT) -> CurvatureTensor:
    """The curvature tensor of a g-skew-adjoint endomorphism:

    R_phi(x,y,z,v) = g(phi y, z) g(phi x, v) - g(phi x, z) g(phi y, v)
                     - 2 g(phi x, y) g(phi z, v)
    """
    if not is_skew_adjoint(phi, mode):
        raise NotSkewAdjoint("r_phi requires a g-skew-adjoint endomorphism")
    # omega[i][j] = g(phi e_i, e_j); skew since phi is skew-adjoint
    omega = tuple(tuple(EPS[j] * phi[j][i] for j in _RANGE) for i in _RANGE)
    comp = tuple(
        tuple(
            tuple(
                tuple(
                    omega[j][k] * omega[i][l]
                    - omega[i][k] * omega[j][l]
                    - 2 * omega[i][j] * omega[k][l]
                    for l in _RANGE
                )
                for k in _RANGE
            )
            for j in _RANGE
        )
        for i in _RANGE
    )
    return CurvatureTensor(comp, mode)


def ricci(A: CurvatureTensor) -> Matrix:
    """The Ricci form Ric(x,y) = sum_i eps_i A(e_i, x, e_i, y); symmetric."""
    ric = tuple(
        tuple(
            sum(EPS[i] * A.comp[i][j][i][l] for i in _RANGE) for l in _RANGE
        )
        for j in _RANGE
    )
    for j in _RANGE:
        for l in _RANGE:
            if not scalars_equal(ric[j][l], ric[l][j], A.mode):
                raise InternalError("Ricci form of a valid tensor must be symmetric")
    return ric


def scalar_curv(A: CurvatureTensor):
    ric = ricci(A)
    return sum(EPS[j] * ric[j][j] for j in _RANGE)


def weyl(A: CurvatureTensor) -> CurvatureTensor:
    """The Weyl (conformal) part of A; Ricci-flat by construction."""
    mode = A.mode
    ric = ricci(A)
    sc = scalar_curv(A)
    g = metric_matrix(mode)
    quarter_sc = sc / 4
    ric0 = tuple(
        tuple(ric[i][j] - quarter_sc * g[i][j] for j in _RANGE) for i in _RANGE
    )
    gg = kulkarni_nomizu(g, g, mode)
    mixed = kulkarni_nomizu(ric0, g, mode)
    W = tensor_sub(
        tensor_sub(A, tensor_scale(sc / 24, gg)),
        tensor_scale(Fraction(1, 2) if mode == EXACT else 0.5, mixed),
    )
    ric_w = ricci(W)
    if not all(scalar_is_zero(ric_w[i][j], mode) for i in _RANGE for j in _RANGE):
        raise InternalError("Weyl projection left a nonzero Ricci part")
    return W


def jacobi_operator(A: CurvatureTensor, x: Sequence) -> Matrix:
    """The Jacobi operator of any direction x, no unit-norm check."""
    zero = Fraction(0) if A.mode == EXACT else 0.0
    J = []
    for kk in _RANGE:
        row = []
        for j in _RANGE:
            acc = zero
            for a in _RANGE:
                if x[a] == 0:
                    continue
                xa = x[a]
                for b in _RANGE:
                    if x[b] == 0:
                        continue
                    acc = acc + xa * x[b] * A.comp[j][a][b][kk]
            row.append(EPS[kk] * acc)
        J.append(tuple(row))
    return tuple(J)


def jacobi(A: CurvatureTensor, x: Sequence) -> Matrix:
    """J_A(x), defined by g(J_A(x)y, z) = A(y, x, x, z), for unit timelike x."""
    from .linalg import inner

    n = inner(x, x)
    if not scalars_equal(n, -1, A.mode):
        raise NonUnitVector(f"jacobi expects g(x,x) = -1, got {n!r}")
    J = jacobi_operator(A, x)
    Jx = mat_vec(J, tuple(x))
    if not all(scalar_is_zero(v, A.mode) for v in Jx):
        raise InternalError("Jacobi operator does not annihilate its direction")
    return J


def jacobi_matrix_e1(A: CurvatureTensor) -> Matrix:
    """The Jacobi operator of e1 restricted to span(e2, e3, e4).

    Entry (r, c) is eps_{r+2} * A(e_{c+2}, e1, e1, e_{r+2}); for a valid
    tensor this matrix has the shape [[a, b, c], [-b, d, e], [-c, e, f]].
    """
    return tuple(
        tuple(EPS[r + 1] * A.comp[c + 1][0][0][r + 1] for c in range(3)) for r in range(3)
    )


# ---------------------------------------------------------------------------
# the four canonical Osserman familes


def _type_table(tag: str, params, mode: str):
    half = Fraction(1, 2)
    s2h = SQRT2_HALF if mode == EXACT else float(SQRT2_HALF)
    if tag == "I":
        if len(params) != 3:
            raise InvalidParameter("type I takes parameters (alpha, beta, gamma)")
        al, be, ga = params
        third = Fraction(1, 3)
        return [
            ((1, 2, 2, 1), -al),
            ((4, 3, 3, 4), -al),
            ((1, 3, 3, 1), be),
            ((4, 2, 2, 4), be),
            ((1, 4, 4, 1), ga),
            ((3, 2, 2, 3), ga),
            ((1, 2, 3, 4), third * (2 * al - be - ga)),
            ((1, 4, 2, 3), third * (-al - be + 2 * ga)),
            ((1, 3, 4, 2), third * (-al + 2 * be - ga)),
        ]
    if tag == "II":
        if len(params) != 3:
            raise InvalidParameter("type II takes parameters (alpha, beta, gamma)")
        al, be, ga = params
        if scalar_is_zero(be, mode):
            raise InvalidParameter("type II requires beta != 0")
        third = Fraction(1, 3)
        return [
            ((1, 2, 2, 1), -al),
            ((4, 3, 3, 4), -al),
            ((1, 3, 3, 1), al),
            ((4, 2, 2, 4), al),
            ((1, 4, 4, 1), ga),
            ((3, 2, 2, 3), ga),
            ((2, 1, 1, 3), -be),
            ((2, 4, 4, 3), -be),
            ((1, 2, 2, 4), be),
            ((1, 3, 3, 4), be),
            ((1, 2, 3, 4), third * (al - ga)),
            ((1, 4, 2, 3), third * 2 * (ga - al)),
            ((1, 3, 4, 2), third * (al - ga)),
        ]
    if tag == "III":
        if len(params) != 3:
            raise InvalidParameter("type III takes parameters (epsilon, alpha, beta)")
        ep, al, be = params
        if ep not in (1, -1):
            raise InvalidParameter("type III epsilon must be +1 or -1")
        third = Fraction(1, 3)
        three_half = Fraction(3, 2)
        return [
            ((1, 2, 2, 1), -ep * (al - half)),
            ((4, 3, 3, 4), -ep * (al - half)),
            ((1, 3, 3, 1), ep * (al + half)),
            ((4, 2, 2, 4), ep * (al + half)),
            ((1, 4, 4, 1), be),
            ((3, 2, 2, 3), be),
            ((2, 1, 1, 3), -ep * half),
            ((2, 4, 4, 3), -ep * half),
            ((1, 2, 2, 4), ep * half),
            ((1, 3, 3, 4), ep * half),
            ((1, 2, 3, 4), third * (ep * (al - three_half) - be)),
            ((1, 4, 2, 3), third * (-2 * ep * al + 2 * be)),
            ((1, 3, 4, 2), third * (ep * (al + three_half) - be)),
        ]
    if tag == "IV":
        if len(params) != 1:
            raise InvalidParameter("type IV takes a single parameter (alpha,)")
        (al,) = params
        return [
            ((1, 2, 2, 1), -al),
            ((4, 3, 3, 4), -al),
            ((1, 3, 3, 1), al),
            ((4, 2, 2, 4), al),
            ((1, 4, 4, 1), al),
            ((3, 2, 2, 3), al),
            ((2, 1, 1, 4), -s2h),
            ((2, 3, 3, 4), -s2h),
            ((3, 1, 1, 4), s2h),
            ((3, 2, 2, 4), -s2h),
            ((1, 2, 2, 3), s2h),
            ((1, 4, 4, 3), s2h),
            ((1, 3, 3, 2), s2h),
            ((1, 4, 4, 2), -s2h),
        ]
    raise InvalidParameter(f"unknown type tag {tag!r}; expected I, II, III or IV")


def build_type(tag: str, params, mode: str = EXACT) -> CurvatureTensor:
    """The canonical curvature tensor of one of the four Jordan types.

    Parameters: I -> (alpha, beta, gamma), the three eigenvalues of the
    restricted Jacobi operator; II -> (alpha, beta, gamma) for the complex
    pair alpha +/- i beta (beta != 0) and real eigenvalue gamma;
    III -> (epsilon, alpha, beta) with epsilon = +/-1 the 2-block sign;
    IV -> (alpha,) the triple eigenvalue.  Type IV needs sqrt(2)/2 entries,
    which exact mode carries in Q(sqrt(2)).
    """
    check_mode(mode)
    params = tuple(as_mode_scalar(v, mode) for v in params)
    if tag == "III":
        ep = params[0]
        ep_int = 1 if scalars_equal(ep, 1, mode) else (-1 if scalars_equal(ep, -1, mode) else 0)
        if ep_int == 0:
            raise InvalidParameter("type III epsilon must be +1 or -1")
        params = (ep_int,) + params[1:]
    return from_components(_type_table(tag, params, mode), mode)


# ---------------------------------------------------------------------------
# pullback and random generation


def pullback(A: CurvatureTensor, Q: Matrix) -> CurvatureTensor:
    """The pullback (Q*A)(x,y,z,v) = A(Qx, Qy, Qz, Qv) along an isometry Q."""
    if not is_isometry(Q, A.mode):
        raise NotAnIsometry("pullback requires a g-isometry")
    cur = A.comp
    # contract one slot at a time: successively replace index s by sum_a Q[a][.]
    for slot in range(4):
        nxt = _zero4(A.mode)
        for i in _RANGE:
            for j in _RANGE:
                for k in _RANGE:
                    for l in _RANGE:
                        idx = (i, j, k, l)
                        s = idx[slot]
                        acc = None
                        for a in _RANGE:
                            src = list(idx)
                            src[slot] = a
                            term = Q[a][s] * cur[src[0]][src[1]][src[2]][src[3]]
                            acc = term if acc is None else acc + term
                        nxt[i][j][k][l] = acc
        cur = nxt
    return CurvatureTensor(_freeze4(cur), A.mode)


def random_curvature_tensor(seed: int, mode: str = EXACT) -> CurvatureTensor:
    """A deterministic pseudo-random valid curvature tensor.

    Draws a raw 4-index array with small rational entries, antisymmetrizes
    both index pairs, symmetrizes the pair swap, and removes the cyclic
    part, which restores the first Bianchi identity exactly.
    """
    rng = random.Random(seed)
    T = [
        [
            [
                [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in _RANGE]
                for _ in _RANGE
            ]
            for _ in _RANGE
        ]
        for _ in _RANGE
    ]
    quarter = Fraction(1, 4)
    A1 = [
        [
            [
                [
                    quarter
                    * (T[i][j][k][l] - T[j][i][k][l] - T[i][j][l][k] + T[j][i][l][k])
                    for l in _RANGE
                ]
                for k in _RANGE
            ]
            for j in _RANGE
        ]
        for i in _RANGE
    ]
    half = Fraction(1, 2)
    A2 = [
        [
            [
                [half * (A1[i][j][k][l] + A1[k][l][i][j]) for l in _RANGE]
                for k in _RANGE
            ]
            for j in _RANGE
        ]
        for i in _RANGE
    ]
    third = Fraction(1, 3)
    A3 = [
        [
            [
                [
                    A2[i][j][k][l]
                    - third * (A2[i][j][k][l] + A2[j][k][i][l] + A2[k][i][j][l])
                    for l in _RANGE
                ]
                for k in _RANGE
            ]
            for j in _RANGE
        ]
        for i in _RANGE
    ]
    if mode == FLOAT:
        A3 = [
            [[[float(A3[i][j][k][l]) for l in _RANGE] for k in _RANGE] for j in _RANGE]
            for i in _RANGE
        ]
    return validate(A3, mode)
