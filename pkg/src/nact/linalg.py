"""Linear algebra over the fixed neutral 4-space, plus generic small-matrix helpers.

The basis is e1..e4 with g(e_i, e_j) = eps_i * delta_ij and
eps = (-1, -1, +1, +1).  Vectors are tuples, matrices are tuples of row
tuples acting on column vectors, and everything here is a pure function
of immutable data.  The generic helpers (inverse, rank, nullspace,
characteristic polynomial) accept any square size; the 6x6 case is used
by the 2-form machinery.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import InternalError, NonUnitVector
from .scalars import (
    EXACT,
    FLOAT,
    Scalar,
    abs_value,
    as_mode_scalar,
    check_mode,
    scalar_is_zero,
    scalars_equal,
)

DIM = 4
EPS = (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))

Vector = Tuple[Scalar, ...]
Matrix = Tuple[Tuple[Scalar, ...], ...]


def eps(i: int):
    return EPS[i]


def metric_matrix(mode: str = EXACT) -> Matrix:
    check_mode(mode)
    one = Fraction(1) if mode == EXACT else 1.0
    return tuple(
        tuple((EPS[i] * one if i == j else one * 0) for j in range(DIM)) for i in range(DIM)
    )


def basis_vector(i: int, mode: str = EXACT) -> Vector:
    one = Fraction(1) if mode == EXACT else 1.0
    return tuple(one if j == i else one * 0 for j in range(DIM))


def inner(x: Sequence, y: Sequence):
    """The neutral inner product g(x, y) = -x1 y1 - x2 y2 + x3 y3 + x4 y4."""
    return sum(EPS[i] * x[i] * y[i] for i in range(DIM))


def as_matrix(rows, mode: str = EXACT) -> Matrix:
    out = tuple(tuple(as_mode_scalar(v, mode) for v in row) for row in rows)
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("matrix rows have unequal lengths")
    return out


def identity(n: int = DIM, mode: str = EXACT) -> Matrix:
    one = Fraction(1) if mode == EXACT else 1.0
    return tuple(tuple(one if i == j else one * 0 for j in range(n)) for i in range(n))


def zero_matrix(n: int = DIM, mode: str = EXACT) -> Matrix:
    z = Fraction(0) if mode == EXACT else 0.0
    return tuple(tuple(z for _ in range(n)) for _ in range(n))


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A: Matrix) -> Matrix:
    return tuple(tuple(c * a for a in row) for row in A)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, m = len(A), len(B[0])
    k = len(B)
    Bc = tuple(zip(*B))
    return tuple(
        tuple(sum(A[i][t] * Bc[j][t] for t in range(k)) for j in range(m)) for i in range(n)
    )


def mat_vec(A: Matrix, x: Sequence) -> Vector:
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in A)


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def trace(A: Matrix):
    return sum(A[i][i] for i in range(len(A)))


def mat_equal(A: Matrix, B: Matrix, mode: str = EXACT) -> bool:
    return all(
        scalars_equal(a, b, mode) for ra, rb in zip(A, B) for a, b in zip(ra, rb)
    )


def is_zero_matrix(A: Matrix, mode: str = EXACT) -> bool:
    return all(scalar_is_zero(v, mode) for row in A for v in row)


def max_abs_entry(A: Matrix):
    best = None
    for row in A:
        for v in row:
            a = abs_value(v)
            if best is None or a > best:
                best = a
    return best


def metric_adjoint(M: Matrix) -> Matrix:
    """The g-adjoint M* = G M^T G, written entrywise via the signs eps."""
    return tuple(
        tuple(EPS[i] * EPS[j] * M[j][i] for j in range(DIM)) for i in range(DIM)
    )


def is_skew_adjoint(M: Matrix, mode: str = EXACT) -> bool:
    adj = metric_adjoint(M)
    return all(
        scalar_is_zero(M[i][j] + adj[i][j], mode) for i in range(DIM) for j in range(DIM)
    )


def is_self_adjoint(M: Matrix, mode: str = EXACT) -> bool:
    adj = metric_adjoint(M)
    return mat_equal(M, adj, mode)


def gram(Q: Matrix) -> Matrix:
    """Q^T G Q, the pullback of the metric under Q."""
    return tuple(
        tuple(inner(col_i, col_j) for col_j in zip(*Q)) for col_i in zip(*Q)
    )


def is_isometry(Q: Matrix, mode: str = EXACT) -> bool:
    return mat_equal(gram(Q), metric_matrix(mode), mode)


def rank_one_projector(x: Sequence, mode: str = EXACT) -> Matrix:
    """pi_x(v) = g(v, x) x for a unit vector x (g(x,x) = +/-1)."""
    n = inner(x, x)
    if not (scalars_equal(n, 1, mode) or scalars_equal(n, -1, mode)):
        raise NonUnitVector(f"g(x,x) = {n!r}, expected +1 or -1")
    return tuple(tuple(EPS[j] * x[j] * x[i] for j in range(DIM)) for i in range(DIM))


def _find_pivot(rows, col, start, mode):
    if mode == EXACT:
        for r in range(start, len(rows)):
            if rows[r][col] != 0:
                return r
        return None
    best, best_r = 0.0, None
    for r in range(start, len(rows)):
        v = abs(float(rows[r][col]))
        if v > best:
            best, best_r = v, r
    if best_r is None or scalar_is_zero(rows[best_r][col], FLOAT):
        return None
    return best_r


def mat_inverse(A: Matrix, mode: str = EXACT) -> Optional[Matrix]:
    """Gauss-Jordan inverse, or None when A is singular."""
    n = len(A)
    aug = [list(row) + list(identity(n, mode)[i]) for i, row in enumerate(A)]
    for col in range(n):
        piv = _find_pivot(aug, col, col, mode)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for r in range(n):
            if r != col and not scalar_is_zero(aug[r][col], mode):
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rank(A: Matrix, mode: str = EXACT) -> int:
    rows = [list(r) for r in A]
    n_rows, n_cols = len(rows), len(rows[0])
    rk, r = 0, 0
    for col in range(n_cols):
        piv = _find_pivot(rows, col, r, mode)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(n_rows):
            if i != r and not scalar_is_zero(rows[i][col], mode):
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        rk += 1
        r += 1
        if r == n_rows:
            break
    return rk


def nullspace(A: Matrix) -> Tuple[Vector, ...]:
    """Exact kernel basis of a square or rectangular matrix."""
    rows = [list(r) for r in A]
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for col in range(n_cols):
        piv = _find_pivot(rows, col, r, EXACT)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -rows[prow][fc]
        basis.append(tuple(vec))
    return tuple(basis)


def determinant(A: Matrix, mode: str = EXACT):
    n = len(A)
    rows = [list(r) for r in A]
    det = Fraction(1) if mode == EXACT else 1.0
    for col in range(n):
        piv = _find_pivot(rows, col, col, mode)
        if piv is None:
            return det * 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pv = rows[col][col]
        det = det * pv
        for r in range(col + 1, n):
            if not scalar_is_zero(rows[r][col], mode):
                f = rows[r][col] / pv
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
    return det


def char_poly(M: Matrix) -> tuple:
    """Monic characteristic polynomial det(tI - M), little-endian coefficients.

    Faddeev-LeVerrier: exact in any field of characteristic zero.
    """
    n = len(M)
    coeffs = [None] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = M
    a = -trace(Mk)
    coeffs[n - 1] = a
    for k in range(2, n + 1):
        Mk = mat_mul(M, mat_add(Mk, mat_scale(a, identity(n))))
        a = Fraction(-1, k) * trace(Mk)
        coeffs[n - k] = a
    return tuple(coeffs)


def cayley(S: Matrix, mode: str = EXACT) -> Matrix:
    """The Cayley transform (I - S)(I + S)^-1 of a g-skew-adjoint S.

    Maps skew-adjoint matrices (with I + S invertible) into the isometry
    group; S = 0 gives the identity.
    """
    from .errors import InvalidParameter, NotSkewAdjoint

    if not is_skew_adjoint(S, mode):
        raise NotSkewAdjoint("Cayley transform needs a g-skew-adjoint matrix")
    I = identity(DIM, mode)
    inv = mat_inverse(mat_add(I, S), mode)
    if inv is None:
        raise InvalidParameter("I + S is singular")
    return mat_mul(mat_sub(I, S), inv)


def random_fraction(rng: random.Random, num_bound: int = 4, den_bound: int = 3) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def random_isometry(seed: int, mode: str = EXACT) -> Matrix:
    """A deterministic pseudo-random element of O(2,2) with exact entries.

    Draws a small skew-adjoint S and returns its Cayley transform, retrying
    on the measure-zero event that I + S is singular.
    """
    from .errors import InvalidParameter

    rng = random.Random(seed)
    for _ in range(64):
        B = tuple(
            tuple(random_fraction(rng) for _ in range(DIM)) for _ in range(DIM)
        )
        half = Fraction(1, 2)
        S = mat_scale(half, mat_sub(B, metric_adjoint(B)))
        try:
            Q = cayley(S)
        except InvalidParameter:
            continue
        if mode == FLOAT:
            Q = tuple(tuple(float(v) for v in row) for row in Q)
        return Q
    raise InternalError("could not draw an invertible Cayley input in 64 tries")


def apply_mode(A: Matrix, mode: str) -> Matrix:
    return tuple(tuple(as_mode_scalar(v, mode) for v in row) for row in A)
