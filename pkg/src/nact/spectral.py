"""Exact spectral analysis of small matrices over Q(sqrt(2)).

Polynomials are little-endian coefficient tuples.  Eigenvalue structure
(multiplicity pattern, reality, maximal Jordan block size) is decided
exactly; individual eigenvalues are returned as :class:`RealAlgebraic`
numbers: either a field element or an isolated simple root of a
squarefree polynomial.  The one quantity that may be reported as a
certified float only is the imaginary part of a complex pair whose real
root generates a cubic extension; it is never consumed by any decision
made in this package, only displayed.

Float mode takes the usual numerical route (numpy eigenvalues, absolute
clustering at 1e-7, ranks of powers for the block structure).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InternalError
from .scalars import EXACT, FLOAT, QSqrt2, check_mode, sign, sqrt_exact
from .linalg import char_poly, identity, is_zero_matrix, mat_mul, mat_scale, mat_sub

Poly = Tuple

# Roundoff on a 3x3 Jordan block splits the triple eigenvalue by roughly
# eps^(1/3) ~ 5e-6, and leaves residue ~1e-5 in the squared nilpotent part,
# so eigenvalue clustering and rank decisions must sit above those scales.
FLOAT_CLUSTER_TOL = 2e-5
FLOAT_RANK_TOL = 1e-4


# ---------------------------------------------------------------------------
# polynomial helpers


def ptrim(p) -> Poly:
    c = list(p)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def pdeg(p) -> int:
    return len(ptrim(p)) - 1


def pis_zero(p) -> bool:
    return all(c == 0 for c in p)


def peval(p, x):
    acc = p[-1]
    for c in reversed(p[:-1]):
        acc = acc * x + c
    return acc


def padd(p, q) -> Poly:
    n = max(len(p), len(q))
    p = tuple(p) + (Fraction(0),) * (n - len(p))
    q = tuple(q) + (Fraction(0),) * (n - len(q))
    return ptrim(tuple(a + b for a, b in zip(p, q)))


def pneg(p) -> Poly:
    return tuple(-c for c in p)


def psub(p, q) -> Poly:
    return padd(p, pneg(q))


def pscale(c, p) -> Poly:
    return ptrim(tuple(c * a for a in p))


def pmul(p, q) -> Poly:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return ptrim(tuple(out))


def pdivmod(p, q) -> Tuple[Poly, Poly]:
    q = ptrim(q)
    if pis_zero(q):
        raise ZeroDivisionError("polynomial division by zero")
    p = list(ptrim(p))
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(1, len(p) - dq)
    while len(p) - 1 >= dq and not all(c == 0 for c in p):
        if p[-1] == 0:
            p.pop()
            continue
        shift = len(p) - 1 - dq
        f = p[-1] / lead
        quot[shift] = f
        for i in range(dq + 1):
            p[shift + i] = p[shift + i] - f * q[i]
        p.pop()
    if not p:
        p = [Fraction(0)]
    return ptrim(tuple(quot)), ptrim(tuple(p))


def pdiv_exact(p, q) -> Poly:
    quot, rem = pdivmod(p, q)
    if not pis_zero(rem):
        raise InternalError(f"inexact polynomial division: remainder {rem}")
    return quot


def pmonic(p) -> Poly:
    p = ptrim(p)
    lead = p[-1]
    if lead == 0:
        raise ZeroDivisionError("cannot normalize the zero polynomial")
    if lead == 1:
        return p
    return tuple(c / lead for c in p)


def pgcd(p, q) -> Poly:
    """Monic gcd over the coefficient field (constant 1 when coprime)."""
    p, q = ptrim(p), ptrim(q)
    while not pis_zero(q):
        p, q = q, pdivmod(p, q)[1]
    if pis_zero(p):
        return (Fraction(0),)
    return pmonic(p)


def pderiv(p) -> Poly:
    if len(p) == 1:
        return (Fraction(0),)
    return ptrim(tuple(i * c for i, c in enumerate(p) if i > 0))


def pcompose_linear(p, a, b) -> Poly:
    """The polynomial p(a*t + b), expanded."""
    out: Poly = (p[-1],)
    for c in reversed(p[:-1]):
        out = padd(pmul(out, (b, a)), (c,))
    return out


def psquarefree(p) -> Poly:
    """p divided by gcd(p, p'), normalized monic."""
    g = pgcd(p, pderiv(p))
    if pdeg(g) == 0:
        return pmonic(p)
    return pmonic(pdiv_exact(p, g))


def split_sqrt2(p) -> Tuple[Poly, Poly]:
    """Write p = p0 + sqrt(2) p1 with rational p0, p1."""
    p0, p1 = [], []
    for c in p:
        if isinstance(c, QSqrt2):
            p0.append(c.a)
            p1.append(c.b)
        else:
            p0.append(Fraction(c))
            p1.append(Fraction(0))
    return ptrim(tuple(p0)), ptrim(tuple(p1))


def is_rational_poly(p) -> bool:
    return not any(isinstance(c, QSqrt2) for c in p)


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_chain(p) -> Tuple[Poly, ...]:
    chain = [ptrim(p), pderiv(p)]
    while pdeg(chain[-1]) > 0:
        rem = pdivmod(chain[-2], chain[-1])[1]
        if pis_zero(rem):
            break
        chain.append(pneg(rem))
    return tuple(chain)


def _variations(chain, x) -> int:
    signs = []
    for q in chain:
        s = sign(peval(q, x))
        if s != 0:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo, hi, chain=None) -> int:
    """Distinct real roots of squarefree p in (lo, hi]; endpoints must not be roots."""
    if chain is None:
        chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def _abs_upper_bound(x) -> Fraction:
    """A rational upper bound for |x| over the field (sqrt(2) < 3/2)."""
    if isinstance(x, QSqrt2):
        return abs(x.a) + Fraction(3, 2) * abs(x.b)
    return abs(Fraction(x))


def root_bound(p) -> Fraction:
    """Rational B with every real root of p strictly inside (-B, B)."""
    p = pmonic(p)
    return Fraction(1) + sum((_abs_upper_bound(c) for c in p[:-1]), Fraction(0))


# ---------------------------------------------------------------------------
# simplest rational in an interval (for snapping isolated roots)


def simplest_fraction_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A minimal-denominator rational in the closed interval [lo, hi]."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo == hi:
        return Fraction(lo)
    neg = False
    if hi < 0:
        lo, hi, neg = -hi, -lo, True
    if lo <= 0:
        return Fraction(0)
    terms: List[Fraction] = []
    a, b = Fraction(lo), Fraction(hi)
    while True:
        fl = a.numerator // a.denominator
        ceil_a = fl if a == fl else fl + 1
        if ceil_a <= b:
            terms.append(Fraction(ceil_a))
            break
        terms.append(Fraction(fl))
        a, b = 1 / (b - fl), 1 / (a - fl)
    val = terms[-1]
    for t in reversed(terms[:-1]):
        val = t + 1 / val
    return -val if neg else val


# ---------------------------------------------------------------------------
# real root isolation


def _isolate_once(p, chain, bound):
    """One isolation pass over squarefree monic p.

    Returns ("hit", r) as soon as a bisection point lands exactly on a
    (necessarily rational) root, else ("done", intervals) with open
    isolating intervals for all real roots, sorted ascending.
    """
    total = count_real_roots(p, -bound, bound, chain)
    stack = [(-bound, bound, total)]
    out = []
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if peval(p, mid) == 0:
            return "hit", mid
        left = count_real_roots(p, lo, mid, chain)
        stack.append((lo, mid, left))
        stack.append((mid, hi, cnt - left))
    return "done", sorted(out)


def isolate_real_roots(p):
    """Isolate all real roots of a squarefree polynomial.

    Returns (hits, intervals, reduced) where hits are rational roots that
    bisection happened to land on (divided out of `reduced`) and intervals
    isolate the remaining real roots of `reduced`.
    """
    p = pmonic(ptrim(p))
    hits = []
    while True:
        if pdeg(p) == 0:
            return hits, [], p
        chain = sturm_chain(p)
        bound = root_bound(p)
        kind, payload = _isolate_once(p, chain, bound)
        if kind == "done":
            return hits, payload, p
        hits.append(payload)
        p = pdiv_exact(p, (-payload, Fraction(1)))


def _refine_once(p, lo, hi, s_lo):
    """One bisection step; returns ("hit", mid) or (lo, hi) narrowed."""
    mid = (lo + hi) / 2
    v = peval(p, mid)
    if v == 0:
        return "hit", mid
    if sign(v) == s_lo:
        return mid, hi
    return lo, mid


def refine_interval(p, lo, hi, width):
    """Narrow an isolating interval below `width`; may hit the root exactly."""
    s_lo = sign(peval(p, lo))
    while hi - lo > width:
        step = _refine_once(p, lo, hi, s_lo)
        if step[0] == "hit":
            return step
        lo, hi = step
    return lo, hi


def _denominator_lcm(p) -> int:
    out = 1
    for c in p:
        out = out * c.denominator // math.gcd(out, c.denominator)
    return out


def rational_roots(p) -> List[Fraction]:
    """All rational roots of a squarefree monic polynomial over the field.

    Uses isolation plus denominator-bounded snapping, so it never needs to
    factor large integers.
    """
    p = pmonic(ptrim(p))
    p0, p1 = split_sqrt2(p)
    if pis_zero(p1):
        q = p0
    else:
        # a rational root must kill the rational and sqrt(2) parts separately
        q = pgcd(p0, p1)
    if pdeg(q) == 0:
        return []
    q = psquarefree(q)
    found: List[Fraction] = []
    while pdeg(q) > 0:
        hits, intervals, q_red = isolate_real_roots(q)
        q = q_red
        if hits:
            for r in hits:
                found.append(r)
            continue
        snapped = None
        den = _denominator_lcm(q)
        width = Fraction(1, 2 * den * den)
        for lo, hi in intervals:
            res = refine_interval(q, lo, hi, width)
            if res[0] == "hit":
                snapped = res[1]
                break
            cand = simplest_fraction_between(res[0], res[1])
            if peval(q, cand) == 0:
                snapped = cand
                break
        if snapped is None:
            break
        found.append(snapped)
        q = pdiv_exact(q, (-snapped, Fraction(1)))
    return sorted(r for r in found if peval(p, r) == 0)


# ---------------------------------------------------------------------------
# real algebraic numbers


class RealAlgebraic:
    """A real algebraic number represented exactly.

    Either ``exact`` holds a field element, or ``poly`` is a monic
    squarefree polynomial with ``(lo, hi)`` an isolating interval around a
    single simple root.  Interval endpoints are field elements that are not
    roots.  Refinement mutates the interval only; the represented number is
    immutable.  Should a bisection point ever land exactly on the root, the
    representation collapses to the exact form.
    """

    __slots__ = ("exact", "poly", "_lo", "_hi", "_sign_lo")

    def __init__(self, exact=None, poly=None, lo=None, hi=None):
        self.exact = exact
        self.poly = poly
        self._lo = lo
        self._hi = hi
        self._sign_lo = None
        if exact is None:
            if poly is None or lo is None or hi is None:
                raise ValueError("need either an exact value or a poly with interval")
            self._sign_lo = sign(peval(poly, lo))
            if self._sign_lo == 0 or sign(peval(poly, hi)) == 0:
                raise InternalError("isolating interval endpoints must not be roots")

    @classmethod
    def from_exact(cls, value) -> "RealAlgebraic":
        return cls(exact=value)

    @classmethod
    def from_root(cls, poly, lo, hi) -> "RealAlgebraic":
        return cls(poly=pmonic(ptrim(poly)), lo=lo, hi=hi)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def interval(self):
        if self.is_exact:
            return self.exact, self.exact
        return self._lo, self._hi

    def _collapse(self, value):
        self.exact = value

    def refine_to(self, width):
        if self.is_exact:
            return
        lo, hi = self._lo, self._hi
        while hi - lo > width:
            step = _refine_once(self.poly, lo, hi, self._sign_lo)
            if step[0] == "hit":
                self._collapse(step[1])
                return
            lo, hi = step
        self._lo, self._hi = lo, hi

    def approx_float(self) -> float:
        if self.is_exact:
            return float(self.exact)
        scale = max(Fraction(1), _abs_upper_bound(self._hi))
        self.refine_to(Fraction(1, 10**17) * scale)
        if self.is_exact:
            return float(self.exact)
        return (float(self._lo) + float(self._hi)) / 2

    def __float__(self):
        return self.approx_float()

    def _compare_exact(self, v) -> int:
        """Sign of (self - v) for a field element v."""
        if self.is_exact:
            return sign(self.exact - v)
        if peval(self.poly, v) == 0 and self._lo < v < self._hi:
            return 0
        while self._lo < v < self._hi:
            step = _refine_once(self.poly, self._lo, self._hi, self._sign_lo)
            if step[0] == "hit":
                self._collapse(step[1])
                return sign(self.exact - v)
            self._lo, self._hi = step
        if v <= self._lo:
            return 1
        return -1

    def _equals_root(self, other: "RealAlgebraic") -> bool:
        g = pgcd(self.poly, other.poly)
        if pdeg(g) == 0:
            return False
        lo = max(self._lo, other._lo)
        hi = min(self._hi, other._hi)
        if not lo < hi:
            return False
        if peval(g, lo) == 0 or peval(g, hi) == 0:
            # endpoints are never roots of the defining polys, hence not of g
            raise InternalError("gcd root at an isolating endpoint")
        return count_real_roots(g, lo, hi) > 0

    def compare(self, other) -> int:
        if not isinstance(other, RealAlgebraic):
            return self._compare_exact(other)
        if other.is_exact:
            return self._compare_exact(other.exact)
        if self.is_exact:
            return -other._compare_exact(self.exact)
        if self._equals_root(other):
            return 0
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            self.refine_to((self._hi - self._lo) / 2)
            other.refine_to((other._hi - other._lo) / 2)
            if self.is_exact or other.is_exact:
                return self.compare(other)

    def __eq__(self, other):
        if isinstance(other, RealAlgebraic) or isinstance(other, (int, Fraction, QSqrt2)):
            return self.compare(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __repr__(self):
        if self.is_exact:
            return f"RealAlgebraic({self.exact!r})"
        return f"RealAlgebraic(root of {self.poly} in ({self._lo}, {self._hi}))"


# ---------------------------------------------------------------------------
# roots of squarefree polynomials over the field


def real_roots_squarefree(p):
    """All real roots of a squarefree monic p (degree <= 3 in practice).

    Returns a list of RealAlgebraic, sorted ascending.  Roots that lie in
    Q(sqrt(2)) come back exact; quadratic irrationalities outside the field
    and irreducible-cubic roots come back as isolated roots.
    """
    p = pmonic(ptrim(p))
    exact = []
    for r in rational_roots(p):
        exact.append(r)
        p = pdiv_exact(p, (-r, Fraction(1)))
    d = pdeg(p)
    algebraic: List[RealAlgebraic] = []
    if d == 1:
        exact.append(-p[0])
    elif d == 2:
        a, b = p[1], p[0]
        disc = a * a - 4 * b
        sd = sign(disc)
        if sd > 0:
            s = sqrt_exact(disc)
            if s is not None:
                exact.extend([(-a + s) / 2, (-a - s) / 2])
            else:
                hits, intervals, p_red = isolate_real_roots(p)
                exact.extend(hits)
                algebraic = [RealAlgebraic.from_root(p_red, lo, hi) for lo, hi in intervals]
        elif sd == 0:
            raise InternalError("squarefree polynomial with vanishing discriminant")
    elif d == 3:
        hits, intervals, p_red = isolate_real_roots(p)
        exact.extend(hits)
        algebraic = [RealAlgebraic.from_root(p_red, lo, hi) for lo, hi in intervals]
    elif d > 3:
        raise NotImplementedError("only degrees up to 3 are needed here")
    roots = [RealAlgebraic.from_exact(v) for v in exact] + algebraic
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# spectral reports


@dataclass
class ComplexPair:
    """A conjugate eigenvalue pair re +/- i*im with im > 0.

    ``imag`` is None exactly when the imaginary part lives in a degree-6
    extension (irreducible-cubic real root); ``imag_approx`` always carries
    a certified float approximation.
    """

    real: object
    imag: Optional[object]
    imag_approx: float


@dataclass
class SpectralReport3:
    """Exact spectral data of a 3x3 matrix.

    ``real_eigenvalues`` is an ascending tuple of (value, multiplicity)
    pairs; multiplicities plus twice the presence of ``complex_pair`` sum
    to 3.  ``max_block_size`` is the largest Jordan block over the complex
    numbers; it equals 1 exactly when the minimal polynomial is squarefree.
    """

    mode: str
    char_poly: Poly
    real_eigenvalues: Tuple
    complex_pair: Optional[ComplexPair]
    max_block_size: int

    def __post_init__(self):
        total = sum(m for _, m in self.real_eigenvalues)
        if self.complex_pair is not None:
            total += 2
        if total != 3:
            raise InternalError(f"eigenvalue multiplicities sum to {total}, not 3")


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_add_scalar(a, c):
    return (a[0] + c, a[1] + c)


def _iv_scale(c, a):
    lo, hi = c * a[0], c * a[1]
    return (lo, hi) if sign(hi - lo) >= 0 else (hi, lo)


def _iv_mul(a, b):
    vals = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    lo = hi = vals[0]
    for v in vals[1:]:
        if v < lo:
            lo = v
        if v > hi:
            hi = v
    return (lo, hi)


def _imag_approx_from_real_root(p, gamma: RealAlgebraic) -> float:
    """Certified float for the imaginary part of the pair of a cubic.

    With p = (t - gamma)(t^2 + u t + v), u = c2 + gamma and
    v = c1 + c2 gamma + gamma^2, the squared imaginary part is
    v - u^2/4.  Interval arithmetic on gamma's isolating interval narrows
    it until sixteen significant digits are certain.
    """
    c1, c2 = p[1], p[2]
    width = Fraction(1, 2**24)
    rel = Fraction(1, 10**16)
    while True:
        gamma.refine_to(width)
        if gamma.is_exact:
            g = gamma.exact
            imsq = c1 + c2 * g + g * g - (c2 + g) * (c2 + g) / 4
            return math.sqrt(float(imsq))
        giv = gamma.interval()
        uiv = _iv_add_scalar(giv, c2)
        usq = _iv_mul(uiv, uiv)
        gsq = _iv_mul(giv, giv)
        imsq = _iv_add_scalar(
            _iv_add(_iv_add(_iv_scale(c2, giv), gsq), _iv_scale(Fraction(-1, 4), usq)),
            c1,
        )
        if sign(imsq[0]) > 0 and imsq[1] - imsq[0] < imsq[0] * rel:
            mid = (imsq[0] + imsq[1]) / 2
            return math.sqrt(float(mid))
        width = width / 2**8


def spectral_analysis_3(M, mode: str = EXACT) -> SpectralReport3:
    """Full spectral report of a 3x3 matrix, exact or floating."""
    check_mode(mode)
    if mode == FLOAT:
        return _spectral_float_3(M)
    p = char_poly(M)
    g = pgcd(p, pderiv(p))
    dg = pdeg(g)
    if dg == 2:
        r = -p[2] / 3
        if peval(p, r) != 0:
            raise InternalError("triple root candidate fails to annihilate char poly")
        N = mat_sub(M, mat_scale(r, identity(3)))
        if is_zero_matrix(N):
            mb = 1
        elif is_zero_matrix(mat_mul(N, N)):
            mb = 2
        else:
            mb = 3
        return SpectralReport3(EXACT, p, ((RealAlgebraic.from_exact(r), 3),), None, mb)
    if dg == 1:
        r = -g[0]
        s = -p[2] - 2 * r
        N1 = mat_sub(M, mat_scale(r, identity(3)))
        N2 = mat_sub(M, mat_scale(s, identity(3)))
        mb = 1 if is_zero_matrix(mat_mul(N1, N2)) else 2
        pairs = [(RealAlgebraic.from_exact(r), 2), (RealAlgebraic.from_exact(s), 1)]
        if sign(s - r) < 0:
            pairs.reverse()
        return SpectralReport3(EXACT, p, tuple(pairs), None, mb)
    # squarefree characteristic polynomial: diagonalizable over C
    roots = real_roots_squarefree(p)
    if len(roots) == 3:
        eigen = tuple((r, 1) for r in roots)
        return SpectralReport3(EXACT, p, eigen, None, 1)
    if len(roots) != 1:
        raise InternalError(f"cubic with {len(roots)} real roots")
    gamma = roots[0]
    c1, c2 = p[1], p[2]
    if gamma.is_exact:
        gv = gamma.exact
        u = c2 + gv
        v = c1 + c2 * gv + gv * gv
        re = RealAlgebraic.from_exact(-u / 2)
        imsq = v - u * u / 4
        if sign(imsq) <= 0:
            raise InternalError("complex pair with nonpositive squared imaginary part")
        s = sqrt_exact(imsq)
        if s is not None:
            im = RealAlgebraic.from_exact(s)
        else:
            b = root_bound((-imsq, Fraction(0), Fraction(1)))
            im = RealAlgebraic.from_root((-imsq, Fraction(0), Fraction(1)), Fraction(0), b)
        pair = ComplexPair(re, im, im.approx_float())
    else:
        pre = pmonic(pcompose_linear(p, Fraction(-2), -c2))
        lo, hi = gamma.interval()
        re = RealAlgebraic.from_root(pre, (-c2 - hi) / 2, (-c2 - lo) / 2)
        pair = ComplexPair(re, None, _imag_approx_from_real_root(p, gamma))
    return SpectralReport3(EXACT, p, ((gamma, 1),), pair, 1)


def _float_rank(B, tol=FLOAT_RANK_TOL) -> int:
    import numpy as np

    s = np.linalg.svd(np.asarray(B, dtype=float), compute_uv=False)
    if s.size == 0:
        return 0
    return int((s > tol * max(1.0, float(s[0]))).sum())


def _spectral_float_3(M) -> SpectralReport3:
    import numpy as np

    A = np.array([[float(v) for v in row] for row in M], dtype=float)
    ev = np.linalg.eigvals(A)
    order = np.argsort(-np.abs(ev.imag))
    ev = ev[order]
    tol = FLOAT_CLUSTER_TOL * max(1.0, float(np.abs(ev).max()) if ev.size else 1.0)
    pair = None
    reals: List[float] = []
    if abs(float(ev[0].imag)) > tol:
        re = float((ev[0].real + ev[1].real) / 2)
        im = float((abs(ev[0].imag) + abs(ev[1].imag)) / 2)
        pair = ComplexPair(re, im, im)
        reals = [float(ev[2].real)]
    else:
        reals = sorted(float(z.real) for z in ev)
    clusters: List[List[float]] = []
    for v in reals:
        if clusters and abs(v - clusters[-1][-1]) <= tol:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    eigen = []
    mb = 1
    I = np.eye(3)
    for cl in clusters:
        lam = sum(cl) / len(cl)
        mult = len(cl)
        eigen.append((lam, mult))
        if mult > 1:
            N = A - lam * I
            nullity_prev = 0
            Nk = I.copy()
            for k in range(1, 4):
                Nk = Nk @ N
                nullity = 3 - _float_rank(Nk)
                if nullity == nullity_prev:
                    break
                nullity_prev = nullity
                mb = max(mb, k)
    cp = np.poly(A)
    char = tuple(float(c) for c in cp[::-1])
    return SpectralReport3(FLOAT, char, tuple(eigen), pair, mb)
