"""Scalar arithmetic for the two computation modes.

Exact mode works in the real quadratic field Q(sqrt(2)): ordinary
``fractions.Fraction`` values, extended where necessary by :class:`QSqrt2`
elements ``a + b*sqrt(2)``.  The irrational entry sqrt(2)/2 appears in one
of the canonical Jordan normal forms handled by this package, so plain
rationals are not quite enough.  Float mode uses machine floats with the
tolerances pinned below.

A :class:`QSqrt2` instance always has a nonzero irrational part: arithmetic
that lands back in Q returns a plain ``Fraction``.  That keeps the common
all-rational code paths fast and makes ``==`` between the two types trivial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

# Float-mode comparison tolerances.  These are part of the documented
# contract: float results within these bounds are considered equal.
REL_TOL = 1e-9
ABS_TOL = 1e-9

_SQRT2_FLOAT = math.sqrt(2.0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


def _parts(x):
    """Split a field element into (rational part, sqrt2 coefficient), or None."""
    if isinstance(x, QSqrt2):
        return x.a, x.b
    if isinstance(x, (int, Fraction)):
        return _as_fraction(x), Fraction(0)
    return None


class QSqrt2:
    """An element a + b*sqrt(2) of Q(sqrt(2)) with b != 0.

    Constructing one with b == 0 yields a plain Fraction instead, so the
    class invariant "b is nonzero" holds for every live instance.
    """

    __slots__ = ("a", "b")

    def __new__(cls, a, b):
        a = _as_fraction(a)
        b = _as_fraction(b)
        if b == 0:
            return a
        self = object.__new__(cls)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        p = _parts(other)
        if p is None:
            return NotImplemented
        return QSqrt2(self.a + p[0], self.b + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = _parts(other)
        if p is None:
            return NotImplemented
        return QSqrt2(self.a - p[0], self.b - p[1])

    def __rsub__(self, other):
        p = _parts(other)
        if p is None:
            return NotImplemented
        return QSqrt2(p[0] - self.a, p[1] - self.b)

    def __mul__(self, other):
        p = _parts(other)
        if p is None:
            return NotImplemented
        oa, ob = p
        return QSqrt2(self.a * oa + 2 * self.b * ob, self.a * ob + self.b * oa)

    __rmul__ = __mul__

    def _inverse(self):
        # a^2 = 2 b^2 with rational a, b != 0 would make sqrt(2) rational.
        d = self.a * self.a - 2 * self.b * self.b
        return QSqrt2(self.a / d, -self.b / d)

    def __truediv__(self, other):
        if isinstance(other, QSqrt2):
            return self * other._inverse()
        p = _parts(other)
        if p is None:
            return NotImplemented
        return QSqrt2(self.a / p[0], self.b / p[0])

    def __rtruediv__(self, other):
        if _parts(other) is None:
            return NotImplemented
        return self._inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Fraction(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self._sign() < 0 else self

    # -- order and equality ----------------------------------------------

    def _sign(self) -> int:
        a, b = self.a, self.b
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Mixed signs: compare a^2 against 2 b^2 (they cannot be equal).
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def __eq__(self, other):
        if isinstance(other, QSqrt2):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 invariant
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, "sqrt2"))

    def __lt__(self, other):
        d = _diff_sign(self, other)
        if d is None:
            return NotImplemented
        return d < 0

    def __le__(self, other):
        d = _diff_sign(self, other)
        if d is None:
            return NotImplemented
        return d <= 0

    def __gt__(self, other):
        d = _diff_sign(self, other)
        if d is None:
            return NotImplemented
        return d > 0

    def __ge__(self, other):
        d = _diff_sign(self, other)
        if d is None:
            return NotImplemented
        return d >= 0

    # -- conversions -------------------------------------------------------

    def conjugate(self) -> "QSqrt2":
        """The field conjugate a - b*sqrt(2)."""
        return QSqrt2(self.a, -self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT2_FLOAT

    def __repr__(self):
        return f"QSqrt2({self.a!r}, {self.b!r})"

    def __str__(self):
        return format_value(self, EXACT)


SQRT2 = QSqrt2(0, 1)
SQRT2_HALF = QSqrt2(0, Fraction(1, 2))

Scalar = Union[int, Fraction, QSqrt2, float]
ExactScalar = Union[int, Fraction, QSqrt2]


def _diff_sign(x, y) -> Optional[int]:
    """Sign of x - y for field elements, None if y is foreign."""
    if _parts(y) is None:
        return None
    d = x - y
    if isinstance(d, QSqrt2):
        return d._sign()
    return 0 if d == 0 else (1 if d > 0 else -1)


def sign(x) -> int:
    """Exact sign (-1, 0, 1) of a field element, or math sign of a float."""
    if isinstance(x, QSqrt2):
        return x._sign()
    if isinstance(x, (int, Fraction)):
        return 0 if x == 0 else (1 if x > 0 else -1)
    if isinstance(x, float):
        return 0 if x == 0.0 else (1 if x > 0 else -1)
    raise TypeError(f"no sign for {type(x).__name__}")


def abs_value(x):
    return -x if sign(x) < 0 else x


def is_exact_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QSqrt2))


def _sqrt_fraction(f: Fraction) -> Optional[Fraction]:
    """Exact rational square root, or None."""
    if f < 0:
        return None
    ns = math.isqrt(f.numerator)
    ds = math.isqrt(f.denominator)
    if ns * ns == f.numerator and ds * ds == f.denominator:
        return Fraction(ns, ds)
    return None


def sqrt_exact(x) -> Optional[ExactScalar]:
    """The exact nonnegative square root of x within Q(sqrt(2)), or None.

    None means either x < 0 or x is not a perfect square in the field.
    """
    p = _parts(x)
    if p is None:
        raise TypeError(f"sqrt_exact expects a field element, got {type(x).__name__}")
    a, b = p
    if b == 0:
        if a < 0:
            return None
        r = _sqrt_fraction(a)
        if r is not None:
            return r
        # a = 2 r^2 gives sqrt(a) = r*sqrt(2)
        r = _sqrt_fraction(a / 2)
        if r is not None:
            return QSqrt2(0, r)
        return None
    if sign(x) < 0:
        return None
    # Solve (u + v*sqrt(2))^2 = a + b*sqrt(2): u^2 + 2 v^2 = a, 2 u v = b.
    # u^2 and 2 v^2 are the roots of z^2 - a z + b^2 / 2.
    disc = a * a - 2 * b * b
    s = _sqrt_fraction(disc)
    if s is None:
        return None
    for usq in ((a + s) / 2, (a - s) / 2):
        u = _sqrt_fraction(usq)
        if u is None or u == 0:
            continue
        v = b / (2 * u)
        if u * u + 2 * v * v == a:
            root = QSqrt2(u, v)
            return root if sign(root) > 0 else -root
    return None


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


def as_mode_scalar(value, mode: str):
    """Coerce a numeric value into the given mode, or raise ModeMismatch."""
    from .errors import ModeMismatch

    check_mode(mode)
    if mode == EXACT:
        if isinstance(value, bool) or not is_exact_scalar(value):
            raise ModeMismatch(
                f"exact mode requires Fraction/int/QSqrt2 values, got {value!r}"
            )
        return Fraction(value) if isinstance(value, int) else value
    if isinstance(value, bool) or not isinstance(value, (int, float, Fraction, QSqrt2)):
        raise ModeMismatch(f"float mode requires numeric values, got {value!r}")
    return float(value)


def scalars_equal(x, y, mode: str = EXACT) -> bool:
    if mode == EXACT:
        return x == y
    return math.isclose(float(x), float(y), rel_tol=REL_TOL, abs_tol=ABS_TOL)


def scalar_is_zero(x, mode: str = EXACT) -> bool:
    if mode == EXACT:
        return x == 0
    return math.isclose(float(x), 0.0, rel_tol=REL_TOL, abs_tol=ABS_TOL)


def _parse_sqrt2_text(text: str):
    """Parse "a+b*sqrt2" shaped strings (the format_value output grammar)."""
    from .errors import ParseError

    s = text.replace(" ", "")
    idx = s.find("sqrt2")
    if idx < 0 or s[idx + 5 :]:
        raise ParseError(f"bad exact value {text!r}")
    head = s[:idx]
    try:
        if head in ("", "+"):
            return QSqrt2(0, 1)
        if head == "-":
            return QSqrt2(0, -1)
        # Split off the rational part at the last interior sign.
        cut = 0
        for pos in range(len(head) - 1, 0, -1):
            if head[pos] in "+-" and head[pos - 1] not in "+-/*":
                cut = pos
                break
        a = Fraction(head[:cut]) if cut else Fraction(0)
        coef = head[cut:].rstrip("*")
        if coef in ("", "+"):
            b = Fraction(1)
        elif coef == "-":
            b = Fraction(-1)
        else:
            b = Fraction(coef)
        return QSqrt2(a, b)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad exact value {text!r}: {exc}") from None


def parse_value(text, mode: str):
    """Parse one component value: "p/q" strings in exact mode, numbers in float.

    Strings of the form "a+b*sqrt2" (the serialization of QSqrt2 values) are
    accepted as well, so every serializable scalar reads back.
    """
    from .errors import ModeMismatch, ParseError

    check_mode(mode)
    if mode == EXACT:
        if isinstance(text, bool):
            raise ParseError(f"not a value: {text!r}")
        if isinstance(text, int):
            return Fraction(text)
        if isinstance(text, float):
            raise ModeMismatch(f"float value {text!r} in an exact document")
        if isinstance(text, str):
            if "sqrt2" in text:
                return _parse_sqrt2_text(text)
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad exact value {text!r}: {exc}") from None
        raise ParseError(f"bad exact value {text!r}")
    if isinstance(text, bool):
        raise ParseError(f"not a value: {text!r}")
    if isinstance(text, (int, float)):
        return float(text)
    if isinstance(text, str):
        if "sqrt2" in text:
            return float(_parse_sqrt2_text(text))
        try:
            return float(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad float value {text!r}: {exc}") from None
    raise ParseError(f"bad float value {text!r}")


def format_value(x, mode: str = EXACT):
    """Render a scalar for JSON output.

    Exact rationals become "p/q" strings (integers stay plain "p"); QSqrt2
    values spell out the sqrt(2) part; floats pass through unchanged.
    """
    if mode == FLOAT or isinstance(x, float):
        return float(x)
    if isinstance(x, QSqrt2):
        a, b = x.a, x.b
        bpart = "sqrt2" if abs(b) == 1 else f"{abs(b)}*sqrt2"
        if a == 0:
            return f"-{bpart}" if b < 0 else bpart
        return f"{a}{'-' if b < 0 else '+'}{bpart}"
    return str(_as_fraction(x))
