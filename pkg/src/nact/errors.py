"""Exception hierarchy shared across the package."""

from __future__ import annotations


class NactError(Exception):
    """Base class for every error raised deliberately by this library."""


class ParseError(NactError):
    """Malformed document, value string, or parameter list."""


class ModeMismatch(NactError):
    """Exact and floating-point data were mixed in a single computation."""


class SymmetryViolation(NactError):
    """A curvature symmetry identity fails.

    ``kind`` is one of ``"antisymmetry-12"``, ``"antisymmetry-34"``,
    ``"pair-symmetry"``, ``"first-bianchi"``, ``"inconsistent-components"``.
    ``indices`` is the 1-based quadruple at which the identity first fails.
    """

    def __init__(self, kind: str, indices, message: str | None = None):
        self.kind = kind
        self.indices = tuple(indices)
        super().__init__(message or f"{kind} violated at indices {self.indices}")


class NonUnitVector(NactError):
    """A vector expected to satisfy g(x,x) = -1 (or +1) does not."""


class NotSkewAdjoint(NactError):
    """An endomorphism expected to be skew-adjoint for g is not."""


class NotAnIsometry(NactError):
    """A matrix expected to preserve g does not."""


class InvalidParameter(NactError):
    """A parameter is outside its documented domain."""


class InvalidTriple(NactError):
    """Three endomorphisms fail the Clifford-structure relations."""


class NotOsserman(NactError):
    """An operation that requires an Osserman input received a non-Osserman one."""

    def __init__(self, message: str = "tensor is not Osserman", index: int | None = None):
        self.index = index
        if index is not None:
            message = f"{message} (field position {index})"
        super().__init__(message)


class InternalError(NactError):
    """An invariant the library guarantees was found broken; this is a bug."""
