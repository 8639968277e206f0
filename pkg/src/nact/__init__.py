"""Exact computations with 4-dimensional neutral-signature curvature tensors.

The package decides the (conformally) Osserman property through a modified
Clifford decomposition, classifies restricted Jacobi operators into the four
Jordan types, and cross-checks conformal Osserman-ness against one-sided
duality of the Weyl operator on two-forms.
"""

from .classify import (
    FieldConstancyResult,
    OssermanType,
    classify,
    classify_jacobi,
    field_constancy_check,
    keys_equal,
)
from .clifford import (
    CliffordTriple,
    ModifiedCliffordDecomposition,
    OssermanDecision,
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
from .curvature import (
    CurvatureTensor,
    build_type,
    from_components,
    is_zero_tensor,
    jacobi,
    jacobi_matrix_e1,
    jacobi_operator,
    kulkarni_nomizu,
    max_abs_diff,
    pullback,
    r0,
    r_phi,
    random_curvature_tensor,
    ricci,
    scalar_curv,
    tensor_add,
    tensor_scale,
    tensor_sub,
    tensors_equal,
    to_float,
    validate,
    weyl,
)
from .documents import (
    FieldDocument,
    TensorDocument,
    parse_document,
    serialize_field,
    serialize_tensor,
)
from .errors import (
    InternalError,
    InvalidParameter,
    InvalidTriple,
    ModeMismatch,
    NactError,
    NonUnitVector,
    NotAnIsometry,
    NotOsserman,
    NotSkewAdjoint,
    ParseError,
    SymmetryViolation,
)
from .linalg import (
    DIM,
    EPS,
    basis_vector,
    cayley,
    char_poly,
    inner,
    metric_matrix,
    random_isometry,
)
from .scalars import (
    EXACT,
    FLOAT,
    QSqrt2,
    SQRT2,
    format_value,
    parse_value,
    sqrt_exact,
)
from .selfduality import (
    DualityVerdict,
    WeylSplit,
    curvature_operator_on_lambda2,
    duality_verdict,
    hodge_star,
    lambda2_metric,
    weyl_split,
)
from .spectral import RealAlgebraic, SpectralReport3, spectral_analysis_3
from .verification import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CliffordTriple",
    "CurvatureTensor",
    "DIM",
    "DualityVerdict",
    "EPS",
    "EXACT",
    "FLOAT",
    "FieldConstancyResult",
    "FieldDocument",
    "InternalError",
    "InvalidParameter",
    "InvalidTriple",
    "ModeMismatch",
    "ModifiedCliffordDecomposition",
    "NactError",
    "NonUnitVector",
    "NotAnIsometry",
    "NotOsserman",
    "NotSkewAdjoint",
    "OssermanDecision",
    "OssermanType",
    "ParseError",
    "QSqrt2",
    "RealAlgebraic",
    "SQRT2",
    "SpectralReport3",
    "SymmetryViolation",
    "TensorDocument",
    "WeylSplit",
    "basis_vector",
    "brute_force_osserman_oracle",
    "build_type",
    "cayley",
    "char_poly",
    "classify",
    "classify_jacobi",
    "conjugate_triple",
    "curvature_operator_on_lambda2",
    "decompose",
    "decomposition_from_jacobi",
    "duality_verdict",
    "field_constancy_check",
    "format_value",
    "from_components",
    "hodge_star",
    "inner",
    "is_conformally_osserman",
    "is_osserman",
    "is_zero_tensor",
    "jacobi",
    "jacobi_matrix_e1",
    "jacobi_operator",
    "keys_equal",
    "kulkarni_nomizu",
    "lambda2_metric",
    "max_abs_diff",
    "metric_matrix",
    "modified_term",
    "osserman_witness",
    "parse_document",
    "parse_value",
    "pullback",
    "r0",
    "r_phi",
    "random_curvature_tensor",
    "random_isometry",
    "random_osserman",
    "random_unit_vector",
    "reconstruct",
    "ricci",
    "run_all",
    "scalar_curv",
    "serialize_field",
    "serialize_tensor",
    "spectral_analysis_3",
    "sqrt_exact",
    "standard_triple",
    "tensor_add",
    "tensor_scale",
    "tensor_sub",
    "tensors_equal",
    "to_float",
    "validate",
    "verify_triple",
    "weyl",
    "weyl_split",
]
