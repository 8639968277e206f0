"""Command-line interface: JSON documents in, JSON verdicts out.

Every subcommand reads a document from a file argument (``-`` or omitted
means stdin), prints a single JSON object to stdout, and exits with
0  success (including negative verdicts that are ordinary answers),
1  a documented semantic failure (classify/field-check on non-Osserman
   input, verify with failing invariants),
2  invalid input (malformed JSON, symmetry violations, bad parameters),
3  an internal invariant breakage.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import classify, field_constancy_check
from .clifford import (
    decompose,
    decomposition_from_jacobi,
    is_conformally_osserman,
    is_osserman,
    random_osserman,
    reconstruct,
)
from .curvature import (
    CurvatureTensor,
    build_type,
    is_zero_tensor,
    max_abs_diff,
    random_curvature_tensor,
    ricci,
    scalar_curv,
    weyl,
)
from .documents import (
    FieldDocument,
    TensorDocument,
    parse_document,
    serialize_tensor,
)
from .errors import (
    InternalError,
    InvalidParameter,
    NactError,
    NotOsserman,
    ParseError,
)
from .linalg import max_abs_entry
from .scalars import EXACT, FLOAT, QSqrt2, format_value, parse_value
from .selfduality import duality_verdict
from .spectral import RealAlgebraic

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def render_scalar(x):
    """A JSON-friendly rendering: ints stay ints, other exact values become
    strings, floats (and certified approximations) become numbers."""
    if isinstance(x, bool):
        raise InternalError(f"not a scalar: {x!r}")
    if isinstance(x, float):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, QSqrt2):
        return format_value(x, EXACT)
    if isinstance(x, RealAlgebraic):
        return x.approx_float()
    raise InternalError(f"cannot render {type(x).__name__} for JSON")


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _error_payload(exc: BaseException) -> dict:
    info = {"type": type(exc).__name__, "message": str(exc)}
    kind = getattr(exc, "kind", None)
    if kind is not None:
        info["kind"] = kind
    indices = getattr(exc, "indices", None)
    if indices is not None:
        info["indices"] = list(indices)
    index = getattr(exc, "index", None)
    if index is not None:
        info["index"] = index
    return {"error": info}


def _load_json(path):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def _load_tensor(args) -> CurvatureTensor:
    doc = parse_document(_load_json(args.file))
    if not isinstance(doc, TensorDocument):
        raise ParseError("this command expects a single-tensor document")
    return doc.tensor


def _load_field(args) -> FieldDocument:
    doc = parse_document(_load_json(args.file))
    if isinstance(doc, TensorDocument):
        raise ParseError("this command expects a field document")
    return doc


def _lambda0(args, mode: str):
    if getattr(args, "lambda0", None) is None:
        return 0
    return parse_value(args.lambda0, mode)


def _lambda_record(dec) -> dict:
    return {name: render_scalar(v) for name, v in dec.coefficients().items()}


def _marked(payload: dict, mode: str) -> dict:
    # In float mode equality degrades to tolerance comparison; flag the
    # verdict so consumers can tell it apart from an exact one.
    if mode == FLOAT:
        payload["numerical"] = True
    return payload


# --------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    try:
        doc = parse_document(_load_json(args.file))
    except NactError as exc:
        _emit({"valid": False, **_error_payload(exc)})
        return EXIT_INPUT
    if isinstance(doc, TensorDocument):
        payload = {"valid": True, "mode": doc.tensor.mode}
    else:
        payload = {"valid": True, "mode": doc.mode, "tensors": len(doc.tensors)}
    _emit(payload)
    return EXIT_OK


def cmd_info(args) -> int:
    A = _load_tensor(args)
    ric = ricci(A)
    _emit(
        {
            "ricci": [[render_scalar(v) for v in row] for row in ric],
            "scal": render_scalar(scalar_curv(A)),
            "weyl_nonzero": not is_zero_tensor(weyl(A)),
        }
    )
    return EXIT_OK


def cmd_osserman(args) -> int:
    A = _load_tensor(args)
    decision = is_conformally_osserman(A) if args.conformal else is_osserman(A)
    if decision.osserman:
        dec = decision.decomposition
        lam0 = _lambda0(args, A.mode)
        if lam0 != 0:
            dec = decompose(decision.target, lam0)
        _emit(_marked({"osserman": True, "lambdas": _lambda_record(dec)}, A.mode))
    else:
        payload = {"osserman": False, "residual": render_scalar(decision.residual)}
        _emit(_marked(payload, A.mode))
    return EXIT_OK


def cmd_classify(args) -> int:
    A = _load_tensor(args)
    t = classify(A, conformal=args.conformal)
    payload = {"type": t.tag, "params": [render_scalar(p) for p in t.params]}
    _emit(_marked(payload, A.mode))
    return EXIT_OK


def cmd_decompose(args) -> int:
    A = _load_tensor(args)
    dec = decompose(A, _lambda0(args, A.mode))
    residual = max_abs_diff(reconstruct(dec), A)
    payload = {"lambdas": _lambda_record(dec), "residual": render_scalar(residual)}
    _emit(_marked(payload, A.mode))
    return EXIT_OK


def cmd_selfdual(args) -> int:
    A = _load_tensor(args)
    verdict = duality_verdict(A)
    payload = {
        "w_plus_norm": render_scalar(max_abs_entry(verdict.split.w_plus)),
        "w_minus_norm": render_scalar(max_abs_entry(verdict.split.w_minus)),
        "self_dual": verdict.self_dual,
        "anti_self_dual": verdict.anti_self_dual,
    }
    _emit(_marked(payload, A.mode))
    return EXIT_OK


def _parse_params(text: str):
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad --params {text!r}: {exc}") from None


def _type_iv_rational(alpha) -> CurvatureTensor:
    # Same Jordan class as the canonical Type IV model, but with a rational
    # nilpotent part, so the emitted document needs no sqrt(2) values.
    one = Fraction(1)
    j3 = (
        (alpha, Fraction(0), one),
        (Fraction(0), alpha, one),
        (-one, one, alpha),
    )
    return reconstruct(decomposition_from_jacobi(j3))


def cmd_generate(args) -> int:
    tag = args.type
    params = _parse_params(args.params) if args.params is not None else None
    if tag in ("I", "II", "III", "IV"):
        if params is None:
            A = random_osserman(args.seed, type_hint=tag)
        elif tag == "IV":
            if len(params) != 1:
                raise InvalidParameter("type IV takes one parameter: alpha")
            A = _type_iv_rational(params[0])
        else:
            A = build_type(tag, params)
    elif tag == "osserman":
        if params is not None:
            raise InvalidParameter("--params only applies to typed generators")
        A = random_osserman(args.seed)
    else:  # generic
        if params is not None:
            raise InvalidParameter("--params only applies to typed generators")
        A = random_curvature_tensor(args.seed)
    _emit(serialize_tensor(A))
    return EXIT_OK


def cmd_field_check(args) -> int:
    doc = _load_field(args)
    result = field_constancy_check(list(doc.tensors), conformal=args.conformal)
    t = result.type0
    payload = {
        "constant": result.constant,
        "type": None
        if t is None
        else {"type": t.tag, "params": [render_scalar(p) for p in t.params]},
        "first_deviation": result.first_deviation,
    }
    _emit(_marked(payload, doc.mode))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verification import run_all

    results = run_all(samples=args.samples)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status}  {res.name}"
        if res.detail and not res.passed:
            line += f": {res.detail}"
        print(line)
        failed += 0 if res.passed else 1
    print(f"{len(results) - failed}/{len(results)} invariants hold")
    return EXIT_OK if failed == 0 else EXIT_VERDICT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nact",
        description="Exact computations with neutral-signature algebraic curvature tensors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, tensor_file=True):
        p = sub.add_parser(name, help=help_text)
        if tensor_file:
            p.add_argument("file", nargs="?", default="-", help="input document ('-' = stdin)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a document against the curvature symmetries")
    add("info", cmd_info, "Ricci form, scalar curvature, Weyl part presence")

    p = add("osserman", cmd_osserman, "decide the (conformally) Osserman property")
    p.add_argument("--conformal", action="store_true", help="decide on the Weyl part")
    p.add_argument("--lambda0", metavar="p/q", help="gauge for the reported coefficients")

    p = add("classify", cmd_classify, "Jordan type of an Osserman tensor")
    p.add_argument("--conformal", action="store_true", help="classify the Weyl part")

    p = add("decompose", cmd_decompose, "modified Clifford coefficients and residual")
    p.add_argument("--lambda0", metavar="p/q", help="gauge for the coefficients")

    add("selfdual", cmd_selfdual, "Weyl operator split against the Hodge star")

    p = add("generate", cmd_generate, "emit a deterministic tensor document", tensor_file=False)
    p.add_argument(
        "--type",
        required=True,
        choices=["I", "II", "III", "IV", "osserman", "generic"],
        help="what to generate",
    )
    p.add_argument("--seed", type=int, default=0, help="deterministic seed")
    p.add_argument("--params", help="comma-separated rational parameters")

    p = add("field-check", cmd_field_check, "Jordan-type constancy across a tensor family")
    p.add_argument("--conformal", action="store_true", help="compare Weyl parts")

    p = add("verify", cmd_verify, "run the named invariant suite", tensor_file=False)
    p.add_argument("--samples", type=int, default=None, help="override sample counts")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotOsserman as exc:
        _emit(_error_payload(exc))
        return EXIT_VERDICT
    except InternalError as exc:
        _emit(_error_payload(exc))
        return EXIT_INTERNAL
    except NactError as exc:
        _emit(_error_payload(exc))
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - map bugs to the documented code
        _emit({"error": {"type": "InternalError", "message": f"{type(exc).__name__}: {exc}"}})
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
