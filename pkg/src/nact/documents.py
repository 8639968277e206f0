"""JSON interchange documents for single tensors and sampled tensor fields.

Two formats: "nact-v1" carries one curvature tensor as a sparse list of
1-based components (everything else is completed by symmetry or zero), and
"nact-field-v1" carries an ordered, mode-homogeneous list of such tensors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curvature import DIM, CurvatureTensor, from_components
from .errors import ModeMismatch, ParseError
from .scalars import EXACT, MODES, format_value, parse_value

TENSOR_FORMAT = "nact-v1"
FIELD_FORMAT = "nact-field-v1"

# Orbit representatives: i<j, k<l, (i,j) <= (k,l) lexicographically.
_PAIRS = [(i, j) for i in range(DIM) for j in range(i + 1, DIM)]


@dataclass(frozen=True)
class TensorDocument:
    tensor: CurvatureTensor
    point_label: Optional[str] = None


@dataclass(frozen=True)
class FieldDocument:
    tensors: tuple[CurvatureTensor, ...]
    labels: tuple[Optional[str], ...]
    mode: str


def _require_dict(data, what: str) -> dict:
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object, got {type(data).__name__}")
    return data


def _doc_mode(data: dict) -> str:
    mode = data.get("mode", EXACT)
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r}")
    return mode


def _component_pairs(data: dict, mode: str):
    comps = data.get("components", [])
    if not isinstance(comps, list):
        raise ParseError("components must be a list")
    pairs = []
    for entry in comps:
        entry = _require_dict(entry, "component entry")
        idx = entry.get("indices")
        if (
            not isinstance(idx, list)
            or len(idx) != 4
            or not all(isinstance(i, int) and not isinstance(i, bool) for i in idx)
        ):
            raise ParseError(f"indices must be four integers, got {idx!r}")
        if not all(1 <= i <= DIM for i in idx):
            raise ParseError(f"indices out of range 1..{DIM}: {idx!r}")
        if "value" not in entry:
            raise ParseError(f"component {idx!r} has no value")
        pairs.append((tuple(idx), parse_value(entry["value"], mode)))
    return pairs


def _parse_tensor_body(data: dict, mode: str, label_default=None):
    tensor = from_components(_component_pairs(data, mode), mode)
    label = data.get("point_label", label_default)
    if label is not None and not isinstance(label, str):
        raise ParseError(f"point_label must be a string, got {label!r}")
    return TensorDocument(tensor, label)


def parse_document(data):
    """Parse a decoded JSON object into a TensorDocument or FieldDocument.

    A missing "format" field means "nact-v1"; missing "mode" means exact.
    """
    data = _require_dict(data, "document")
    fmt = data.get("format", TENSOR_FORMAT)
    if fmt == TENSOR_FORMAT:
        return _parse_tensor_body(data, _doc_mode(data))
    if fmt == FIELD_FORMAT:
        entries = data.get("tensors")
        if not isinstance(entries, list) or not entries:
            raise ParseError("field document needs a non-empty tensors list")
        mode = _doc_mode(data)
        docs = []
        for k, entry in enumerate(entries):
            entry = _require_dict(entry, f"tensors[{k}]")
            efmt = entry.get("format", TENSOR_FORMAT)
            if efmt != TENSOR_FORMAT:
                raise ParseError(f"tensors[{k}]: unexpected format {efmt!r}")
            if entry.get("mode", mode) != mode:
                raise ModeMismatch(
                    f"tensors[{k}] mode {entry['mode']!r} differs from field mode {mode!r}"
                )
            docs.append(_parse_tensor_body(entry, mode))
        return FieldDocument(
            tensors=tuple(d.tensor for d in docs),
            labels=tuple(d.point_label for d in docs),
            mode=mode,
        )
    raise ParseError(f"unknown format {fmt!r}")


def _canonical_components(A: CurvatureTensor) -> list:
    comps = []
    for pi, (i, j) in enumerate(_PAIRS):
        for k, l in _PAIRS[pi:]:
            v = A.comp[i][j][k][l]
            if v == 0:
                continue
            comps.append(
                {
                    "indices": [i + 1, j + 1, k + 1, l + 1],
                    "value": format_value(v, A.mode),
                }
            )
    return comps


def serialize_tensor(A: CurvatureTensor, point_label: Optional[str] = None) -> dict:
    """The canonical sparse document for a tensor: one entry per nonzero orbit."""
    doc = {
        "format": TENSOR_FORMAT,
        "mode": A.mode,
        "components": _canonical_components(A),
    }
    if point_label is not None:
        doc["point_label"] = point_label
    return doc


def serialize_field(tensors, labels=None) -> dict:
    tensors = tuple(tensors)
    if not tensors:
        raise ParseError("cannot serialize an empty field")
    mode = tensors[0].mode
    if any(t.mode != mode for t in tensors):
        raise ModeMismatch("field members must share one mode")
    if labels is None:
        labels = (None,) * len(tensors)
    entries = []
    for t, label in zip(tensors, labels):
        entry = {"components": _canonical_components(t)}
        if label is not None:
            entry["point_label"] = label
        entries.append(entry)
    return {"format": FIELD_FORMAT, "mode": mode, "tensors": entries}
