"""JSON documents for polygons and reduced-polygon decompositions."""
from __future__ import annotations

import json
import warnings
from pathlib import Path

import numpy as np

from .config import DEFAULT
from .core import SphericalPolygon
from .errors import InvalidPolygon, SpherigonError
from .reduced import ReducedDecomposition

POLYGON_FORMAT = "spherigon-polygon/1"
DECOMP_FORMAT = "spherigon-decomp/1"


class DocumentError(SpherigonError):
    """Malformed or unsupported JSON document."""


def polygon_to_dict(poly: SphericalPolygon, thickness_hint: float | None = None) -> dict:
    return {
        "format": POLYGON_FORMAT,
        "vertices": [[float(c) for c in v] for v in poly.vertices],
        "thickness_hint": None if thickness_hint is None else float(thickness_hint),
    }


def polygon_from_dict(doc: dict) -> tuple[SphericalPolygon, float | None]:
    """Parse a polygon document; returns the polygon and its thickness hint.

    Vertices off the unit sphere by more than 1e-9 are rejected; smaller
    defects are renormalized, with a warning above 1e-12.
    """
    if not isinstance(doc, dict) or doc.get("format") != POLYGON_FORMAT:
        raise DocumentError(f"expected a {POLYGON_FORMAT!r} document")
    try:
        v = np.array(doc["vertices"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad vertex list: {exc}") from None
    if v.ndim != 2 or v.shape[1] != 3:
        raise DocumentError("vertices must be a list of [x, y, z] triples")
    defect = np.abs(np.linalg.norm(v, axis=1) - 1.0)
    if np.any(defect > DEFAULT.load_unit):
        raise DocumentError(f"vertex off the unit sphere by {defect.max():.3e}")
    if np.any(defect > DEFAULT.unit):
        warnings.warn(f"renormalizing vertices (max norm defect {defect.max():.3e})", stacklevel=2)
    hint = doc.get("thickness_hint")
    if hint is not None and not isinstance(hint, (int, float)):
        raise DocumentError("thickness_hint must be a number or null")
    try:
        poly = SphericalPolygon(v / np.linalg.norm(v, axis=1, keepdims=True))
    except InvalidPolygon as exc:
        raise DocumentError(str(exc)) from None
    return poly, None if hint is None else float(hint)


def save_polygon(path, poly: SphericalPolygon, thickness_hint: float | None = None) -> None:
    text = json.dumps(polygon_to_dict(poly, thickness_hint), indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_polygon(path) -> tuple[SphericalPolygon, float | None]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc})") from None
    return polygon_from_dict(doc)


def decomposition_to_dict(dec: ReducedDecomposition) -> dict:
    return {"format": DECOMP_FORMAT, "omega": float(dec.omega), "rows": dec.rows()}


def save_decomposition(path, dec: ReducedDecomposition) -> None:
    text = json.dumps(decomposition_to_dict(dec), indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")
