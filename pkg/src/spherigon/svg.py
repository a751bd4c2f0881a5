"""Static SVG figure of a polygon with its projection feet and chords."""
from __future__ import annotations

import numpy as np

from .core import SphericalPolygon, slerp, tangent_basis
from .reduced import ReducedDecomposition

SIZE = 480
MARGIN = 40
ARC_STEPS = 24


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(poly: SphericalPolygon, dec: ReducedDecomposition | None = None) -> str:
    """Orthographic view centred on the vertex centroid.

    Output depends only on the input coordinates, so identical input gives
    byte-identical SVG.
    """
    center = poly.centroid_direction
    e1, e2 = tangent_basis(center)
    v = poly.vertices
    n = len(v)
    t = np.linspace(0.0, 1.0, ARC_STEPS + 1)

    outline = np.concatenate([slerp(v[i], v[(i + 1) % n], t[:-1]) for i in range(n)])
    extent = max(float(np.max(np.abs(outline @ e1))), float(np.max(np.abs(outline @ e2))), 1e-9)
    scale = (SIZE / 2 - MARGIN) / extent

    def xy(p):
        p = np.atleast_2d(p)
        return SIZE / 2 + scale * (p @ e1), SIZE / 2 - scale * (p @ e2)

    def path(points, close=False):
        xs, ys = xy(points)
        d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in zip(xs, ys))
        return d + (" Z" if close else "")

    def dot(p, cls, r):
        x, y = xy(p)
        return f'<circle class="{cls}" cx="{_fmt(x[0])}" cy="{_fmt(y[0])}" r="{r}"/>'

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        "<style>.polygon{fill:#eef3fb;stroke:#1f3b73;stroke-width:1.5}"
        ".chord{fill:none;stroke:#b03a2e;stroke-width:1}"
        ".vertex{fill:#1f3b73}.foot{fill:#b03a2e}.crossing{fill:#1e8449}"
        "text{font:12px sans-serif}</style>",
        f'<path class="polygon" d="{path(outline, close=True)}"/>',
    ]
    if dec is not None:
        for i in range(n):
            out.append(f'<path class="chord" d="{path(slerp(v[i], dec.feet[i], t))}"/>')
        out.extend(dot(p, "foot", 2.5) for p in dec.feet)
        out.extend(dot(p, "crossing", 2) for p in dec.crossings)
    out.extend(dot(p, "vertex", 3.5) for p in v)
    for i, p in enumerate(v):
        x, y = xy(1.06 * p - 0.06 * center)
        out.append(f'<text x="{_fmt(x[0])}" y="{_fmt(y[0])}">v{i + 1}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
