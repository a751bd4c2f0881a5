"""
Non-regular reduced polygons
============================

Start from a regular heptagon, jitter the vertices, and project back onto
the set where every vertex is at distance w from its opposite side. The
result is reduced but not regular, and has strictly smaller area.
"""
import math
from pathlib import Path

import numpy as np

from spherigon import (
    butterfly_decomposition,
    decompose,
    girard_area,
    is_reduced,
    limit_area,
    perturbed_reduced_polygon,
    regular_area,
    thickness,
)
from spherigon.reduced import uncovered_points
from spherigon.svg import render_svg

n, w = 7, 1.0
poly = perturbed_reduced_polygon(n, w, seed=42)
ok, diag = is_reduced(poly, omega=w)
print("reduced", ok, " side lengths", np.round(poly.side_lengths, 4))
print("thickness", thickness(poly).value)

# %%
# The chords no longer meet in one point, yet the crossing angles still
# add up to at least pi.
dec = decompose(poly, w)
print("\ncrossing angles", np.round(dec.phi, 5))
print(f"sum - pi = {dec.phi.sum() - math.pi:.3e}")

# %%
# Area: below the regular heptagon of the same thickness, and below the
# limit over all regular odd-gons.
s = girard_area(poly)
print(f"\narea {s:.10f}  regular {regular_area(n, w):.10f}  limit {limit_area(w):.10f}")

# %%
# Butterflies: pairs of right triangles around each chord crossing. They
# cover the polygon, so their areas add up to at least its area.
bfs = butterfly_decomposition(dec)
print(f"\nbutterfly total {sum(b.area for b in bfs):.10f} vs area {s:.10f}")
print("uncovered sample points:", uncovered_points(dec, 100_000, seed=0, butterflies=bfs))

# %%
out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
(out / "perturbed_heptagon.svg").write_text(render_svg(poly, dec), encoding="utf-8")
print("\nwrote", out / "perturbed_heptagon.svg")
