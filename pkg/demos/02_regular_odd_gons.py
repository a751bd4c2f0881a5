"""
Regular odd-gons of fixed thickness
===================================

A regular polygon with an odd number of vertices and thickness below pi/2
has every vertex at the same distance from its opposite side. This script
builds a few, checks that, and watches the area grow with the vertex
count towards 2 (1 - cos(w/2)) pi.
"""
import math

import numpy as np

from spherigon import decompose, girard_area, is_reduced, limit_area, regular_area, regular_odd_gon, thickness

w = 0.8

# %%
# Reducedness: all vertex-to-opposite-side distances equal the thickness.
for n in (3, 5, 9, 101):
    poly = regular_odd_gon(n, w)
    ok, diag = is_reduced(poly, omega=w)
    print(f"n={n:>3}  reduced={ok}  max residual {np.max(np.abs(diag.residuals)):.1e}"
          f"  sampled thickness {thickness(poly).value:.10f}")

# %%
# Each chord from a vertex to the foot on its opposite side passes through
# the center, and consecutive chords meet at angle pi/n.
dec = decompose(regular_odd_gon(5, w), w)
print("\ncrossing angles", dec.phi, " pi/5 =", math.pi / 5)
print("sum", dec.phi.sum())

# %%
# Area against the vertex count. Two closed forms are used internally and
# must agree with the plain angle excess.
print(f"\n{'n':>5} {'area':>16} {'angle excess':>16} {'gap to limit':>14}")
for n in (3, 5, 7, 9, 15, 31, 101, 1001):
    a = regular_area(n, w)
    print(f"{n:>5} {a:16.12f} {girard_area(regular_odd_gon(n, w)):16.12f} {limit_area(w) - a:14.3e}")
print(f"limit {limit_area(w):16.12f}")
