"""
The corner function
===================

In a reduced polygon of thickness w, the angle at a vertex between its
side and the chord to the opposite foot is a function F of the crossing
angle phi at the chord intersection. F is decreasing and concave, which is
what makes the regular polygon the area maximiser (Jensen on sum F(phi)).
"""
import math

import numpy as np

from spherigon import ThicknessProfile
from spherigon import scalars

phi = np.linspace(0.05, math.pi / 2 - 0.05, 7)
for lam in (0.25, 1.0, 4.0):
    prof = ThicknessProfile(math.atan(lam))
    F = scalars.corner_from_crossing(phi, prof)
    slope = scalars.corner_from_crossing_slope(phi, prof)
    curv = scalars.corner_from_crossing_curvature(phi, prof)
    print(f"lambda = tan w = {lam}")
    for row in zip(phi, F, slope, curv):
        print("  phi {:.3f}  F {:.6f}  F' {:+.6f}  F'' {:+.6f}".format(*row))

# %%
# Closed-form derivatives against central differences.
prof = ThicknessProfile(math.atan(2.0))
h = 1e-5
fd = (scalars.corner_from_crossing(phi + h, prof) - scalars.corner_from_crossing(phi - h, prof)) / (2 * h)
print("\nmax relative slope error", np.max(np.abs(fd / scalars.corner_from_crossing_slope(phi, prof) - 1)))

# %%
# The ratio of the two complementary angles in the right triangle is
# decreasing in the short-leg tangent y on (0, tan(w/2)).
y = np.linspace(0, prof.x_max, 9)[1:-1]
print("\ncoangle/crossing ratio", np.round(scalars.coangle_ratio(y, prof), 6))
