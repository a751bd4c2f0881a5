"""
Measuring a spherical polygon
=============================

Three independent ways to get the area of a convex polygon on the unit
sphere, and the thickness (width of the narrowest lune that holds it).
"""
import math

import numpy as np

from spherigon import (
    SphericalPolygon,
    area_oracle_montecarlo,
    area_oracle_triangulated,
    girard_area,
    interior_angles,
    thickness,
)

# %%
# The octant triangle: three right angles, so the angle excess is pi/2.
octant = SphericalPolygon(np.eye(3))
print("interior angles", interior_angles(octant))
print("girard        ", girard_area(octant), " expected", math.pi / 2)
print("triangulated  ", area_oracle_triangulated(octant))
est, se = area_oracle_montecarlo(octant, 1_000_000, seed=0)
print(f"monte carlo    {est:.5f} +- {se:.5f}")

# %%
# A random convex polygon: the hull of points scattered around a direction.
rng = np.random.default_rng(7)
pts = np.column_stack([rng.normal(0, 0.4, 30), rng.normal(0, 0.4, 30), np.ones(30)])
poly = SphericalPolygon.convex_hull(pts / np.linalg.norm(pts, axis=1, keepdims=True))
print(f"\nhull with {poly.n} vertices")
print("girard        ", girard_area(poly))
print("triangulated  ", area_oracle_triangulated(poly))

# Angle sums see only vertex angles, the fan triangulation only side
# lengths, so agreement to ~1e-14 is a meaningful cross-check.
print("difference    ", abs(girard_area(poly) - area_oracle_triangulated(poly)))

# %%
# Thickness. For the octant the narrowest lune is a quarter sphere.
th = thickness(octant)
print(f"\noctant thickness {th.value:.12f} (pi/2 = {math.pi / 2:.12f}), error bound {th.error:.1e}")
th = thickness(poly)
print(f"hull thickness   {th.value:.12f}")
