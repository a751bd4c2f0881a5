"""Property-based checks of geometric invariants."""
import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from spherigon import scalars
from spherigon.core import (
    SphericalPolygon,
    area_oracle_triangulated,
    girard_area,
    rotation_to_pole,
    sph_dist,
    unit,
)
from spherigon.reduced import decompose, is_reduced, regular_area, regular_odd_gon

finite = st.floats(-1.0, 1.0, allow_nan=False)
vectors = st.tuples(finite, finite, finite).filter(lambda v: np.linalg.norm(v) > 1e-3).map(unit)
odd_n = st.integers(1, 25).map(lambda k: 2 * k + 1)
omegas = st.floats(0.05, 1.5)


@st.composite
def convex_polygons(draw):
    count = draw(st.integers(3, 12))
    seed = draw(st.integers(0, 2**32 - 1))
    spread = draw(st.floats(0.05, 0.8))
    rng = np.random.default_rng(seed)
    pts = unit(np.column_stack([rng.normal(0, spread, 3 * count), rng.normal(0, spread, 3 * count),
                                np.ones(3 * count)]))
    axis = draw(vectors)
    return SphericalPolygon.convex_hull(pts @ rotation_to_pole(axis))


@given(vectors, vectors)
def test_distance_symmetric_and_bounded(a, b):
    d = sph_dist(a, b)
    assert d == sph_dist(b, a)
    assert 0.0 <= d <= math.pi


@given(vectors, vectors, vectors)
def test_triangle_inequality(a, b, c):
    assert sph_dist(a, c) <= sph_dist(a, b) + sph_dist(b, c) + 1e-12


@settings(max_examples=60, deadline=None)
@given(convex_polygons())
def test_area_oracles_agree(poly):
    assert abs(girard_area(poly) - area_oracle_triangulated(poly)) < 1e-9


@settings(max_examples=60, deadline=None)
@given(convex_polygons(), vectors, st.floats(0, 2 * math.pi))
def test_area_rotation_invariant(poly, axis, angle):
    # rotation about a random axis (Rodrigues)
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    rot = np.eye(3) + math.sin(angle) * k + (1 - math.cos(angle)) * k @ k
    assert abs(girard_area(poly.rotated(rot)) - girard_area(poly)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(odd_n, omegas)
def test_regular_polygons_reduced_and_consistent(n, w):
    poly = regular_odd_gon(n, w)
    ok, diag = is_reduced(poly, 1e-8, w)
    assert ok, diag.reasons
    assert abs(girard_area(poly) - regular_area(n, w)) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12).map(lambda k: 2 * k + 1), st.floats(0.1, 1.4))
def test_regular_crossing_angles(n, w):
    dec = decompose(regular_odd_gon(n, w), w)
    assert np.max(np.abs(dec.phi - math.pi / n)) < 1e-9


@given(st.floats(0.01, 100.0), st.floats(1e-6, 1.0))
def test_corner_plus_coangle(lam, frac):
    prof = scalars.ThicknessProfile(math.atan(lam))
    x = frac * prof.x_max * (1 - 1e-9)
    total = scalars.corner_angle(x, prof) + scalars.corner_coangle(x, prof)
    assert abs(total - math.pi / 2) < 1e-15


@given(st.floats(0.01, 100.0), st.floats(1e-4, math.pi / 2 - 1e-4), st.floats(1e-4, math.pi / 2 - 1e-4))
def test_corner_function_monotone(lam, a, b):
    prof = scalars.ThicknessProfile(math.atan(lam))
    lo, hi = min(a, b), max(a, b)
    if hi - lo > 1e-9:
        assert scalars.corner_from_crossing(lo, prof) > scalars.corner_from_crossing(hi, prof)
