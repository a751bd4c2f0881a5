"""Points, great circles, arcs, lunes and convex polygons on the unit sphere.

Points are plain ``numpy`` arrays of shape ``(3,)`` holding unit vectors.
Latitude/longitude only appear in constructors; every predicate works on
Cartesian coordinates so nothing is singular at the poles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import (
    CoplanarArcs,
    DegenerateArc,
    DegenerateLune,
    InvalidPolygon,
    InvalidSampleCount,
    InvariantViolation,
    NonConvex,
    PoleProjection,
)

# Monte Carlo generator: numpy PCG64 (O'Neill's permuted congruential
# generator, 128-bit state, 64-bit output), always explicitly seeded.
RNG_ALGORITHM = "PCG64"

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# -- vectors -------------------------------------------------------------------

def unit(v) -> np.ndarray:
    """Return ``v`` scaled to unit length (works along the last axis)."""
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(norm == 0.0):
        raise ValueError("cannot normalize a zero vector")
    return v / norm


def from_spherical(colatitude, longitude) -> np.ndarray:
    """Unit vectors from colatitude (angle from +z) and longitude, radians."""
    colatitude = np.asarray(colatitude, dtype=float)
    longitude = np.asarray(longitude, dtype=float)
    st = np.sin(colatitude)
    return np.stack(
        [st * np.cos(longitude), st * np.sin(longitude), np.cos(colatitude)], axis=-1
    )


def to_spherical(p) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(p, dtype=float)
    rho = np.hypot(p[..., 0], p[..., 1])
    return np.arctan2(rho, p[..., 2]), np.arctan2(p[..., 1], p[..., 0])


def sph_dist(a, b):
    """Great-circle distance in radians, ``atan2(|a x b|, a.b)``.

    Broadcasts over leading axes. Unlike ``arccos(a.b)`` this keeps full
    precision for nearly coincident and nearly antipodal points.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = np.arctan2(np.linalg.norm(np.cross(a, b), axis=-1), np.sum(a * b, axis=-1))
    return float(d) if np.ndim(d) == 0 else d


def tangent_toward(p, q) -> np.ndarray:
    """Unit tangent at ``p`` of the arc from ``p`` to ``q``."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return unit(q - np.sum(p * q, axis=-1, keepdims=True) * p)


def vertex_angle(p, a, b) -> float:
    """Unsigned angle at ``p`` between the arcs ``pa`` and ``pb``, in [0, pi]."""
    ta = tangent_toward(p, a)
    tb = tangent_toward(p, b)
    return float(np.arctan2(np.linalg.norm(np.cross(ta, tb)), np.dot(ta, tb)))


def slerp(a, b, t):
    """Points at fraction ``t`` along the arc ``ab`` (``t`` may be an array)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    theta = sph_dist(a, b)
    t = np.asarray(t, dtype=float)[..., None]
    if theta < 1e-15:
        return np.broadcast_to(a, t.shape[:-1] + (3,)).copy()
    s = math.sin(theta)
    return (np.sin((1.0 - t) * theta) * a + np.sin(t * theta) * b) / s


def rotation_to_pole(u) -> np.ndarray:
    """Rotation matrix taking unit vector ``u`` to (0, 0, 1)."""
    u = unit(u)
    z = np.array([0.0, 0.0, 1.0])
    axis = np.cross(u, z)
    s = np.linalg.norm(axis)
    c = float(np.dot(u, z))
    if s < 1e-15:
        return np.eye(3) if c > 0 else np.diag([1.0, -1.0, -1.0])
    k = axis / s
    kx = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return np.eye(3) + s * kx + (1 - c) * (kx @ kx)


def tangent_basis(u) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal ``(e1, e2)`` spanning the tangent plane at ``u``, ``e1 x e2 = u``."""
    u = unit(u)
    helper = np.array([1.0, 0.0, 0.0]) if abs(u[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = unit(np.cross(helper, u))
    e2 = np.cross(u, e1)
    return e1, e2


# -- right spherical triangles --------------------------------------------------

class RightTriangle(NamedTuple):
    hypotenuse: float
    angle_a: float  # opposite leg a
    angle_b: float  # opposite leg b


def solve_right_triangle(a: float, b: float) -> RightTriangle:
    """Hypotenuse and acute angles of the right spherical triangle with legs a, b."""
    c = math.acos(math.cos(a) * math.cos(b))
    return RightTriangle(c, math.atan2(math.tan(a), math.sin(b)), math.atan2(math.tan(b), math.sin(a)))


# -- great circles, arcs, hemispheres, lunes -----------------------------------

@dataclass(frozen=True, eq=False)
class GreatCircle:
    """The circle ``{p : p . normal = 0}``; ``normal`` also orients it."""

    normal: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "normal", unit(self.normal))


@dataclass(frozen=True, eq=False)
class GeodesicArc:
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a, b = unit(self.a), unit(self.b)
        if np.linalg.norm(np.cross(a, b)) < DEFAULT.degenerate:
            raise DegenerateArc("arc endpoints are equal or antipodal")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> float:
        return sph_dist(self.a, self.b)

    @property
    def circle(self) -> GreatCircle:
        return great_circle_through(self.a, self.b)

    def contains(self, p, tol: float = DEFAULT.geo) -> bool:
        """True if ``p`` lies on the arc; ``tol`` bounds the detour |ap|+|pb|-|ab|."""
        return sph_dist(self.a, p) + sph_dist(p, self.b) - self.length <= tol


@dataclass(frozen=True, eq=False)
class Hemisphere:
    center: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "center", unit(self.center))

    def contains(self, p, tol: float = 0.0) -> bool:
        return float(np.dot(p, self.center)) >= -tol


@dataclass(frozen=True, eq=False)
class Lune:
    """Intersection of the hemispheres centred at ``g`` and ``h``."""

    g: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        g, h = unit(self.g), unit(self.h)
        if np.linalg.norm(np.cross(g, h)) < DEFAULT.degenerate:
            raise DegenerateLune("lune centers are equal or antipodal")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)


def great_circle_through(a, b, tol: Tolerances = DEFAULT) -> GreatCircle:
    n = np.cross(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    if np.linalg.norm(n) < tol.degenerate:
        raise DegenerateArc("points are equal or antipodal; great circle not unique")
    return GreatCircle(n)


def project_to_circle(p, circle: GreatCircle, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Closest point of ``circle`` to ``p``."""
    p = np.asarray(p, dtype=float)
    h = float(np.dot(p, circle.normal))
    if abs(h) > 1.0 - tol.unit:
        raise PoleProjection("point is a pole of the circle; projection undefined")
    return unit(p - h * circle.normal)


def arcs_intersection(u: GeodesicArc, v: GeodesicArc, tol: Tolerances = DEFAULT):
    """Common point of two arcs on distinct great circles, or ``None``."""
    d = np.cross(u.circle.normal, v.circle.normal)
    if np.linalg.norm(d) < tol.degenerate:
        raise CoplanarArcs("arcs lie on the same great circle")
    d = unit(d)
    for cand in (d, -d):
        if u.contains(cand, tol.geo) and v.contains(cand, tol.geo):
            return cand
    return None


def lune_thickness(lune: Lune, tol: Tolerances = DEFAULT) -> float:
    """Distance between the midpoints of the two boundary arcs of ``lune``.

    Cross-checked against ``pi - |gh|``; a mismatch raises.
    """
    g, h = lune.g, lune.h
    corner = unit(np.cross(g, h))
    # midpoint of bd(G) inside H: the point of bd(G) nearest h, and vice versa
    mid_g = unit(h - np.dot(h, g) * g)
    mid_h = unit(g - np.dot(g, h) * h)
    for m in (mid_g, mid_h):
        if abs(sph_dist(m, corner) - math.pi / 2) > 1e-9:
            raise InvariantViolation("lune midpoint not equidistant from corners")
    width = sph_dist(mid_g, mid_h)
    if abs(width - (math.pi - sph_dist(g, h))) > tol.unit:
        raise InvariantViolation(f"lune midpoint width {width!r} != pi - |gh|")
    return width


# -- polygons ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SphericalPolygon:
    """Vertices in counterclockwise order seen from outside the sphere.

    Construction enforces count, unit norm and distinct non-antipodal
    vertices. Convexity is checked by the operations that need it so that
    non-convex input can still be loaded and diagnosed.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 3 or len(v) < 3:
            raise InvalidPolygon("need at least three 3-vectors")
        norms = np.linalg.norm(v, axis=1)
        if np.any(np.abs(norms - 1.0) > DEFAULT.load_unit):
            raise InvalidPolygon("vertices must be unit vectors")
        v = v / norms[:, None]
        sep = sph_dist(v[:, None, :], v[None, :, :])
        off = ~np.eye(len(v), dtype=bool)
        if np.any(sep[off] < DEFAULT.geo) or np.any(sep[off] > math.pi - DEFAULT.geo):
            raise InvalidPolygon("vertices must be distinct and not antipodal")
        v.flags.writeable = False
        object.__setattr__(self, "vertices", v)

    @classmethod
    def from_spherical(cls, colatitude, longitude) -> SphericalPolygon:
        return cls(from_spherical(colatitude, longitude))

    @classmethod
    def convex_hull(cls, points) -> SphericalPolygon:
        """Convex hull of points lying in an open hemisphere.

        Uses the gnomonic projection about the normalized centroid, which maps
        great circles to straight lines and so preserves convexity.
        """
        from scipy.spatial import ConvexHull

        pts = unit(points)
        u = unit(pts.sum(axis=0))
        if np.any(pts @ u <= 0):
            raise InvalidPolygon("points are not contained in an open hemisphere")
        e1, e2 = tangent_basis(u)
        w = pts / (pts @ u)[:, None]
        plane = np.column_stack([w @ e1, w @ e2])
        hull = ConvexHull(plane)
        return cls(pts[hull.vertices])

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> np.ndarray:
        return self.vertices[i % self.n]

    @property
    def edge_normals(self) -> np.ndarray:
        """Inward unit normals ``normalize(v_i x v_{i+1})``, one row per side."""
        v = self.vertices
        return unit(np.cross(v, np.roll(v, -1, axis=0)))

    @property
    def side_lengths(self) -> np.ndarray:
        v = self.vertices
        return sph_dist(v, np.roll(v, -1, axis=0))

    @property
    def centroid_direction(self) -> np.ndarray:
        return unit(self.vertices.sum(axis=0))

    def rotated(self, matrix) -> SphericalPolygon:
        return SphericalPolygon(self.vertices @ np.asarray(matrix).T)


def is_spherically_convex(poly: SphericalPolygon, tol: Tolerances = DEFAULT) -> bool:
    v = poly.vertices
    if len(v) < 3:
        return False
    if np.any(np.linalg.norm(np.cross(v, np.roll(v, -1, axis=0)), axis=1) < tol.degenerate):
        return False
    if np.any(v @ poly.edge_normals.T < -tol.unit):
        return False
    if np.any(v @ -v.T > 1.0 - tol.unit):
        return False
    # open-hemisphere witness: the vertex centroid, else the sum of edge normals,
    # which is strictly positive on every vertex once the support test passed
    for u in (v.sum(axis=0), poly.edge_normals.sum(axis=0)):
        if np.linalg.norm(u) > tol.degenerate and np.all(v @ unit(u) > 0.0):
            return True
    return False


def contains_point_convex(poly: SphericalPolygon, p, tol: float = DEFAULT.unit):
    """Closed-set membership; ``p`` may be one point or an ``(m, 3)`` array."""
    p = np.asarray(p, dtype=float)
    inside = np.all(p @ poly.edge_normals.T >= -tol, axis=-1)
    return bool(inside) if inside.ndim == 0 else inside


def _require_convex(poly: SphericalPolygon, tol: Tolerances) -> None:
    if not is_spherically_convex(poly, tol):
        raise NonConvex("polygon is not spherically convex (or not counterclockwise)")


def interior_angles(poly: SphericalPolygon, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Angle at each vertex between the arcs to its two neighbours."""
    v = poly.vertices
    t_next = tangent_toward(v, np.roll(v, -1, axis=0))
    t_prev = tangent_toward(v, np.roll(v, 1, axis=0))
    # signed: counterclockwise about the outward normal from next to prev
    sin = np.sum(v * np.cross(t_next, t_prev), axis=1)
    cos = np.sum(t_next * t_prev, axis=1)
    ang = np.arctan2(sin, cos)
    if np.any(ang <= 0.0) or np.any(ang >= math.pi):
        raise NonConvex("an interior angle is not in (0, pi)")
    return ang


def girard_area(poly: SphericalPolygon, tol: Tolerances = DEFAULT) -> float:
    """Angle excess: sum of interior angles minus ``(n - 2) pi``."""
    return float(np.sum(interior_angles(poly, tol)) - (poly.n - 2) * math.pi)


def triangle_area_sides(a: float, b: float, c: float) -> float:
    """Spherical excess of a triangle from its side lengths (L'Huilier)."""
    s = 0.5 * (a + b + c)
    prod = (
        math.tan(s / 2) * math.tan((s - a) / 2) * math.tan((s - b) / 2) * math.tan((s - c) / 2)
    )
    return 4.0 * math.atan(math.sqrt(max(prod, 0.0)))


def area_oracle_triangulated(poly: SphericalPolygon, tol: Tolerances = DEFAULT) -> float:
    """Fan triangulation from the first vertex, each piece measured by side lengths only."""
    _require_convex(poly, tol)
    v = poly.vertices
    total = 0.0
    for k in range(1, poly.n - 1):
        total += triangle_area_sides(
            sph_dist(v[0], v[k]), sph_dist(v[k], v[k + 1]), sph_dist(v[k + 1], v[0])
        )
    return total


def area_oracle_montecarlo(
    poly: SphericalPolygon, samples: int, seed: int, chunk: int = 1 << 18
) -> tuple[float, float]:
    """Hit-or-miss estimate of the area with uniform points on the whole sphere.

    Returns ``(estimate, standard_error)``. Bit-reproducible for a fixed
    ``seed`` and ``samples``; ``chunk`` only bounds memory.
    """
    if samples <= 0:
        raise InvalidSampleCount("samples must be positive")
    rng = make_rng(seed)
    normals = poly.edge_normals
    hits = 0
    left = samples
    while left:
        m = min(chunk, left)
        p = rng.standard_normal((m, 3))
        p /= np.linalg.norm(p, axis=1, keepdims=True)
        hits += int(np.count_nonzero(np.all(p @ normals.T >= -DEFAULT.unit, axis=1)))
        left -= m
    frac = hits / samples
    return 4 * math.pi * frac, 4 * math.pi * math.sqrt(frac * (1 - frac) / samples)


def sample_in_polygon(poly: SphericalPolygon, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` uniform points inside a convex polygon (cap-restricted rejection)."""
    u = poly.centroid_direction
    radius = float(np.max(sph_dist(poly.vertices, u))) + 1e-9
    to_pole = rotation_to_pole(u)
    out = []
    need = count
    while need > 0:
        m = max(2 * need, 1024)
        z = 1.0 - rng.random(m) * (1.0 - math.cos(radius))
        lon = rng.random(m) * 2 * math.pi
        rho = np.sqrt(np.clip(1 - z * z, 0.0, None))
        p = np.column_stack([rho * np.cos(lon), rho * np.sin(lon), z]) @ to_pole
        p = p[contains_point_convex(poly, p)]
        out.append(p[:need])
        need -= len(out[-1])
    return np.concatenate(out)


# -- thickness -------------------------------------------------------------

class ThicknessEstimate(NamedTuple):
    value: float
    error: float


def _max_dist_to_arcs(k: np.ndarray, a: np.ndarray, b: np.ndarray, m: np.ndarray) -> np.ndarray:
    """For points ``k`` (K, 3) the largest distance to any arc ``a_j b_j`` (normals ``m_j``).

    On a great circle the farthest point from ``k`` is the projection of
    ``-k``; it competes with the endpoints only when it lies inside the arc.
    """
    d = np.maximum(sph_dist(k[:, None, :], a[None]), sph_dist(k[:, None, :], b[None]))
    far = -k[:, None, :] + np.einsum("kj,jd->kjd", k @ m.T, m)
    norm = np.linalg.norm(far, axis=-1, keepdims=True)
    ok = norm[..., 0] > 1e-15
    far = far / np.where(norm > 0, norm, 1.0)
    inside = (
        ok
        & (np.einsum("jd,kjd->kj", np.cross(m, a), far) >= 0)
        & (np.einsum("jd,kjd->kj", np.cross(b, m), far) >= 0)
    )
    d_far = sph_dist(k[:, None, :], far)
    return np.max(np.where(inside, np.maximum(d, d_far), d), axis=1)


def thickness(
    poly: SphericalPolygon, resolution: int = 1024, tol: Tolerances = DEFAULT
) -> ThicknessEstimate:
    """Minimum thickness of a lune containing ``poly``.

    The centers of hemispheres containing the polygon form the dual polygon
    whose vertices are the inward edge normals. A lune made of two such
    hemispheres centred at ``k``, ``k*`` has thickness ``pi - |k k*|``, so the
    thickness is ``pi`` minus the largest distance between a supporting
    center ``k`` on the dual boundary and any other supporting center. The
    inner maximum over each dual edge is evaluated exactly; the outer
    maximum is located by sampling the dual boundary at ``resolution``
    points plus its vertices and refined by golden-section search.
    """
    if resolution < 64:
        raise ValueError("resolution must be at least 64")
    _require_convex(poly, tol)
    a = poly.edge_normals
    b = np.roll(a, -1, axis=0)
    m = unit(np.cross(a, b))
    lengths = sph_dist(a, b)
    starts = np.concatenate([[0.0], np.cumsum(lengths)[:-1]])
    total = float(lengths.sum())

    def point(s):
        s = np.mod(np.atleast_1d(np.asarray(s, dtype=float)), total)
        j = np.clip(np.searchsorted(starts, s, side="right") - 1, 0, len(a) - 1)
        frac = (s - starts[j]) / lengths[j]
        th = lengths[j][:, None]
        pts = (np.sin((1 - frac)[:, None] * th) * a[j] + np.sin(frac[:, None] * th) * b[j]) / np.sin(th)
        return unit(pts)

    def reach(s):
        return _max_dist_to_arcs(point(s), a, b, m)

    grid = np.unique(np.concatenate([np.linspace(0.0, total, resolution, endpoint=False), starts]))
    vals = reach(grid)
    wrapped = np.concatenate([[grid[-1] - total], grid, [grid[0] + total]])

    best_val, best_err = -np.inf, 0.0
    # refine around the strongest local maxima of the sampled profile
    order = np.argsort(vals)[::-1][:8]
    for idx in order:
        lo, hi = wrapped[idx], wrapped[idx + 2]
        x1 = hi - _GOLDEN * (hi - lo)
        x2 = lo + _GOLDEN * (hi - lo)
        f1, f2 = reach(x1)[0], reach(x2)[0]
        for _ in range(200):
            if hi - lo < 1e-14 * max(1.0, total):
                break
            if f1 >= f2:
                hi, x2, f2 = x2, x1, f1
                x1 = hi - _GOLDEN * (hi - lo)
                f1 = reach(x1)[0]
            else:
                lo, x1, f1 = x1, x2, f2
                x2 = lo + _GOLDEN * (hi - lo)
                f2 = reach(x2)[0]
        edge_vals = reach(np.array([lo, hi]))
        val = max(f1, f2, vals[idx])
        if val > best_val:
            best_val = val
            best_err = float(val - edge_vals.min())
    return ThicknessEstimate(math.pi - float(best_val), max(best_err, 4e-16 * math.pi))
