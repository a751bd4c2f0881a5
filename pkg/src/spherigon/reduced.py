"""Reduced spherical odd-gons: checker, decomposition, constructors, areas.

Indexing is 0-based throughout. For an ``n``-gon with ``n`` odd the side
opposite vertex ``i`` joins vertices ``i + (n-1)/2`` and ``i + (n+1)/2``
(mod ``n``); in the 1-based numbering used in reports vertex ``i`` is
printed as ``i + 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import scalars
from .config import DEFAULT, Tolerances
from .core import (
    GeodesicArc,
    SphericalPolygon,
    arcs_intersection,
    from_spherical,
    girard_area,
    is_spherically_convex,
    make_rng,
    rotation_to_pole,
    sample_in_polygon,
    sph_dist,
    to_spherical,
    unit,
    vertex_angle,
)
from .errors import (
    CoplanarArcs,
    DomainError,
    EvenGon,
    InvariantViolation,
    NonConvex,
    NotReducedGeometry,
    RelativeInteriorViolated,
    SolverDiverged,
)
from .scalars import ThicknessProfile


def _require_odd(n: int) -> None:
    if n < 3:
        raise DomainError("a polygon needs at least three vertices")
    if n % 2 == 0:
        raise EvenGon("n must be odd")


def opposite_side_indices(i: int, n: int) -> tuple[int, int]:
    _require_odd(n)
    return (i + (n - 1) // 2) % n, (i + (n + 1) // 2) % n


def _opposite_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    i = np.arange(n)
    return (i + (n - 1) // 2) % n, (i + (n + 1) // 2) % n


def _side_distances(v: np.ndarray) -> np.ndarray:
    """Distance of each vertex to the great circle of its opposite side.

    ``v`` may carry leading batch axes: shape ``(..., n, 3)``. Positive when
    the vertex lies on the inner side.
    """
    j, k = _opposite_arrays(v.shape[-2])
    nrm = unit(np.cross(v[..., j, :], v[..., k, :]))
    h = np.sum(v * nrm, axis=-1)
    perp = np.linalg.norm(v - h[..., None] * nrm, axis=-1)
    return np.arctan2(h, perp)


def _feet(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Projections onto opposite sides and their signed interior margins.

    The margin is the distance from the foot to the nearer side endpoint,
    negative when the foot falls outside the side.
    """
    j, k = _opposite_arrays(len(v))
    a, b = v[j], v[k]
    nrm = unit(np.cross(a, b))
    feet = unit(v - np.sum(v * nrm, axis=1, keepdims=True) * nrm)
    s = np.arctan2(np.sum(np.cross(a, feet) * nrm, axis=1), np.sum(a * feet, axis=1))
    return feet, np.minimum(s, sph_dist(a, b) - s)


@dataclass
class ReducedDiagnostics:
    convex: bool
    odd: bool
    distances: np.ndarray = field(default_factory=lambda: np.zeros(0))
    residuals: np.ndarray = field(default_factory=lambda: np.zeros(0))
    interior_margins: np.ndarray = field(default_factory=lambda: np.zeros(0))
    reference: float = float("nan")
    reasons: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "convex": self.convex,
            "odd": self.odd,
            "reference_distance": None if math.isnan(self.reference) else self.reference,
            "reasons": list(self.reasons),
            "vertices": [
                {"i": i + 1, "distance": float(d), "residual": float(r),
                 "interior_margin": None if math.isnan(m) else float(m)}
                for i, (d, r, m) in enumerate(
                    zip(self.distances, self.residuals, self.interior_margins)
                )
            ],
        }


def is_reduced(
    poly: SphericalPolygon,
    tol: float = DEFAULT.reduced,
    omega: float | None = None,
) -> tuple[bool, ReducedDiagnostics]:
    """Reducedness test for a convex polygon.

    A convex odd-gon with thickness below pi/2 is reduced exactly when every
    vertex projects into the relative interior of its opposite side and all
    vertex-to-side distances are equal (to the thickness). Residuals are
    reported against ``omega`` when given, otherwise against the mean
    distance.
    """
    convex = is_spherically_convex(poly)
    odd = poly.n % 2 == 1
    diag = ReducedDiagnostics(convex=convex, odd=odd)
    if not odd:
        diag.reasons.append("even number of vertices")
        return False, diag
    if not convex:
        diag.reasons.append("polygon is not spherically convex")
        return False, diag
    v = poly.vertices
    d = _side_distances(v)
    if np.max(d) >= math.pi / 2 - tol:
        # a vertex at the pole of its opposite side has no well-defined foot
        diag.distances, diag.residuals = d, d - (d.mean() if omega is None else omega)
        diag.interior_margins = np.full(poly.n, np.nan)
        diag.reference = float(d.mean()) if omega is None else float(omega)
        diag.reasons.append("thickness is not below pi/2")
        return False, diag
    _, margins = _feet(v)
    ref = float(np.mean(d)) if omega is None else float(omega)
    diag.distances, diag.residuals, diag.interior_margins, diag.reference = d, d - ref, margins, ref
    if np.max(np.abs(d - ref)) >= tol or np.max(np.abs(d - d.mean())) >= tol:
        diag.reasons.append("vertex-to-opposite-side distances differ")
    if np.min(margins) <= tol:
        diag.reasons.append("a projection misses the relative interior of its side")
    if d.mean() >= math.pi / 2:
        diag.reasons.append("thickness is not below pi/2")
    return not diag.reasons, diag


@dataclass(frozen=True, eq=False)
class ReducedDecomposition:
    """Per-vertex data of a reduced odd-gon.

    ``feet[i]`` is the projection of vertex ``i`` on its opposite side,
    ``crossings[i]`` the common point of chord ``i`` and chord ``i + (n+1)/2``.
    ``short_leg`` / ``hypotenuse`` are the distances from the crossing to
    ``feet[i]`` and to vertex ``i + (n+1)/2``.
    """

    polygon: SphericalPolygon
    omega: float
    feet: np.ndarray
    crossings: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    phi: np.ndarray
    short_leg: np.ndarray
    hypotenuse: np.ndarray

    @property
    def n(self) -> int:
        return self.polygon.n

    @property
    def half(self) -> int:
        return (self.n + 1) // 2

    @property
    def tan_short_leg(self) -> np.ndarray:
        return np.tan(self.short_leg)

    @property
    def profile(self) -> ThicknessProfile:
        return ThicknessProfile(self.omega)

    def invariant_failures(self, tol: float = DEFAULT.agree) -> list[str]:
        out = []
        if np.max(np.abs(self.short_leg + self.hypotenuse - self.omega)) > tol:
            out.append("short leg + hypotenuse != thickness")
        if np.any(self.phi <= 0) or np.any(self.phi >= math.pi / 2):
            out.append("crossing angle outside (0, pi/2)")
            return out
        if np.any(self.beta > self.alpha + tol):
            out.append("beta exceeds alpha")
        prof = self.profile
        y = self.tan_short_leg
        if np.max(np.abs(y - scalars.leg_tangent(self.phi, prof))) > tol:
            out.append("tan(short leg) != leg_tangent(phi)")
        try:
            corner = scalars.corner_angle(y, prof)
        except DomainError:
            out.append("tan(short leg) outside (0, x_max)")
        else:
            if np.max(np.abs(self.alpha - corner)) > tol:
                out.append("alpha != corner_angle(tan(short leg))")
        return out

    def rows(self) -> list[dict]:
        return [
            {
                "i": i + 1,
                "t": [float(c) for c in self.feet[i]],
                "o": [float(c) for c in self.crossings[i]],
                "alpha": float(self.alpha[i]),
                "beta": float(self.beta[i]),
                "phi": float(self.phi[i]),
                "b": float(self.short_leg[i]),
                "c": float(self.hypotenuse[i]),
                "y": float(self.tan_short_leg[i]),
            }
            for i in range(self.n)
        ]


def decompose(
    poly: SphericalPolygon,
    omega: float,
    validate: bool = True,
    tol: Tolerances = DEFAULT,
) -> ReducedDecomposition:
    """Feet, chord crossings and characteristic angles of a reduced odd-gon.

    Raises ``NotReducedGeometry`` when a foot leaves its side or two chords
    fail to meet, and ``InvariantViolation`` (if ``validate``) when the
    derived quantities disagree with the closed-form relations.
    """
    _require_odd(poly.n)
    ThicknessProfile(omega)
    if not is_spherically_convex(poly, tol):
        raise NonConvex("decomposition needs a convex polygon")
    v = poly.vertices
    n = poly.n
    m = (n + 1) // 2
    feet, margins = _feet(v)
    if np.min(margins) <= tol.geo:
        bad = int(np.argmin(margins))
        raise NotReducedGeometry(f"projection of vertex {bad + 1} is not interior to its side")
    crossings = np.empty((n, 3))
    for i in range(n):
        k = (i + m) % n
        try:
            o = arcs_intersection(GeodesicArc(v[i], feet[i]), GeodesicArc(v[k], feet[k]), tol)
        except CoplanarArcs:
            o = None
        if o is None:
            raise NotReducedGeometry(f"chords {i + 1} and {k + 1} do not cross")
        crossings[i] = o
    alpha = np.empty(n)
    beta = np.empty(n)
    phi = np.empty(n)
    for i in range(n):
        k = (i + m) % n
        alpha[i] = vertex_angle(v[i], v[(i + 1) % n], feet[i])
        beta[i] = vertex_angle(v[i], feet[i], v[k])
        phi[i] = vertex_angle(crossings[i], v[i], feet[k])
    k = (np.arange(n) + m) % n
    dec = ReducedDecomposition(
        polygon=poly,
        omega=float(omega),
        feet=feet,
        crossings=crossings,
        alpha=alpha,
        beta=beta,
        phi=phi,
        short_leg=sph_dist(crossings, feet),
        hypotenuse=sph_dist(crossings, v[k]),
    )
    if validate:
        failures = dec.invariant_failures(tol.agree)
        if failures:
            raise InvariantViolation("; ".join(failures))
    return dec


def regular_odd_gon(n: int, omega: float) -> SphericalPolygon:
    """Regular ``n``-gon of thickness ``omega`` centred on the north pole.

    The circumradius is ``omega - atan(y)`` where ``y`` is the leg tangent
    for crossing angle ``pi / n``.
    """
    _require_odd(n)
    prof = ThicknessProfile(omega)
    y, _ = scalars.regular_y(n, prof)
    radius = omega - math.atan(y)
    lon = 2 * math.pi * np.arange(n) / n
    return SphericalPolygon(from_spherical(np.full(n, radius), lon))


def area_via_phi(dec: ReducedDecomposition) -> float:
    """Area as ``2 sum F(phi_i) - (n - 2) pi`` with ``F = corner_from_crossing``."""
    corners = scalars.corner_from_crossing(dec.phi, dec.profile)
    return float(2 * np.sum(corners) - (dec.n - 2) * math.pi)


def regular_area(n: int, omega: float, tol: float = DEFAULT.unit) -> float:
    _require_odd(n)
    ratio_form, sum_form = scalars.regular_area_forms(n, ThicknessProfile(omega))
    if abs(ratio_form - sum_form) > tol:
        raise InvariantViolation(f"regular area forms disagree: {ratio_form!r} vs {sum_form!r}")
    return ratio_form


def limit_area(omega: float) -> float:
    """``2 (1 - cos(omega/2)) pi``, the supremum over regular odd-gons."""
    ThicknessProfile(omega)
    return 4 * math.pi * math.sin(omega / 4) ** 2


# -- non-regular reduced polygons ------------------------------------------------

def _residuals(x: np.ndarray, n: int, omega: float) -> np.ndarray:
    v = from_spherical(x[..., :n], x[..., n:])
    return _side_distances(v) - omega


def _jacobian(x: np.ndarray, n: int, omega: float, step: float = 1e-6) -> np.ndarray:
    eye = np.eye(len(x)) * step
    plus = _residuals(x + eye, n, omega)
    minus = _residuals(x - eye, n, omega)
    return ((plus - minus) / (2 * step)).T


def _polish(x, r, n, omega, steps: int = 3):
    # a few undamped Newton steps past the target; kept only while they help
    for _ in range(steps):
        jac = _jacobian(x, n, omega)
        x_new = x - jac.T @ np.linalg.solve(jac @ jac.T, r)
        r_new = _residuals(x_new, n, omega)
        if np.linalg.norm(r_new) >= np.linalg.norm(r):
            break
        x, r = x_new, r_new
    return x


def solve_reduced(
    x0: np.ndarray,
    n: int,
    omega: float,
    target: float = DEFAULT.solver,
    max_iter: int = 100,
    damping: float = 1e-3,
) -> np.ndarray:
    """Levenberg-Marquardt projection onto ``{all vertex-to-side distances = omega}``.

    ``x0`` stacks colatitudes then longitudes. There are ``n`` equations in
    ``2n`` unknowns, so each step is the damped minimal-norm correction
    ``-J^T (J J^T + mu I)^-1 r``.
    """
    x = np.array(x0, dtype=float)
    r = _residuals(x, n, omega)
    mu = damping
    for _ in range(max_iter):
        if np.max(np.abs(r)) < target:
            return _polish(x, r, n, omega)
        jac = _jacobian(x, n, omega)
        jjt = jac @ jac.T
        while True:
            step = jac.T @ np.linalg.solve(jjt + mu * np.eye(n), r)
            x_new = x - step
            r_new = _residuals(x_new, n, omega)
            if np.linalg.norm(r_new) < np.linalg.norm(r):
                x, r = x_new, r_new
                mu = max(mu * 0.1, 1e-15)
                break
            mu *= 10.0
            if mu > 1e12:
                raise SolverDiverged("damping blew up without reducing the residual")
    if np.max(np.abs(r)) < target:
        return _polish(x, r, n, omega)
    raise SolverDiverged(f"no convergence in {max_iter} iterations (max residual {np.max(np.abs(r)):.3e})")


def canonicalize(poly: SphericalPolygon) -> SphericalPolygon:
    """Rotate the vertex centroid to the north pole and vertex 0 to longitude 0."""
    rot = rotation_to_pole(poly.centroid_direction)
    v = poly.vertices @ rot.T
    lon = math.atan2(v[0, 1], v[0, 0])
    c, s = math.cos(-lon), math.sin(-lon)
    spin = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    return SphericalPolygon(v @ spin.T)


def perturbed_reduced_polygon(
    n: int,
    omega: float,
    seed: int,
    delta: float = 0.03,
    tol: Tolerances = DEFAULT,
    retries: int = 3,
) -> SphericalPolygon:
    """A non-regular reduced ``n``-gon near the regular one.

    Vertex colatitudes and longitudes of the regular polygon get uniform
    noise in ``[-delta, delta]``; the result is projected back onto the
    reduced configurations. When the projected polygon is not convex or a
    foot leaves its side, the attempt is repeated with half the noise.
    """
    _require_odd(n)
    ThicknessProfile(omega)
    if not 0.0 <= delta <= 0.05:
        raise DomainError("delta must lie in [0, 0.05]")
    base = regular_odd_gon(n, omega)
    if delta == 0.0:
        return base
    if n == 3:
        raise DomainError("every reduced triangle is regular; no perturbation possible")
    colat, lon = to_spherical(base.vertices)
    rng = make_rng(seed)
    amp = delta
    for _ in range(retries + 1):
        noise = rng.uniform(-amp, amp, size=2 * n)
        x = solve_reduced(np.concatenate([colat, lon]) + noise, n, omega, tol.solver)
        try:
            poly = canonicalize(SphericalPolygon(from_spherical(x[:n], x[n:])))
        except Exception:
            poly = None
        if poly is not None:
            ok, _ = is_reduced(poly, tol.reduced, omega)
            sides = poly.side_lengths
            if ok and np.ptp(sides) > 10 * tol.reduced:
                return poly
        amp /= 2
    raise RelativeInteriorViolated(
        f"no convex reduced polygon after {retries + 1} attempts (last delta {2 * amp:.3g})"
    )


# -- butterflies -------------------------------------------------------------

def triangle_area_angles(a, b, c) -> float:
    return vertex_angle(a, b, c) + vertex_angle(b, c, a) + vertex_angle(c, a, b) - math.pi


def _in_triangle(tri: np.ndarray, p: np.ndarray, tol: float) -> np.ndarray:
    a, b, c = tri
    normals = unit(np.cross(tri, np.roll(tri, -1, axis=0)))
    if np.dot(np.cross(a, b), c) < 0:
        normals = -normals
    return np.all(p @ normals.T >= -tol, axis=-1)


@dataclass(frozen=True, eq=False)
class Butterfly:
    """Union of the right triangles ``(v_i, o_i, t_{i+h})`` and ``(v_{i+h}, o_i, t_i)``."""

    index: int
    first: np.ndarray
    second: np.ndarray
    area: float
    area_formula: float

    def contains(self, p, tol: float = DEFAULT.geo):
        p = np.asarray(p, dtype=float)
        return _in_triangle(self.first, p, tol) | _in_triangle(self.second, p, tol)

    def side_lengths(self) -> tuple[np.ndarray, np.ndarray]:
        def sides(t):
            return sph_dist(t, np.roll(t, -1, axis=0))

        return sides(self.first), sides(self.second)


def butterfly_decomposition(
    dec: ReducedDecomposition, tol: float = DEFAULT.agree, validate: bool = True
) -> list[Butterfly]:
    v = dec.polygon.vertices
    n, m = dec.n, dec.half
    out = []
    for i in range(n):
        k = (i + m) % n
        first = np.array([v[i], dec.crossings[i], dec.feet[k]])
        second = np.array([v[k], dec.crossings[i], dec.feet[i]])
        area = triangle_area_angles(*first) + triangle_area_angles(*second)
        formula = 2 * (dec.phi[i] + dec.alpha[i] - math.pi / 2)
        bf = Butterfly(i, first, second, area, float(formula))
        if validate:
            if abs(area - formula) > tol:
                raise InvariantViolation(f"butterfly {i + 1}: area {area!r} != {formula!r}")
            s1, s2 = bf.side_lengths()
            if np.max(np.abs(s1 - s2)) > tol:
                raise InvariantViolation(f"butterfly {i + 1}: triangles are not congruent")
        out.append(bf)
    return out


def uncovered_points(
    dec: ReducedDecomposition,
    samples: int = 100_000,
    seed: int = 0,
    tol: float = DEFAULT.geo,
    butterflies: list[Butterfly] | None = None,
) -> int:
    """Number of uniform points of the polygon outside every butterfly."""
    if butterflies is None:
        butterflies = butterfly_decomposition(dec, validate=False)
    pts = sample_in_polygon(dec.polygon, samples, make_rng(seed))
    covered = np.zeros(len(pts), dtype=bool)
    for bf in butterflies:
        covered |= bf.contains(pts, tol)
    return int(np.count_nonzero(~covered))


# -- circumcircle --------------------------------------------------------------

def circumscribed_center(poly: SphericalPolygon) -> tuple[np.ndarray, float, float]:
    """Least-squares circumcircle: the plane best fitting the vertices.

    Vertices lie on a common circle exactly when they are coplanar; the
    plane normal minimising the squared offsets is the eigenvector of the
    vertex covariance with the smallest eigenvalue. Returns the center,
    mean radius and radius spread (max - min).
    """
    v = poly.vertices
    _, vecs = np.linalg.eigh(np.cov(v.T, bias=True))
    center = vecs[:, 0]
    if np.dot(center, v.sum(axis=0)) < 0:
        center = -center
    radii = sph_dist(v, center)
    return unit(center), float(radii.mean()), float(np.ptp(radii))
