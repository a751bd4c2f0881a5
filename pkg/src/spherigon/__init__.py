"""Reduced spherical polygons: construction, measurement and numerical checks."""
from .config import DEFAULT, Tolerances
from .core import (
    GeodesicArc,
    GreatCircle,
    Hemisphere,
    Lune,
    SphericalPolygon,
    area_oracle_montecarlo,
    area_oracle_triangulated,
    arcs_intersection,
    contains_point_convex,
    girard_area,
    interior_angles,
    is_spherically_convex,
    lune_thickness,
    project_to_circle,
    solve_right_triangle,
    sph_dist,
    thickness,
)
from .errors import DomainError, SpherigonError
from .reduced import (
    ReducedDecomposition,
    area_via_phi,
    butterfly_decomposition,
    decompose,
    is_reduced,
    limit_area,
    perturbed_reduced_polygon,
    regular_area,
    regular_odd_gon,
)
from .scalars import ThicknessProfile

__all__ = [
    "DEFAULT",
    "DomainError",
    "GeodesicArc",
    "GreatCircle",
    "Hemisphere",
    "Lune",
    "ReducedDecomposition",
    "SphericalPolygon",
    "SpherigonError",
    "ThicknessProfile",
    "Tolerances",
    "area_oracle_montecarlo",
    "area_oracle_triangulated",
    "area_via_phi",
    "arcs_intersection",
    "butterfly_decomposition",
    "contains_point_convex",
    "decompose",
    "girard_area",
    "interior_angles",
    "is_reduced",
    "is_spherically_convex",
    "limit_area",
    "lune_thickness",
    "perturbed_reduced_polygon",
    "project_to_circle",
    "regular_area",
    "regular_odd_gon",
    "solve_right_triangle",
    "sph_dist",
    "thickness",
]

__version__ = "0.1.0"
