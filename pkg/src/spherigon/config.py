"""Numerical tolerances.

All thresholds live in one record so a caller can override them per call
with ``dataclasses.replace(DEFAULT, geo=...)``.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    geo: float = 1e-9          # containment / incidence, radians
    unit: float = 1e-12        # unit-norm and exact-identity checks
    degenerate: float = 1e-12  # |a x b| below this means equal or antipodal
    load_unit: float = 1e-9    # max norm defect accepted from files
    reduced: float = 1e-8      # default reducedness checker threshold
    solver: float = 1e-10      # Gauss-Newton residual target
    agree: float = 1e-9        # cross-formula agreement
    domain_margin: float = 1e-12


DEFAULT = Tolerances()
