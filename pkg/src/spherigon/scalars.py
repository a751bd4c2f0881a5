"""Scalar functions of a reduced polygon's thickness.

Fix the thickness ``omega`` in (0, pi/2) and put ``lam = tan(omega)``. In the
right triangle formed by a chord crossing point ``o``, the foot ``t`` of a
vertex projection and the vertex ``v`` across from it, the short leg ``|ot|``
has tangent ``y`` and the hypotenuse is ``omega - atan(y)``. Everything
about the triangle follows from ``y``:

* ``crossing_angle(y)``  - angle at ``o``           (arccos y(1+lam y)/(lam-y))
* ``corner_angle(y)``    - angle at ``v``           (arcsin y sqrt(1+lam^2)/(lam-y))
* ``corner_coangle(y)``  - ``pi/2 - corner_angle(y)``
* ``leg_tangent(phi)``   - inverse of ``crossing_angle``
* ``corner_from_crossing(phi)`` - ``corner_angle(leg_tangent(phi))``

``y`` ranges over ``(0, x_max)`` with ``x_max = tan(omega/2)``. Near ``x_max``
both arccos arguments approach 1 and the naive formulas lose half their
digits, so the implementation carries the gap ``x_max - y`` explicitly and
evaluates ``arccos(u)`` as ``2 asin(sqrt((1-u)/2))`` with ``1-u`` factored.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT
from .errors import DomainError

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class ThicknessProfile:
    omega: float

    def __post_init__(self):
        if not (0.0 < self.omega < HALF_PI):
            raise DomainError(f"thickness must lie in (0, pi/2), got {self.omega!r}")

    @property
    def lam(self) -> float:
        return math.tan(self.omega)

    @property
    def secant(self) -> float:
        return math.sqrt(1.0 + self.lam**2)

    @property
    def x_max(self) -> float:
        # (-1 + sqrt(1+lam^2)) / lam, written without cancellation
        return self.lam / (1.0 + self.secant)

    @property
    def x_minus(self) -> float:
        """Negative root of ``lam x^2 + 2x - lam``."""
        return -(1.0 + self.secant) / self.lam


def _as_array(x):
    return np.asarray(x, dtype=float)


def _ret(v):
    return float(v) if np.ndim(v) == 0 else v


def _check_open(x, lo, hi, name, margin=DEFAULT.domain_margin):
    x = _as_array(x)
    if np.any(~np.isfinite(x)) or np.any(x < lo + margin) or np.any(x > hi - margin):
        raise DomainError(f"{name} must lie in ({lo!r}, {hi!r})")
    return x


def _acos_from_gap(gap):
    """``arccos(1 - gap)`` accurate for tiny ``gap``."""
    return 2.0 * np.arcsin(np.sqrt(np.clip(gap, 0.0, 2.0) / 2.0))


# -- internal kernels taking (y, x_max - y) ------------------------------------

def _coangle(y, gap, prof: ThicknessProfile):
    return _acos_from_gap((1.0 + prof.secant) * gap / (prof.lam - y))


def _crossing(y, gap, prof: ThicknessProfile):
    return _acos_from_gap(gap * (prof.lam * y + 1.0 + prof.secant) / (prof.lam - y))


def _leg_tangent_and_gap(phi, prof: ThicknessProfile):
    lam = prof.lam
    c = np.cos(phi)
    big = 1.0 + c
    y = 2.0 * lam * c / (big + np.sqrt(big * big + 4.0 * lam * lam * c))
    gap = 2.0 * np.sin(0.5 * phi) ** 2 * (lam - y) / (lam * y + 1.0 + prof.secant)
    return y, gap


# -- public functions ----------------------------------------------------------

def leg_tangent(phi, prof: ThicknessProfile):
    """Tangent of the short leg for crossing angle ``phi`` in (0, pi/2).

    Positive root of ``lam y^2 + (1 + cos phi) y - lam cos phi = 0``, i.e.
    ``cos phi = y (1 + lam y) / (lam - y)``.
    """
    phi = _check_open(phi, 0.0, HALF_PI, "crossing angle")
    return _ret(_leg_tangent_and_gap(phi, prof)[0])


def corner_coangle(x, prof: ThicknessProfile):
    x = _check_open(x, 0.0, prof.x_max, "leg tangent")
    return _ret(_coangle(x, prof.x_max - x, prof))


def corner_angle(x, prof: ThicknessProfile):
    """Angle at the far vertex; ``corner_angle + corner_coangle == pi/2``."""
    return _ret(HALF_PI - _as_array(corner_coangle(x, prof)))


def crossing_angle(x, prof: ThicknessProfile):
    x = _check_open(x, 0.0, prof.x_max, "leg tangent")
    return _ret(_crossing(x, prof.x_max - x, prof))


def coangle_ratio(x, prof: ThicknessProfile):
    """``corner_coangle(x) / crossing_angle(x)``, decreasing on (0, x_max)."""
    x = _check_open(x, 0.0, prof.x_max, "leg tangent")
    gap = prof.x_max - x
    return _ret(_coangle(x, gap, prof) / _crossing(x, gap, prof))


def corner_from_crossing(phi, prof: ThicknessProfile):
    """Corner angle as a function of the crossing angle; decreasing and concave."""
    phi = _check_open(phi, 0.0, HALF_PI, "crossing angle")
    y, gap = _leg_tangent_and_gap(phi, prof)
    return _ret(HALF_PI - _coangle(y, gap, prof))


def _slope_parts(phi, prof: ThicknessProfile):
    """Shared pieces of the derivative formulas, rewritten to avoid cancellation.

    ``1 + 2 lam^2 + c - r`` equals ``4 lam^2 (1 + lam^2) / (1 + 2 lam^2 + c + r)``
    and ``1 - c`` equals ``2 sin^2(phi/2)``.
    """
    lam = prof.lam
    c = np.cos(phi)
    r = np.sqrt((1 + c) ** 2 + 4 * lam * lam * c)
    one_minus_c = 2 * np.sin(0.5 * phi) ** 2
    tail = 4 * lam * lam * (1 + lam * lam) / (1 + 2 * lam * lam + c + r)
    return lam, c, r, one_minus_c, tail


def corner_from_crossing_slope(phi, prof: ThicknessProfile):
    """Closed-form first derivative of ``corner_from_crossing``."""
    phi = _check_open(phi, 0.0, HALF_PI, "crossing angle")
    lam, c, r, one_minus_c, tail = _slope_parts(phi, prof)
    num = -lam * math.sqrt(2 + 2 * lam * lam) * np.sin(phi)
    return _ret(num / (r * np.sqrt(one_minus_c) * np.sqrt(tail)))


def corner_from_crossing_curvature(phi, prof: ThicknessProfile):
    """Closed-form second derivative of ``corner_from_crossing``.

    The leading coefficient is ``sqrt(2 + 2 lam^2)``, the same as in the first
    derivative. The bracket ``-2(1+c)^2 - 8 lam^2 + 2(1+c) r`` is evaluated as
    ``-8 lam^2 (r + sin^2 phi) / (r + 1 + c)``.
    """
    phi = _check_open(phi, 0.0, HALF_PI, "crossing angle")
    lam, c, r, one_minus_c, tail = _slope_parts(phi, prof)
    bracket = -8 * lam * lam * (r + np.sin(phi) ** 2) / (r + 1 + c)
    num = lam * math.sqrt(2 + 2 * lam * lam) * np.sin(phi / 2) ** 4 * bracket
    return _ret(num / (one_minus_c**1.5 * r**3 * np.sqrt(tail)))


def regular_y(n: int, prof: ThicknessProfile) -> tuple[float, float]:
    """Leg tangent of the regular ``n``-gon and its gap to ``x_max``."""
    y, gap = _leg_tangent_and_gap(math.pi / n, prof)
    return float(y), float(gap)


def regular_area_forms(n: int, prof: ThicknessProfile) -> tuple[float, float]:
    """The two closed forms for the area of the regular ``n``-gon.

    ``2 pi - 2 pi coangle(y) / crossing(y)`` and ``2 n F(pi/n) - (n - 2) pi``
    with ``y = leg_tangent(pi/n)`` and ``F = corner_from_crossing``.
    """
    y, gap = _leg_tangent_and_gap(math.pi / n, prof)
    co = float(_coangle(y, gap, prof))
    ratio_form = 2 * math.pi - 2 * math.pi * co / float(_crossing(y, gap, prof))
    # 2n (pi/2 - co) - (n-2) pi, regrouped to avoid cancelling n pi terms
    sum_form = 2 * math.pi - 2 * n * co
    return ratio_form, sum_form
