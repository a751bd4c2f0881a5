import math

import numpy as np
import pytest

from spherigon import scalars
from spherigon.errors import DomainError
from spherigon.reduced import regular_area
from spherigon.scalars import ThicknessProfile

# 50-digit mpmath values, frozen. Regular areas come from Napier's rule on
# the circumradius (angle excess), not from the closed forms under test.
REGULAR_AREA = {
    (3, math.pi / 4): 0.367636675924473595,
    (5, 0.8): 0.46348270905258634932,
    (7, 1.0): 0.7466697689781063265,
    (9, 0.5): 0.1913981811374422342,
    (101, 1.4): 1.4773792751981338174,
    (1001, 0.2): 0.031389704176596314071,
}
# (lam, phi): (F, F', F'') by mpmath numerical differentiation
CORNER = {
    (1.0, 0.7): (0.91959268846270366139, -0.94510389972512001115, -0.0762576456664849428),
    (0.25, 1.2): (0.37629135766495272408, -1.0043405770247596556, -0.036223280881392149936),
    (4.0, 0.3): (1.333648203076510369, -0.79517145155764735012, -0.048155787193901315807),
}


def test_profile_domain():
    for bad in (0.0, -0.1, math.pi / 2, 2.0):
        with pytest.raises(DomainError):
            ThicknessProfile(bad)


def test_x_max_is_half_angle_tangent():
    for w in (0.1, 0.8, 1.5):
        prof = ThicknessProfile(w)
        assert prof.x_max == pytest.approx(math.tan(w / 2), rel=1e-15)
        # both roots of lam x^2 + 2x - lam
        for r in (prof.x_max, prof.x_minus):
            assert prof.lam * r * r + 2 * r - prof.lam == pytest.approx(0.0, abs=1e-13 * max(1, r * r))


def test_leg_tangent_closed_value():
    prof = ThicknessProfile(math.pi / 3)
    expected = (-1.5 + math.sqrt(33) / 2) / (2 * math.sqrt(3))
    assert scalars.leg_tangent(math.pi / 3, prof) == pytest.approx(expected, rel=1e-15)


def test_leg_tangent_back_substitution():
    rng = np.random.default_rng(0)
    for lam in (0.1, 1.0, 10.0):
        prof = ThicknessProfile(math.atan(lam))
        phi = rng.uniform(0.01, 1.56, 200)
        y = scalars.leg_tangent(phi, prof)
        np.testing.assert_allclose(y * (1 + lam * y) / (lam - y), np.cos(phi), rtol=1e-12, atol=1e-14)
        # phi -> y -> phi loses digits near phi = 0 where y crowds x_max
        np.testing.assert_allclose(scalars.crossing_angle(y, prof), phi, rtol=1e-12, atol=1e-13)


def test_leg_tangent_endpoints():
    prof = ThicknessProfile(1.0)
    assert scalars.leg_tangent(math.pi / 2 - 1e-9, prof) < 1e-8
    assert prof.x_max - scalars.leg_tangent(1e-6, prof) < 1e-11


def test_endpoint_limits():
    prof = ThicknessProfile(0.9)
    lo, hi = 1e-9, prof.x_max * (1 - 1e-9)
    assert scalars.corner_angle(lo, prof) == pytest.approx(0.0, abs=1e-8)
    assert scalars.corner_coangle(lo, prof) == pytest.approx(math.pi / 2, abs=1e-8)
    assert scalars.crossing_angle(lo, prof) == pytest.approx(math.pi / 2, abs=1e-8)
    assert scalars.corner_angle(hi, prof) == pytest.approx(math.pi / 2, abs=1e-4)
    assert scalars.corner_coangle(hi, prof) == pytest.approx(0.0, abs=1e-4)
    assert scalars.crossing_angle(hi, prof) == pytest.approx(0.0, abs=1e-4)


def test_domain_guards():
    prof = ThicknessProfile(0.9)
    for bad in (0.0, prof.x_max, -1.0, float("nan")):
        with pytest.raises(DomainError):
            scalars.corner_angle(bad, prof)
    with pytest.raises(DomainError):
        scalars.corner_from_crossing(math.pi / 2, prof)


def test_arguments_inside_unit_interval():
    rng = np.random.default_rng(1)
    for lam in rng.uniform(0.05, 20, 20):
        prof = ThicknessProfile(math.atan(lam))
        x = rng.uniform(0, 1, 100) * prof.x_max
        x = x[(x > 1e-9) & (x < prof.x_max - 1e-9)]
        sin_arg = x * prof.secant / (lam - x)
        cos_arg = x * (1 + lam * x) / (lam - x)
        assert np.all((sin_arg > 0) & (sin_arg < 1))
        assert np.all((cos_arg > 0) & (cos_arg < 1))


def test_stable_forms_match_naive_away_from_x_max():
    prof = ThicknessProfile(0.7)
    lam = prof.lam
    x = np.linspace(0.05, 0.8, 50) * prof.x_max
    naive_corner = np.arcsin(x * prof.secant / (lam - x))
    naive_crossing = np.arccos(x * (1 + lam * x) / (lam - x))
    np.testing.assert_allclose(scalars.corner_angle(x, prof), naive_corner, rtol=1e-13)
    np.testing.assert_allclose(scalars.crossing_angle(x, prof), naive_crossing, rtol=1e-12)


def test_coangle_ratio_decreasing():
    for lam in (0.1, 1.0, 10.0):
        prof = ThicknessProfile(math.atan(lam))
        x = np.linspace(0, prof.x_max, 1002)[1:-1]
        assert np.all(np.diff(scalars.coangle_ratio(x, prof)) < 0)


@pytest.mark.parametrize("key", sorted(CORNER))
def test_corner_function_against_high_precision(key):
    lam, phi = key
    f, f1, f2 = CORNER[key]
    prof = ThicknessProfile(math.atan(lam))
    assert scalars.corner_from_crossing(phi, prof) == pytest.approx(f, rel=1e-14)
    assert scalars.corner_from_crossing_slope(phi, prof) == pytest.approx(f1, rel=1e-13)
    assert scalars.corner_from_crossing_curvature(phi, prof) == pytest.approx(f2, rel=1e-12)


def test_curvature_coefficient_matters():
    # the alternative coefficient sqrt(2 lam + 2 lam^2) disagrees with the frozen value
    lam, phi = 4.0, 0.3
    prof = ThicknessProfile(math.atan(lam))
    ours = scalars.corner_from_crossing_curvature(phi, prof)
    other = ours * math.sqrt(2 * lam + 2 * lam**2) / math.sqrt(2 + 2 * lam**2)
    assert abs(other - CORNER[(lam, phi)][2]) > 1e-3


@pytest.mark.parametrize("key", sorted(REGULAR_AREA))
def test_regular_area_forms(key):
    n, w = key
    ratio_form, sum_form = scalars.regular_area_forms(n, ThicknessProfile(w))
    ref = REGULAR_AREA[key]
    assert ratio_form == pytest.approx(ref, rel=2e-14)
    assert sum_form == pytest.approx(ref, rel=2e-14)
    assert regular_area(n, w) == pytest.approx(ref, rel=2e-14)


def test_regular_y_triangle_quarter_pi():
    y, gap = scalars.regular_y(3, ThicknessProfile(math.pi / 4))
    assert y == pytest.approx((-1.5 + math.sqrt(17) / 2) / 2, rel=1e-15)
    assert gap == pytest.approx(ThicknessProfile(math.pi / 4).x_max - y, rel=1e-13)


def test_scalar_and_array_inputs_agree():
    prof = ThicknessProfile(1.1)
    phi = np.array([0.2, 0.9, 1.4])
    vec = scalars.corner_from_crossing(phi, prof)
    assert isinstance(scalars.corner_from_crossing(0.2, prof), float)
    assert vec.shape == (3,)
    assert vec[1] == scalars.corner_from_crossing(0.9, prof)
