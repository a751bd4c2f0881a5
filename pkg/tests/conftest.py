import numpy as np
import pytest

from spherigon import SphericalPolygon, perturbed_reduced_polygon, regular_odd_gon


@pytest.fixture
def octant():
    return SphericalPolygon(np.eye(3))


@pytest.fixture
def pentagon():
    return regular_odd_gon(5, 0.8)


@pytest.fixture(scope="session")
def perturbed_pentagon():
    return perturbed_reduced_polygon(5, 0.8, seed=42, delta=0.03)


@pytest.fixture(scope="session")
def perturbed_heptagon():
    return perturbed_reduced_polygon(7, 1.0, seed=3, delta=0.03)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_lines():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
