import json
import math

import pytest

from spherigon.verify import GridError, SweepGrid, run_verification

SMALL = SweepGrid(
    lambda_values=(1.0,),
    n_values=(3, 5, 7),
    omega_values=(0.8,),
    seeds=(0,),
    mc_samples=20_000,
)


@pytest.fixture(scope="module")
def small_report():
    return run_verification("all", SMALL)


def test_small_grid_passes(small_report):
    assert small_report.passed, [r.claim_id for r in small_report.failed()]


def test_records_sorted_and_well_formed(small_report):
    ids = [r.claim_id for r in small_report.records]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)
    for r in small_report.records:
        assert r.tolerance > 0
        assert math.isfinite(r.margin)
        assert r.reference


def test_json_is_canonical(small_report):
    text = small_report.to_json()
    doc = json.loads(text)
    assert text == json.dumps(doc, indent=2, sort_keys=True)
    assert doc["passed"] is True


def test_sabotage_is_detected():
    report = run_verification("polygons", SMALL, sabotage="girard")
    failed = {r.claim_id for r in report.failed()}
    assert failed == {"area-via-crossing-angles-matches-girard"}


def test_single_suites_are_subsets(small_report):
    scal = run_verification("scalars", SMALL)
    every = {r.claim_id for r in small_report.records}
    assert {r.claim_id for r in scal.records} < every


@pytest.mark.parametrize(
    "grid",
    [
        SweepGrid(omega_values=(1.57,)),
        SweepGrid(omega_values=(0.0,)),
        SweepGrid(n_values=(4,)),
        SweepGrid(n_values=(1,)),
        SweepGrid(lambda_values=(-1.0,)),
        SweepGrid(mc_samples=0),
    ],
)
def test_grid_validation(grid):
    with pytest.raises(GridError):
        run_verification("all", grid)


def test_unknown_suite():
    with pytest.raises(GridError):
        run_verification("everything", SMALL)
