import numpy as np
import pytest

from boxinterp.models.errors import PreconditionError
from boxinterp.models.report import CheckReport
from boxinterp.utils.spline import build_box, build_multivariate, is_generic
from boxinterp.utils.spline_checks import (
    check_cardinal, check_continuity, check_derivative_identities,
    check_fiber_sum, check_homogeneity, check_oracle, check_support,
    fiber_sum_points, generic_box_points, wall_points
)
from boxinterp.utils.zonotope import hrep

from .conftest import (
    FIG1, GRAPHS, NON_TU, PIVOT_CASES, SMALL_SUITE, SUITE, X3
)


def test_report():
    report = CheckReport('demo')
    report.record(True)
    assert report.passed
    report.fail(point=[1])
    assert not report.passed
    assert report.to_dict() == {
        'name': 'demo', 'passed': False, 'checked': 2,
        'failures': [{'point': [1]}]
    }


def test_generic_points():
    rng = np.random.default_rng(0)
    spline = build_box(FIG1)
    points = generic_box_points(FIG1, 10, rng)
    assert len(points) == 10
    assert all(is_generic(spline, point) for point in points)


@pytest.mark.parametrize('name,index', PIVOT_CASES)
def test_fiber_sum(name, index):
    x = SUITE[name]
    points = fiber_sum_points(x, index, 3, np.random.default_rng(1))
    report = check_fiber_sum(x, index, points)
    assert report.passed, report.failures
    assert report.checked == 3


def test_fiber_sum_preconditions():
    with pytest.raises(PreconditionError):
        check_fiber_sum(NON_TU, 0, [])


@pytest.mark.parametrize('name', sorted(SMALL_SUITE))
def test_homogeneity(name):
    report = check_homogeneity(build_multivariate(SMALL_SUITE[name]))
    assert report.passed, report.failures


@pytest.mark.parametrize('name', ['fig1', 'X3', 'flipped', 'K3'])
def test_support(name):
    report = check_support(SMALL_SUITE[name], 5, np.random.default_rng(2))
    assert report.passed, report.failures
    assert report.checked == 10


@pytest.mark.parametrize('name', ['fig1', 'X3', 'X4', 'doubled', 'C4'])
def test_continuity(name):
    x = SMALL_SUITE[name]
    points = wall_points(x, 2, np.random.default_rng(3))
    assert points
    assert all(hrep(x).contains(point, strict=True) for point in points)
    report = check_continuity(x, points)
    assert report.passed, report.failures


@pytest.mark.parametrize('x,index', [(FIG1, 0), (FIG1, 2), (X3, 1)])
def test_derivative_identities(x, index):
    deleted = build_box(x.delete(index))
    points = [
        point
        for point in generic_box_points(x, 20, np.random.default_rng(4), 1)
        if is_generic(deleted, point) and is_generic(
            deleted, tuple(p - v for p, v in zip(point, x[index])))
    ]
    report = check_derivative_identities(x, index, points[:4])
    assert report.passed, report.failures


def test_derivative_identities_reject_coloops():
    with pytest.raises(PreconditionError):
        check_derivative_identities(GRAPHS['P3'], 0, [])


def test_cardinal_check():
    report = check_cardinal(4)
    assert report.passed, report.failures


@pytest.mark.parametrize('x', [X3, FIG1, GRAPHS['K3']])
def test_oracle_check(x):
    report = check_oracle(
        x, 3, np.random.default_rng(5), samples=20000, sigmas=5)
    assert report.passed, report.failures
    assert report.checked == 3
