import pytest

from boxinterp.models.errors import NotTotallyUnimodularError
from boxinterp.models.message import MessageLevel
from boxinterp.utils.verify import (
    check_dimensions, check_quotient, check_scale_invariance, verify
)

from .conftest import FIG1, GRAPHS, NON_TU, SUITE, X3, X4


@pytest.mark.parametrize('name', sorted(SUITE))
def test_dimensions(name):
    report = check_dimensions(SUITE[name])
    assert report.passed, report.failures
    assert report.checked == 2


def test_quotient():
    report = check_quotient(FIG1, [0, 1, 2])
    assert report.passed
    assert report.checked == 6


@pytest.mark.parametrize('name', ['fig1', 'X3', 'K3', 'C4'])
def test_scale_invariance(name):
    x = SUITE[name]
    report = check_scale_invariance(x, (-1, 2, 3))
    assert report.passed, report.failures
    assert report.checked == 3 * len(x)


@pytest.mark.parametrize('x', [FIG1, X3, GRAPHS['K3']])
def test_verify_passes(x):
    messages = []
    reports = verify(x, messages, samples=0)
    assert all(report.passed for report in reports), [
        report.to_dict() for report in reports if not report.passed]
    names = {report.name for report in reports}
    assert {'cardinal', 'dimensions', 'round-trip', 'fiber-sum',
            'commutativity'} <= names
    assert 'monte-carlo' not in names
    assert all(message.level is MessageLevel.INFO for message in messages)


def test_verify_long_list_runs_cardinal_only():
    messages = []
    reports = verify(X4, messages, max_n=3, samples=0)
    assert [report.name for report in reports] == ['cardinal']
    assert messages[0].level is MessageLevel.WARNING


def test_verify_coloops_only():
    messages = []
    reports = verify(GRAPHS['P3'], messages, samples=0)
    assert all(report.passed for report in reports)
    assert 'fiber-sum' not in {report.name for report in reports}


def test_verify_rejects_non_tu():
    with pytest.raises(NotTotallyUnimodularError):
        verify(NON_TU, [])
