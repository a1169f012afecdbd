from fractions import Fraction
from functools import partial
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..models.errors import BoxInterpError
from ..models.grid_function import GridFunction
from ..models.message import Message, MessageLevel
from ..models.multi_poly import MultiPoly
from ..models.report import CheckReport
from ..models.spline import PiecewiseSpline, shifted
from ..models.tutte_poly import TuttePoly
from ..models.vector_list import VectorList
from .interpolate import (
    check_commutativity, check_linearity, random_grid_function,
    solve_direct, solve_recursive
)
from .oracle import DEFAULT_MC_SAMPLES
from .pspace import central_space, internal_space
from .spline import build_box, build_multivariate, is_generic
from .spline_checks import (
    DEFAULT_WALL_SAMPLES, RatPoint, check_cardinal, check_continuity,
    check_derivative_identities, check_fiber_sum, check_homogeneity,
    check_oracle, check_support, fiber_sum_points, generic_box_points,
    wall_points
)
from .tutte import tutte
from .zonotope import (
    interior_lattice_points, quotient_bijection, shift_violations
)

DEFAULT_VERIFY_MAX_N = 10
DEFAULT_SEED = 0
DEFAULT_ROUND_TRIPS = 5
DEFAULT_FIBER_POINTS = 3
DEFAULT_SUPPORT_POINTS = 20
DEFAULT_ORACLE_POINTS = 3
MAX_CARDINAL_N = 7
DEFAULT_SCALE_FACTORS = (-1, 2)


def check_dimensions(x: VectorList) -> CheckReport:
    """dim P_-(X) = |Z_-(X)| = T(0, 1) and dim P(X) = #bases = T(1, 1)"""
    report = CheckReport('dimensions')
    poly: TuttePoly = tutte(x, cross_check=True)
    internal: int = internal_space(x).dimension
    interior: int = len(interior_lattice_points(x))
    report.record(
        internal == interior == poly.evaluate(0, 1),
        space='internal', dimension=internal, points=interior,
        tutte=poly.evaluate(0, 1))
    central: int = central_space(x).dimension
    bases: int = len(x.bases())
    volume: Fraction = x.volume()
    report.record(
        central == bases == volume == poly.evaluate(1, 1),
        space='central', dimension=central, bases=bases, volume=volume,
        tutte=poly.evaluate(1, 1))
    return report


def check_scale_invariance(
    x: VectorList,
    factors: Tuple[int, ...] = DEFAULT_SCALE_FACTORS
) -> CheckReport:
    """Scaling one vector leaves both P-spaces unchanged

    Scaled lists are usually not totally unimodular; the P-space
    constructions do not need it.
    """
    report = CheckReport('scale-invariance')
    central: List[MultiPoly] = central_space(x).basis
    internal: List[MultiPoly] = internal_space(x).basis
    for index in range(len(x)):
        if x.is_zero(index):
            continue
        for factor in factors:
            scaled: VectorList = x.scale(index, factor)
            report.record(
                central_space(scaled).basis == central and
                internal_space(scaled).basis == internal,
                index=index, factor=factor)
    return report


def check_quotient(x: VectorList, pivots: List[int]) -> CheckReport:
    report = CheckReport('quotient-bijection')
    for index in pivots:
        pairs = quotient_bijection(x, index)
        report.record(True, pivot=index, pairs=len(pairs))
        violations = shift_violations(x, index)
        report.record(not violations, pivot=index,
                      violations=[list(v) for v in violations])
    return report


def check_round_trip(
    x: VectorList,
    pivots: List[int],
    rng: np.random.Generator
) -> CheckReport:
    """γ_X(solve(f)) = f, with both solvers giving one polynomial"""
    report = CheckReport('round-trip')
    for _ in range(DEFAULT_ROUND_TRIPS):
        f: GridFunction = random_grid_function(x, rng)
        direct = solve_direct(x, f)
        report.record(True, solver='direct')
        choices: List[Optional[int]] = list(pivots[:2]) or [None]
        for index in choices:
            recursive = solve_recursive(x, f, index)
            report.record(
                recursive.poly == direct.poly, solver='recursive',
                pivot=index, direct=str(direct.poly),
                recursive=str(recursive.poly))
    return report


def _random_scalar(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-5, 5, endpoint=True)),
                    int(rng.integers(1, 5, endpoint=True)))


def _identity_points(
    x: VectorList,
    index: int,
    rng: np.random.Generator
) -> List[RatPoint]:
    deleted: PiecewiseSpline = build_box(x.delete(index))
    points: List[RatPoint] = []
    while len(points) < DEFAULT_FIBER_POINTS:
        for point in generic_box_points(x, 1, rng, margin=1):
            if (
                is_generic(deleted, point) and
                is_generic(deleted, shifted(point, x[index]))
            ):
                points.append(point)
    return points


def run_check(
    name: str,
    check: Callable[[], CheckReport],
    messages: List[Message]
) -> CheckReport:
    """Run one check; a library error becomes a failed report"""
    try:
        return check()
    except BoxInterpError as exc:
        report = CheckReport(name)
        report.fail(**exc.to_dict())
        messages.append(Message(name, MessageLevel.ERROR, str(exc)))
        return report


def verify(
    x: VectorList,
    messages: List[Message],
    max_n: int = DEFAULT_VERIFY_MAX_N,
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED
) -> List[CheckReport]:
    """Run every structural check on a spanning, totally unimodular list

    Lists longer than `max_n` only get the cardinal check. Monte Carlo
    sampling is skipped when `samples` is zero.
    """
    x.require_spanning()
    x.require_totally_unimodular()
    rng = np.random.default_rng(seed)
    checks: List[Tuple[str, Callable[[], CheckReport]]] = [
        ('cardinal', partial(check_cardinal, min(max_n, MAX_CARDINAL_N)))
    ]
    if len(x) > max_n:
        messages.append(Message(
            'verify', MessageLevel.WARNING,
            'list has {} vectors, more than --max-n {}; only the cardinal '
            'check was run'.format(len(x), max_n)
        ))
    elif x.dim == 0:
        checks.append(('dimensions', partial(check_dimensions, x)))
    else:
        pivots: List[int] = [
            i for i in range(len(x))
            if not x.is_zero(i) and not x.is_coloop(i)
        ]
        if not pivots:
            messages.append(Message(
                'verify', MessageLevel.INFO,
                'every vector is zero or a coloop; deletion and '
                'contraction checks are skipped'
            ))
        checks.extend([
            ('dimensions', partial(check_dimensions, x)),
            ('quotient-bijection', partial(check_quotient, x, pivots)),
            ('scale-invariance', partial(check_scale_invariance, x)),
            ('homogeneity', partial(
                check_homogeneity, build_multivariate(x))),
            ('support', partial(
                check_support, x, DEFAULT_SUPPORT_POINTS, rng)),
            ('continuity', partial(
                check_continuity, x,
                wall_points(x, DEFAULT_WALL_SAMPLES, rng)))
        ])
        for index in pivots:
            checks.extend([
                ('fiber-sum', partial(
                    check_fiber_sum, x, index,
                    fiber_sum_points(x, index, DEFAULT_FIBER_POINTS, rng))),
                ('derivative-identities', partial(
                    check_derivative_identities, x, index,
                    _identity_points(x, index, rng))),
                ('commutativity', partial(check_commutativity, x, index))
            ])
        checks.extend([
            ('round-trip', partial(check_round_trip, x, pivots, rng)),
            ('linearity', partial(
                check_linearity, x,
                random_grid_function(x, rng), random_grid_function(x, rng),
                _random_scalar(rng), _random_scalar(rng)))
        ])
        if samples > 0:
            checks.append(('monte-carlo', partial(
                check_oracle, x, DEFAULT_ORACLE_POINTS, rng, samples, seed)))

    reports: List[CheckReport] = []
    for name, check in checks:
        report: CheckReport = run_check(name, check, messages)
        level: MessageLevel = (
            MessageLevel.INFO if report.passed else MessageLevel.ERROR)
        messages.append(Message(
            report.name, level,
            '{} of {} cases passed'.format(
                report.checked - len(report.failures), report.checked)
        ))
        reports.append(report)
    return reports
