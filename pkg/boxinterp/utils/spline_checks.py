from fractions import Fraction
from math import ceil, floor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..models.errors import (
    DiscontinuityError, PreconditionError, WallPointError
)
from ..models.multi_poly import MultiPoly, linear_form
from ..models.pspace_basis import PSpaceBasis
from ..models.rat_matrix import Scalar
from ..models.report import CheckReport
from ..models.spline import PiecewiseSpline, shifted
from ..models.vector_list import Contraction, IntVector, VectorList
from ..models.zonotope import Zonotope
from .cardinal import cardinal_bspline, cardinal_matrix
from .linalg import dot
from .oracle import DEFAULT_MC_SAMPLES, DEFAULT_SIGMAS, fiber_volume
from .pspace import internal_space
from .spline import (
    build_box, build_multivariate, eval_box_derivative, eval_multivariate,
    is_generic, require_generic
)
from .zonotope import hrep

DEFAULT_WALL_SAMPLES = 5
DENOMINATOR = 97
RatPoint = Tuple[Fraction, ...]


def _text(point: Sequence[Scalar]) -> List[str]:
    return [str(Fraction(p)) for p in point]


def random_point(
    rng: np.random.Generator,
    box: Sequence[Tuple[Scalar, Scalar]],
    denominator: int = DENOMINATOR
) -> RatPoint:
    return tuple(
        Fraction(int(rng.integers(
            floor(lo * denominator), ceil(hi * denominator), endpoint=True)),
            denominator)
        for lo, hi in box
    )


def _expanded_box(zonotope: Zonotope, margin: int) -> List[Tuple[int, int]]:
    return [(lo - margin, hi + margin) for lo, hi in zonotope.bounding_box()]


def generic_box_points(
    x: VectorList,
    count: int,
    rng: np.random.Generator,
    margin: int = 0
) -> List[RatPoint]:
    """Random rational points off every wall of B_X near Z(X)"""
    spline: PiecewiseSpline = build_box(x)
    box = _expanded_box(hrep(x), margin)
    points: List[RatPoint] = []
    while len(points) < count:
        point: RatPoint = random_point(rng, box)
        if is_generic(spline, point):
            points.append(point)
    return points


def _fiber_range(x: VectorList, index: int, point: RatPoint) -> range:
    """Integers λ with point + λ·x inside the closed zonotope"""
    vector: IntVector = x[index]
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    for half in hrep(x).halfspaces:
        rate = dot(half.normal, vector)
        if rate == 0:
            continue
        offset = dot(half.normal, point)
        ends = sorted([
            Fraction(half.lower - offset) / rate,
            Fraction(half.upper - offset) / rate
        ])
        lower = ends[0] if lower is None else max(lower, ends[0])
        upper = ends[1] if upper is None else min(upper, ends[1])
    if lower is None or upper is None or lower > upper:
        return range(0)
    return range(ceil(lower), floor(upper) + 1)


def check_fiber_sum(
    x: VectorList,
    index: int,
    samples: Sequence[Sequence[Scalar]]
) -> CheckReport:
    """Σ_λ B_X(u + λx) = B_(X/x)(ū) at generic points u"""
    x.require_totally_unimodular()
    if x.is_zero(index):
        raise PreconditionError(
            'vector {} of {!r} is zero'.format(index, x))
    report = CheckReport('fiber-sum')
    box: PiecewiseSpline = build_box(x)
    contraction: Contraction = x.contract(index)
    child: PiecewiseSpline = build_box(contraction.child)
    for sample in samples:
        point: RatPoint = tuple(Fraction(v) for v in sample)
        steps = _fiber_range(x, index, point)
        for step in steps:
            require_generic(box, shifted(point, x[index], step))
        image = contraction.project_rational(point)
        require_generic(child, image)
        left: Fraction = sum((
            eval_box_derivative(
                box, None, shifted(point, x[index], step), False)
            for step in steps
        ), Fraction(0))
        right: Fraction = eval_box_derivative(child, None, image, False)
        report.record(
            left == right, point=_text(point), fiber_sum=left,
            contracted=right)
    return report


def fiber_sum_points(
    x: VectorList,
    index: int,
    count: int,
    rng: np.random.Generator
) -> List[RatPoint]:
    box: PiecewiseSpline = build_box(x)
    contraction: Contraction = x.contract(index)
    child: PiecewiseSpline = build_box(contraction.child)
    bounds = _expanded_box(hrep(x), 0)
    points: List[RatPoint] = []
    while len(points) < count:
        point: RatPoint = random_point(rng, bounds)
        if not is_generic(child, contraction.project_rational(point)):
            continue
        if all(
            is_generic(box, shifted(point, x[index], step))
            for step in _fiber_range(x, index, point)
        ):
            points.append(point)
    return points


def check_homogeneity(spline: PiecewiseSpline) -> CheckReport:
    """Every T_X piece is homogeneous: f(2u) = 2^k f(u) symbolically"""
    report = CheckReport('homogeneity')
    doubled: List[MultiPoly] = [
        MultiPoly.variable(spline.dim, i).scale(2)
        for i in range(spline.dim)
    ]
    factor: int = 2 ** spline.degree
    for tope, piece in zip(spline.arrangement.topes, spline.pieces):
        ok: bool = (
            piece.is_homogeneous(spline.degree) and
            piece.compose(doubled) == piece.scale(factor)
        )
        report.record(ok, tope=tope.sign_text(), piece=str(piece))
    return report


def check_support(
    x: VectorList,
    count: int,
    rng: np.random.Generator
) -> CheckReport:
    """T_X vanishes off its cone and B_X vanishes off Z(X)"""
    report = CheckReport('support')
    multivariate: PiecewiseSpline = build_multivariate(x)
    box: PiecewiseSpline = build_box(x)
    zonotope: Zonotope = hrep(x)
    bounds = _expanded_box(zonotope, 2)
    checked: int = 0
    while checked < count:
        point: RatPoint = random_point(rng, bounds)
        if zonotope.contains(point):
            continue
        checked += 1
        value = eval_box_derivative(box, None, point, False)
        report.record(value == 0, spline='box', point=_text(point),
                      value=value)
    checked = 0
    while checked < count:
        point = random_point(rng, bounds)
        if dot(multivariate.functional, point) >= 0:
            continue
        checked += 1
        value = eval_multivariate(multivariate, point)
        report.record(value == 0, spline='multivariate',
                      point=_text(point), value=value)
    return report


def wall_points(
    x: VectorList,
    per_wall: int,
    rng: np.random.Generator
) -> List[RatPoint]:
    """Random points on the affine walls of B_X inside Z(X)

    Walls are η·u = c for every arrangement normal η and every integer c
    strictly between the zonotope bounds; interior points are projected
    onto them along η.
    """
    zonotope: Zonotope = hrep(x)
    spline: PiecewiseSpline = build_box(x)
    bounds = _expanded_box(zonotope, 0)
    points: List[RatPoint] = []
    for half in zonotope.halfspaces:
        if half.normal not in spline.arrangement.normals:
            continue
        norm: int = int(dot(half.normal, half.normal))
        for level in range(half.lower + 1, half.upper):
            found: int = 0
            attempts: int = 0
            while found < per_wall and attempts < 50 * per_wall:
                attempts += 1
                start: RatPoint = random_point(rng, bounds)
                step = Fraction(level - dot(half.normal, start), norm)
                point: RatPoint = shifted(start, half.normal, step)
                if zonotope.contains(point, strict=True):
                    points.append(point)
                    found += 1
    return points


def check_continuity(
    x: VectorList,
    points: Sequence[RatPoint],
    internal: Optional[PSpaceBasis] = None
) -> CheckReport:
    """p(D)B_X has one limit at wall points for every internal basis p"""
    report = CheckReport('continuity')
    spline: PiecewiseSpline = build_box(x)
    if internal is None:
        internal = internal_space(x)
    for poly in internal.basis:
        for point in points:
            try:
                eval_box_derivative(spline, poly, point)
            except DiscontinuityError as exc:
                report.fail(poly=str(poly), point=_text(point),
                            limits=list(exc.limits))
            else:
                report.record(True)
    return report


def check_derivative_identities(
    x: VectorList,
    index: int,
    samples: Sequence[RatPoint]
) -> CheckReport:
    """D_x T_X = T_(X minus x) and D_x B_X = ∇_x B_(X minus x)"""
    if x.is_zero(index) or x.is_coloop(index):
        raise PreconditionError(
            'vector {} of {!r} must be non-zero and not a coloop'
            .format(index, x))
    report = CheckReport('derivative-identities')
    vector: IntVector = x[index]
    operator: MultiPoly = linear_form(vector)
    box: PiecewiseSpline = build_box(x)
    deleted_box: PiecewiseSpline = build_box(x.delete(index))
    for point in samples:
        for probe, spline in ((point, box), (point, deleted_box),
                              (shifted(point, vector), deleted_box)):
            if not is_generic(spline, probe):
                raise WallPointError(
                    'point {} lies on a wall'.format(_text(probe)))
        left = eval_box_derivative(box, operator, point, False)
        right = (
            eval_box_derivative(deleted_box, None, point, False) -
            eval_box_derivative(
                deleted_box, None, shifted(point, vector), False)
        )
        report.record(left == right, spline='box', point=_text(point),
                      derivative=left, difference=right)

    normalized: VectorList = build_multivariate(x).source
    position: int = next(
        j for j, vec in enumerate(normalized)
        if vec == vector or vec == tuple(-v for v in vector)
    )
    multivariate: PiecewiseSpline = build_multivariate(normalized)
    deleted: PiecewiseSpline = build_multivariate(normalized.delete(position))
    operator = linear_form(normalized[position])
    for point in samples:
        if not is_generic(multivariate, point):
            continue
        left = eval_multivariate(multivariate, point, operator)
        right = eval_multivariate(deleted, point)
        report.record(left == right, spline='multivariate',
                      point=_text(point), derivative=left, deleted=right)
    return report


def check_cardinal(max_n: int) -> CheckReport:
    """Closed forms against the general engine on X_(N+1) = (1, ..., 1)"""
    report = CheckReport('cardinal')
    previous = None
    for n in range(1, max_n + 1):
        ones = VectorList(1, [(1, )] * (n + 1))
        spline: PiecewiseSpline = build_box(ones)
        for j in range(2 * (n + 1) + 1):
            u = Fraction(j, 2)
            closed: Fraction = cardinal_bspline(n + 1, u)
            engine: Fraction = eval_box_derivative(spline, None, (u, ))
            report.record(closed == engine, n=n, point=str(u),
                          closed_form=closed, engine=engine)
        matrix = cardinal_matrix(n)
        for i in range(1, n + 1):
            operator: MultiPoly = MultiPoly(1, {(i - 1, ): 1})
            for j in range(1, n + 1):
                engine = eval_box_derivative(spline, operator, (j, ))
                report.record(engine == matrix.entry(i, j), n=n, row=i,
                              column=j, matrix=matrix.entry(i, j),
                              engine=engine)
        if previous is not None:
            report.record(matrix.follows_recursion(previous), n=n,
                          recursion=False)
        previous = matrix
    return report


def check_oracle(
    x: VectorList,
    count: int,
    rng: np.random.Generator,
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = 0,
    sigmas: float = DEFAULT_SIGMAS
) -> CheckReport:
    """Symbolic T_X against a Monte Carlo fiber volume within `sigmas` σ"""
    report = CheckReport('monte-carlo')
    spline: PiecewiseSpline = build_multivariate(x)
    checked: int = 0
    while checked < count:
        weights: List[Fraction] = [
            Fraction(int(w), DENOMINATOR)
            for w in rng.integers(1, DENOMINATOR, size=len(spline.source),
                                  endpoint=True)
        ]
        point: RatPoint = tuple(
            sum((w * vec[j] for w, vec in zip(weights, spline.source)),
                Fraction(0))
            for j in range(spline.dim)
        )
        if not is_generic(spline, point):
            continue
        checked += 1
        exact: Fraction = eval_multivariate(spline, point)
        estimate = fiber_volume(spline.source, point, samples, seed + checked)
        report.record(
            estimate.agrees(exact, sigmas), point=_text(point), exact=exact,
            estimate=estimate.estimate, stderr=estimate.stderr)
    return report
