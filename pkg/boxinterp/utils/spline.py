from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..models.errors import (
    ConsistencyError, DiscontinuityError, WallPointError
)
from ..models.multi_poly import MultiPoly, homogeneous_monomials
from ..models.rat_matrix import RatMatrix, Scalar
from ..models.spline import (
    Arrangement, PiecewiseSpline, SplineKind, Tope, shifted
)
from ..models.vector_list import (
    IntVector, SignNormalization, VectorList
)
from .arrangement import build_arrangement
from .linalg import SolveOutcome, det, dot, solve

DEFAULT_HELD_OUT_POINTS = 2
DEFAULT_SEED = 0
RatPoint = Tuple[Fraction, ...]


def basis_first(x: VectorList) -> VectorList:
    """Reorder so that the first d vectors form a basis"""
    chosen: List[int] = []
    for idx in range(len(x)):
        trial: List[int] = chosen + [idx]
        if x.sublist(trial).rank() == len(trial):
            chosen = trial
            if len(chosen) == x.dim:
                break
    rest: List[int] = [i for i in range(len(x)) if i not in chosen]
    return x.sublist(chosen + rest)


def _restrict_to_ray(
    piece: MultiPoly,
    point: Sequence[Scalar],
    vector: Sequence[int]
) -> MultiPoly:
    """t ↦ piece(point - t·vector) as a univariate polynomial"""
    images: List[MultiPoly] = [
        MultiPoly(1, {(0, ): p, (1, ): -v}) for p, v in zip(point, vector)
    ]
    return piece.compose(images)


def ray_integral(
    arrangement: Arrangement,
    pieces: List[MultiPoly],
    point: Sequence[Scalar],
    vector: Sequence[int]
) -> Fraction:
    """∫_0^∞ f(point - t·vector) dt for the piecewise polynomial f

    The point must avoid every wall. Segments between consecutive wall
    crossings are classified by their midpoints; the unbounded last
    segment has to lie in a zero piece.
    """
    crossings: List[Fraction] = sorted({
        Fraction(dot(normal, point)) / dot(normal, vector)
        for normal in arrangement.normals
        if dot(normal, vector) != 0
    })
    bounds: List[Fraction] = [Fraction(0)] + [t for t in crossings if t > 0]
    total: Fraction = Fraction(0)
    for lower, upper in zip(bounds, bounds[1:]):
        middle: RatPoint = shifted(point, vector, -(lower + upper) / 2)
        _, piece = _piece_at(arrangement, pieces, middle)
        if not piece.is_zero():
            total += _restrict_to_ray(piece, point, vector).integrate(
                lower, upper)
    tail: RatPoint = shifted(point, vector, -(bounds[-1] + 1))
    _, piece = _piece_at(arrangement, pieces, tail)
    if not piece.is_zero():
        raise ConsistencyError(
            'ray from {} along {} never leaves the support'
            .format([str(p) for p in point], list(vector))
        )
    return total


def _piece_at(
    arrangement: Arrangement,
    pieces: List[MultiPoly],
    point: Sequence[Scalar]
) -> Tuple[int, MultiPoly]:
    idx: int = arrangement.locate(point)
    return idx, pieces[idx]


def _tope_samples(
    tope: Tope,
    count: int,
    rng: np.random.Generator,
    spread: int
) -> List[IntVector]:
    """Distinct positive integer combinations of the tope's rays"""
    samples: List[IntVector] = []
    seen = set()
    while len(samples) < count:
        weights: List[int] = [
            int(w) for w in rng.integers(1, spread, size=len(tope.rays),
                                         endpoint=True)
        ]
        point: IntVector = tuple(
            sum(w * ray[j] for w, ray in zip(weights, tope.rays))
            for j in range(len(tope.sample))
        )
        if point not in seen:
            seen.add(point)
            samples.append(point)
        else:
            spread += 1
    return samples


def _base_pieces(
    basis: VectorList,
    arrangement: Arrangement
) -> List[MultiPoly]:
    """T_C = χ_cone(C) / |det C| on the topes of a basis"""
    matrix: RatMatrix = basis.matrix
    value: Fraction = 1 / abs(det(matrix))
    pieces: List[MultiPoly] = []
    for tope in arrangement.topes:
        coords = solve(matrix, tope.sample)
        assert not isinstance(coords, SolveOutcome)
        inside: bool = all(c > 0 for c in coords)
        pieces.append(MultiPoly.constant(
            basis.dim, value if inside else 0))
    return pieces


def _monomial_value(exps: Sequence[int], point: IntVector) -> int:
    value: int = 1
    for p, e in zip(point, exps):
        value *= p ** e
    return value


def _reconstruct(
    tope: Tope,
    degree: int,
    evaluate_at: 'SampleEvaluator',
    rng: np.random.Generator,
    held_out: int
) -> MultiPoly:
    """Interpolate a homogeneous piece from exact point values

    The system is overdetermined by `held_out` points; an inconsistent
    system means the values are not polynomial on the tope.
    """
    dim: int = len(tope.sample)
    monomials = homogeneous_monomials(dim, degree)
    count: int = len(monomials) + held_out
    spread: int = 3
    while True:
        points: List[IntVector] = _tope_samples(tope, count, rng, spread)
        matrix = RatMatrix.from_rows([
            [_monomial_value(e, pt) for e in monomials]
            for pt in points
        ], len(monomials))
        values: List[Fraction] = [evaluate_at(pt) for pt in points]
        coefs = solve(matrix, values)
        if coefs is SolveOutcome.NO_SOLUTION:
            raise ConsistencyError(
                'values on tope {} are not a homogeneous polynomial of '
                'degree {}'.format(tope.sign_text(), degree)
            )
        if coefs is SolveOutcome.NON_UNIQUE:
            count += len(monomials)
            spread *= 2
            continue
        assert not isinstance(coefs, SolveOutcome)
        return MultiPoly.from_coefficients(dim, monomials, coefs)


class SampleEvaluator:
    """Exact values of T_(X ∪ x) through one ray integral against T_X"""

    def __init__(
        self: 'SampleEvaluator',
        arrangement: Arrangement,
        pieces: List[MultiPoly],
        vector: IntVector
    ) -> None:
        self.arrangement = arrangement
        self.pieces = pieces
        self.vector = vector

    def __call__(self: 'SampleEvaluator', point: IntVector) -> Fraction:
        return ray_integral(
            self.arrangement, self.pieces, point, self.vector)


@lru_cache(maxsize=None)
def build_multivariate(
    x: VectorList,
    held_out: int = DEFAULT_HELD_OUT_POINTS,
    seed: int = DEFAULT_SEED
) -> PiecewiseSpline:
    """T_X by successive one-dimensional convolutions

    Vectors are sign-normalized first (zeros dropped), a basis is moved to
    the front, and every further vector refines the arrangement; each new
    piece is rebuilt from exact ray integrals of the previous pieces.
    """
    x.require_spanning()
    normalization: SignNormalization = x.sign_normalize()
    ordered: VectorList = basis_first(normalization.normalized)
    dim: int = x.dim
    rng = np.random.default_rng(seed)

    arrangement: Arrangement = build_arrangement(ordered.vectors[:dim], dim)
    pieces: List[MultiPoly] = _base_pieces(
        ordered.sublist(range(dim)), arrangement)
    for k in range(dim, len(ordered)):
        vector: IntVector = ordered[k]
        evaluator = SampleEvaluator(arrangement, pieces, vector)
        arrangement = build_arrangement(ordered.vectors[:k + 1], dim)
        pieces = [
            _reconstruct(tope, k + 1 - dim, evaluator, rng, held_out)
            for tope in arrangement.topes
        ]
    return PiecewiseSpline(
        SplineKind.MULTIVARIATE, x, ordered, arrangement, pieces,
        normalization.translation, x.generic_functional()
    )


def box_shifts(x: VectorList) -> List[Tuple[IntVector, int]]:
    """Σ_S (-1)^|S| δ(a_S), with equal shifts merged and zeros dropped"""
    shifts: Dict[IntVector, int] = {(0, ) * x.dim: 1}
    for vector in x:
        merged: Dict[IntVector, int] = dict(shifts)
        for point, coef in shifts.items():
            moved: IntVector = tuple(p + v for p, v in zip(point, vector))
            merged[moved] = merged.get(moved, 0) - coef
        shifts = {p: c for p, c in merged.items() if c}
    return sorted(shifts.items())


@lru_cache(maxsize=None)
def build_box(x: VectorList) -> PiecewiseSpline:
    multivariate: PiecewiseSpline = build_multivariate(x)
    return PiecewiseSpline(
        SplineKind.BOX, x, multivariate.source, multivariate.arrangement,
        multivariate.pieces, multivariate.translation,
        multivariate.functional, box_shifts(multivariate.source)
    )


def _differentiated(
    spline: PiecewiseSpline,
    poly: Optional[MultiPoly],
    cache: Dict[int, MultiPoly],
    idx: int
) -> MultiPoly:
    if idx not in cache:
        piece: MultiPoly = spline.pieces[idx]
        cache[idx] = piece if poly is None else poly.apply_diff(piece)
    return cache[idx]


def _check_operator(
    spline: PiecewiseSpline,
    poly: Optional[MultiPoly]
) -> None:
    if poly is not None and poly.nvars != spline.dim:
        raise ValueError(
            'operator in {} variables applied to a spline on R^{}'
            .format(poly.nvars, spline.dim)
        )


def eval_multivariate(
    spline: PiecewiseSpline,
    point: Sequence[Scalar],
    poly: Optional[MultiPoly] = None,
    direction: Optional[Sequence[Scalar]] = None
) -> Fraction:
    """p(D)T_X at a point of the normalized list's cone

    Wall points take the limit along `direction`, which defaults to the
    arrangement's generic perturbation.
    """
    _check_operator(spline, poly)
    _, piece = spline.piece_at(point, direction)
    if poly is not None:
        piece = poly.apply_diff(piece)
    return piece.evaluate(point)


def _box_sum(
    spline: PiecewiseSpline,
    poly: Optional[MultiPoly],
    local: RatPoint,
    direction: Sequence[Scalar],
    cache: Dict[int, MultiPoly]
) -> Fraction:
    total: Fraction = Fraction(0)
    for offset, coef in spline.shifts:
        moved: RatPoint = shifted(local, offset)
        if dot(spline.functional, moved) < 0:
            continue
        idx: int = spline.arrangement.locate(moved, direction)
        piece: MultiPoly = _differentiated(spline, poly, cache, idx)
        if not piece.is_zero():
            total += coef * piece.evaluate(moved)
    return total


def local_point(
    spline: PiecewiseSpline,
    point: Sequence[Scalar]
) -> RatPoint:
    """Coordinates of a point relative to the normalized list"""
    if len(point) != spline.dim:
        raise ValueError(
            'point {!r} does not have {} coordinates'
            .format(tuple(point), spline.dim)
        )
    return shifted(point, spline.translation)


def wall_directions(
    spline: PiecewiseSpline,
    point: Sequence[Scalar]
) -> List[Tuple[int, ...]]:
    """One direction per local cell of B_X around the point

    Tope samples are deduplicated by their signs on the normals that
    vanish at some shifted copy of the point.
    """
    local: RatPoint = local_point(spline, point)
    vanishing = set()
    for offset, _ in spline.shifts:
        vanishing.update(
            spline.arrangement.vanishing(shifted(local, offset)))
    if not vanishing:
        return []
    directions: List[Tuple[int, ...]] = []
    seen = set()
    for tope in spline.arrangement.topes:
        key = tuple(tope.signs[i] for i in sorted(vanishing))
        if key not in seen:
            seen.add(key)
            directions.append(tope.sample)
    return directions


def eval_box_derivative(
    spline: PiecewiseSpline,
    poly: Optional[MultiPoly],
    point: Sequence[Scalar],
    check_continuity: bool = True
) -> Fraction:
    """p(D)B_X at a point

    B_X(u) is Σ_S (-1)^|S| T_X'(u' - a_S) with u' = u - translation. Wall
    points take the limit along the generic perturbation; with
    `check_continuity` the limits from every adjacent cell must agree.
    """
    _check_operator(spline, poly)
    local: RatPoint = local_point(spline, point)
    cache: Dict[int, MultiPoly] = {}
    value: Fraction = _box_sum(
        spline, poly, local, spline.arrangement.perturbation, cache)
    if not check_continuity:
        return value
    for direction in wall_directions(spline, point):
        limit: Fraction = _box_sum(spline, poly, local, direction, cache)
        if limit != value:
            raise DiscontinuityError(
                tuple(Fraction(p) for p in point),
                (value, limit),
                (spline.arrangement.perturbation, direction)
            )
    return value


def is_generic(spline: PiecewiseSpline, point: Sequence[Scalar]) -> bool:
    """True when no shifted copy of the point lies on a wall"""
    if spline.kind is SplineKind.MULTIVARIATE:
        return not spline.arrangement.on_wall(point)
    local: RatPoint = local_point(spline, point)
    return not any(
        spline.arrangement.on_wall(shifted(local, offset))
        for offset, _ in spline.shifts
    )


def require_generic(
    spline: PiecewiseSpline,
    point: Sequence[Scalar]
) -> None:
    if not is_generic(spline, point):
        raise WallPointError(
            'point {} lies on a wall of the {} spline of {!r}'
            .format([str(p) for p in point], spline.kind.value,
                    spline.original)
        )

