from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from more_itertools import map_reduce

from ..models.errors import (
    ConsistencyError, PreconditionError, SupportError
)
from ..models.grid_function import GridFunction
from ..models.interpolant import Interpolant
from ..models.multi_poly import MultiPoly, product_form
from ..models.pspace_basis import PSpaceBasis
from ..models.rat_matrix import RatMatrix, Scalar
from ..models.report import CheckReport
from ..models.spline import PiecewiseSpline
from ..models.vector_list import Contraction, IntVector, VectorList
from ..models.zonotope import LatticePointSet
from .cardinal import cardinal_matrix
from .linalg import SolveOutcome, solve
from .pspace import internal_space, multiply_embed, project_section
from .spline import build_box, eval_box_derivative
from .zonotope import interior_lattice_points


def _require_interpolation_input(x: VectorList) -> None:
    x.require_spanning()
    x.require_totally_unimodular()


def gamma(x: VectorList, poly: MultiPoly) -> GridFunction:
    """γ_X(p): z -> p(D)B_X(z) on Z_-(X)

    Raises MembershipError unless p lies in P_-(X).
    """
    _require_interpolation_input(x)
    internal_space(x).coordinates(poly)
    spline: PiecewiseSpline = build_box(x)
    return GridFunction(x.dim, {
        point: eval_box_derivative(spline, poly, point, False)
        for point in interior_lattice_points(x)
    })


def nabla(f: GridFunction, vector: Sequence[int]) -> GridFunction:
    """∇_x f(z) = f(z) - f(z - x)"""
    if len(vector) != f.dim:
        raise ValueError(
            'shift {!r} does not have {} coordinates'
            .format(tuple(vector), f.dim)
        )
    moved: Dict[IntVector, Fraction] = {
        tuple(p + v for p, v in zip(point, vector)): value
        for point, value in f.values.items()
    }
    return f - GridFunction(f.dim, moved)


def _fiber_key(
    contraction: Contraction
) -> Callable[[Tuple[IntVector, Fraction]], IntVector]:
    def key(item: Tuple[IntVector, Fraction]) -> IntVector:
        return contraction.project(item[0])
    return key


def _value(item: Tuple[IntVector, Fraction]) -> Fraction:
    return item[1]


def sigma(f: GridFunction, contraction: Contraction) -> GridFunction:
    """Σ_x f(z̄): fiber sums of f, in quotient coordinates"""
    sums = map_reduce(
        f.values.items(), _fiber_key(contraction), _value, sum)
    return GridFunction(contraction.child.dim, sums)


def inverse_nabla(g: GridFunction, contraction: Contraction) -> GridFunction:
    """The finitely supported h with ∇_x h = g

    h(z) = Σ_(k >= 0) g(z - kx) is a prefix sum along every fiber; a fiber
    whose total is non-zero has no finitely supported preimage.
    """
    vector: IntVector = contraction.pivot
    fibers = map_reduce(g.values.items(), _fiber_key(contraction))
    values: Dict[IntVector, Fraction] = {}
    for image, items in fibers.items():
        ordered = sorted(
            items, key=lambda item: contraction.fiber_coordinate(item[0]))
        start: IntVector = ordered[0][0]
        length: int = (
            contraction.fiber_coordinate(ordered[-1][0]) -
            contraction.fiber_coordinate(start)
        )
        running: Fraction = Fraction(0)
        for k in range(length + 1):
            point: IntVector = tuple(s + k * v for s, v in zip(start, vector))
            running += g[point]
            values[point] = running
        if running != 0:
            raise ConsistencyError(
                'fiber {} of {!r} sums to {}; it is not in the image of ∇_x'
                .format(list(image), g, running)
            )
    return GridFunction(g.dim, values)


def check_support(x: VectorList, f: GridFunction) -> LatticePointSet:
    """Z_-(X), after checking that f is supported there"""
    if f.dim != x.dim:
        raise ValueError(
            'grid function on Z^{} for a list in R^{}'.format(f.dim, x.dim))
    interior: LatticePointSet = interior_lattice_points(x)
    outside: List[IntVector] = [
        point for point in f.support if point not in interior]
    if outside:
        raise SupportError(outside)
    return interior


def _certify(
    x: VectorList,
    poly: MultiPoly,
    f: GridFunction
) -> Interpolant:
    internal: PSpaceBasis = internal_space(x)
    coords: List[Fraction] = internal.coordinates(poly)
    attained: GridFunction = gamma(x, poly)
    if attained != f:
        raise ConsistencyError(
            'interpolant {} attains {!r} instead of {!r}'
            .format(poly, attained, f)
        )
    certificate: List[Tuple[IntVector, Fraction]] = [
        (point, attained[point]) for point in interior_lattice_points(x)
    ]
    return Interpolant(poly, certificate, coords)


def collocation_matrix(x: VectorList) -> RatMatrix:
    """A_ji = (basis_i(D)B_X)(z_j) over sorted Z_-(X) and the internal basis"""
    spline: PiecewiseSpline = build_box(x)
    basis: List[MultiPoly] = internal_space(x).basis
    points: LatticePointSet = interior_lattice_points(x)
    if len(basis) != len(points):
        raise ConsistencyError(
            'dim P_-(X) = {} but |Z_-(X)| = {} for {!r}'
            .format(len(basis), len(points), x)
        )
    return RatMatrix.from_rows([
        [eval_box_derivative(spline, poly, point, False) for poly in basis]
        for point in points
    ], len(basis))


def solve_direct(x: VectorList, f: GridFunction) -> Interpolant:
    _require_interpolation_input(x)
    points: LatticePointSet = check_support(x, f)
    internal: PSpaceBasis = internal_space(x)
    if not len(points):
        return _certify(x, MultiPoly.zero(x.dim), f)
    matrix: RatMatrix = collocation_matrix(x)
    coords = solve(matrix, [f[point] for point in points])
    if isinstance(coords, SolveOutcome):
        raise ConsistencyError(
            'collocation matrix of {!r} is singular'.format(x))
    return _certify(x, internal.combine(coords), f)


def default_pivot(x: VectorList) -> int:
    """First non-zero vector that is not a coloop"""
    for index in range(len(x)):
        if not x.is_zero(index) and not x.is_coloop(index):
            return index
    raise PreconditionError(
        '{!r} has no vector that is both non-zero and not a coloop'
        .format(x))


def _solve_cardinal(x: VectorList, f: GridFunction) -> MultiPoly:
    """One-dimensional case: Σ_i λ_i D^(i-1) B_X'(j) = f(t + j)

    X' is the sign-normalized list of N + 1 unit vectors and t its
    translation.
    """
    normalized = x.sign_normalize()
    n: int = len(normalized.normalized) - 1
    offset: int = normalized.translation[0]
    system: RatMatrix = cardinal_matrix(n).entries.transpose()
    coords = solve(system, [f[(offset + j, )] for j in range(1, n + 1)])
    if isinstance(coords, SolveOutcome):
        raise ConsistencyError(
            'cardinal matrix M^{} is singular'.format(n))
    return MultiPoly(1, {(i, ): coef for i, coef in enumerate(coords)})


def _recurse(
    x: VectorList,
    f: GridFunction,
    pivot: Optional[int]
) -> MultiPoly:
    if x.dim == 0:
        return MultiPoly.constant(0, f[()])
    if x.has_coloop() or not len(interior_lattice_points(x)):
        return MultiPoly.zero(x.dim)
    if x.dim == 1:
        return _solve_cardinal(x, f)

    index: int = default_pivot(x) if pivot is None else pivot
    contraction: Contraction = x.contract(index)
    q_bar: MultiPoly = _recurse(contraction.child, sigma(f, contraction), None)

    internal: PSpaceBasis = internal_space(x)
    section = project_section(internal, contraction)
    q: MultiPoly = internal.combine(
        section.lift(section.target.coordinates(q_bar)))

    g: GridFunction = f - gamma(x, q)
    if not sigma(g, contraction).is_zero():
        raise ConsistencyError(
            'f - γ_X(q) is not in the kernel of Σ_x for {!r}'.format(x))
    deleted: VectorList = x.delete(index)
    h: GridFunction = inverse_nabla(g, contraction)
    interior: LatticePointSet = interior_lattice_points(deleted)
    outside: List[IntVector] = [
        point for point in h.support if point not in interior]
    if outside:
        raise ConsistencyError(
            '∇_x preimage is supported outside Z_-(X minus x) at {}'
            .format([list(point) for point in outside])
        )
    r: MultiPoly = _recurse(deleted, h, None)
    return q + r * product_form([x[index]], x.dim)


def solve_recursive(
    x: VectorList,
    f: GridFunction,
    pivot: Optional[int] = None
) -> Interpolant:
    """Interpolant by deletion and contraction

    `pivot` chooses the vector of the top-level step; deeper steps take
    the first non-zero vector that is not a coloop.
    """
    _require_interpolation_input(x)
    check_support(x, f)
    if pivot is not None and (x.is_zero(pivot) or x.is_coloop(pivot)):
        raise PreconditionError(
            'pivot {} of {!r} must be non-zero and not a coloop'
            .format(pivot, x))
    return _certify(x, _recurse(x, f, pivot), f)


def random_grid_function(
    x: VectorList,
    rng: np.random.Generator
) -> GridFunction:
    """Random small rationals on Z_-(X)"""
    return GridFunction(x.dim, {
        point: Fraction(
            int(rng.integers(-9, 9, endpoint=True)),
            int(rng.integers(1, 9, endpoint=True)))
        for point in interior_lattice_points(x)
    })


def check_commutativity(x: VectorList, index: int) -> CheckReport:
    """γ_X(p_x·p) = ∇_x γ_(X minus x)(p) and Σ_x γ_X(p) = γ_(X/x)(π p)"""
    _require_interpolation_input(x)
    if x.is_zero(index) or x.is_coloop(index):
        raise PreconditionError(
            'vector {} of {!r} must be non-zero and not a coloop'
            .format(index, x))
    report = CheckReport('commutativity')
    vector: IntVector = x[index]
    deleted: VectorList = x.delete(index)
    deleted_space: PSpaceBasis = internal_space(deleted)
    internal: PSpaceBasis = internal_space(x)
    embedded: List[MultiPoly] = multiply_embed(deleted_space, vector, internal)
    for poly, image in zip(deleted_space.basis, embedded):
        report.record(
            gamma(x, image) == nabla(gamma(deleted, poly), vector),
            square='deletion', poly=str(poly))

    contraction: Contraction = x.contract(index)
    for poly in internal.basis:
        projected: MultiPoly = poly.project_vars(contraction.quotient_map)
        report.record(
            sigma(gamma(x, poly), contraction) ==
            gamma(contraction.child, projected),
            square='contraction', poly=str(poly))
    return report


def check_linearity(
    x: VectorList,
    f: GridFunction,
    g: GridFunction,
    alpha: Scalar,
    beta: Scalar
) -> CheckReport:
    report = CheckReport('linearity')
    combined: MultiPoly = solve_direct(
        x, f.scale(alpha) + g.scale(beta)).poly
    expected: MultiPoly = (
        solve_direct(x, f).poly.scale(alpha) +
        solve_direct(x, g).poly.scale(beta)
    )
    report.record(combined == expected, alpha=alpha, beta=beta,
                  combined=str(combined), expected=str(expected))
    return report
