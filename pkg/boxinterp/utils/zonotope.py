from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, NamedTuple, Sequence, Tuple

from more_itertools import unique_everseen

from ..models.errors import ConsistencyError, PreconditionError
from ..models.rat_matrix import RatMatrix, RatVector, Scalar
from ..models.vector_list import Contraction, IntVector, VectorList
from ..models.zonotope import Halfspace, LatticePointSet, Zonotope
from .linalg import SolveOutcome, dot, nullspace, primitive, rank, solve


def hyperplane_normals(
    vectors: Sequence[Sequence[int]],
    dim: int
) -> List[IntVector]:
    """Primitive normals of the hyperplanes spanned by rank d-1 sublists

    Each normal is the kernel of d-1 of the vectors, scaled to coprime
    integers with a positive leading entry; duplicates are dropped.
    """
    if dim == 0:
        return []
    distinct: List[Tuple[int, ...]] = list(unique_everseen(
        tuple(v) for v in vectors if any(v)))
    normals: List[IntVector] = []
    seen = set()
    for subset in combinations(distinct, dim - 1):
        rows = RatMatrix.from_rows(subset, dim)
        if rank(rows) != dim - 1:
            continue
        kernel: List[RatVector] = nullspace(rows)
        normal: IntVector = primitive(kernel[0])
        if normal not in seen:
            seen.add(normal)
            normals.append(normal)
    return normals


@lru_cache(maxsize=None)
def hrep(x: VectorList) -> Zonotope:
    x.require_spanning()
    halfspaces: List[Halfspace] = []
    for normal in hyperplane_normals(x.vectors, x.dim):
        values: List[int] = [int(dot(normal, vec)) for vec in x]
        halfspaces.append(Halfspace(
            normal,
            sum(min(v, 0) for v in values),
            sum(max(v, 0) for v in values)
        ))
    return Zonotope(x, halfspaces)


def _scan(x: VectorList, strict: bool) -> LatticePointSet:
    zonotope: Zonotope = hrep(x)
    axes = [range(lo, hi + 1) for lo, hi in zonotope.bounding_box()]
    return LatticePointSet(
        point for point in product(*axes)
        if zonotope.contains(point, strict)
    )


@lru_cache(maxsize=None)
def interior_lattice_points(x: VectorList) -> LatticePointSet:
    """Z_-(X): lattice points strictly inside every half-space"""
    return _scan(x, strict=True)


@lru_cache(maxsize=None)
def lattice_points(x: VectorList) -> LatticePointSet:
    return _scan(x, strict=False)


def contains_by_definition(x: VectorList, point: Sequence[Scalar]) -> bool:
    """Exact test of point = Σ λ_i x_i with every λ_i in [0, 1]

    A feasible system has a basic solution: outside some basis every λ_i
    sits at 0 or 1, so the basis coordinates follow from one solve.
    """
    x.require_spanning()
    target: List[Fraction] = [Fraction(v) for v in point]
    for basis in x.bases():
        others: List[int] = [i for i in range(len(x)) if i not in basis]
        matrix = x.sublist(basis).matrix
        for bounds in product((0, 1), repeat=len(others)):
            rhs: List[Fraction] = list(target)
            for idx, bound in zip(others, bounds):
                if bound:
                    rhs = [r - v for r, v in zip(rhs, x[idx])]
            coords = solve(matrix, rhs)
            assert not isinstance(coords, SolveOutcome)
            if all(0 <= c <= 1 for c in coords):
                return True
    return False


class QuotientPair(NamedTuple):
    point: IntVector
    image: IntVector


def _check_pivot(x: VectorList, index: int) -> None:
    x.require_spanning()
    x.require_totally_unimodular()
    if x.is_zero(index):
        raise PreconditionError(
            'vector {} of {!r} is zero'.format(index, x))
    if x.is_coloop(index):
        raise PreconditionError(
            'vector {} of {!r} is a coloop'.format(index, x))


def quotient_bijection(x: VectorList, index: int) -> List[QuotientPair]:
    """Pair Z_-(X) minus Z_-(X\\x) with Z_-(X/x) through the projection

    Both injectivity and surjectivity are verified by enumeration.
    """
    _check_pivot(x, index)
    contraction: Contraction = x.contract(index)
    deleted: LatticePointSet = interior_lattice_points(x.delete(index))
    pairs: List[QuotientPair] = [
        QuotientPair(point, contraction.project(point))
        for point in interior_lattice_points(x)
        if point not in deleted
    ]
    images: Dict[IntVector, IntVector] = {}
    for pair in pairs:
        if pair.image in images:
            raise ConsistencyError(
                'points {} and {} project to the same class {}'
                .format(list(images[pair.image]), list(pair.point),
                        list(pair.image))
            )
        images[pair.image] = pair.point
    expected = set(interior_lattice_points(contraction.child))
    if set(images) != expected:
        raise ConsistencyError(
            'projection image {} differs from Z_-(X/x) {}'
            .format(sorted(images), sorted(expected))
        )
    return pairs


def shift_violations(x: VectorList, index: int) -> List[IntVector]:
    """Points z of Z_-(X) where z ∈ Z_-(X\\x) and z + x ∈ Z_-(X) disagree"""
    _check_pivot(x, index)
    interior: LatticePointSet = interior_lattice_points(x)
    deleted: LatticePointSet = interior_lattice_points(x.delete(index))
    vec: IntVector = x[index]
    violations: List[IntVector] = []
    for point in interior:
        shifted: IntVector = tuple(p + v for p, v in zip(point, vec))
        if (point in deleted) != (shifted in interior):
            violations.append(point)
    return violations
