from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from ..models.errors import ConsistencyError
from ..models.rat_matrix import RatMatrix, RatVector
from ..models.spline import Arrangement, SignVector, Tope
from ..models.vector_list import IntVector
from .linalg import dot, nullspace, primitive, rank, sign
from .zonotope import hyperplane_normals


def _restrict(
    normals: Tuple[IntVector, ...],
    index: int,
    dim: int
) -> Tuple[IntVector, ...]:
    """Normals of the arrangement induced on the hyperplane `index`"""
    basis: List[RatVector] = nullspace(
        RatMatrix.from_rows([normals[index]], dim))
    restricted: List[IntVector] = []
    for pos, normal in enumerate(normals):
        if pos == index:
            continue
        image: IntVector = primitive([dot(b, normal) for b in basis])
        if any(image) and image not in restricted:
            restricted.append(image)
    return tuple(restricted)


@lru_cache(maxsize=None)
def region_count(normals: Tuple[IntVector, ...], dim: int) -> int:
    """Number of regions of a central arrangement

    Deletion-restriction: r(A) = r(A minus H) + r(A restricted to H).
    """
    if not normals:
        return 1
    return (
        region_count(normals[1:], dim) +
        region_count(_restrict(normals, 0, dim), dim - 1)
    )


def extreme_rays(
    normals: Sequence[IntVector],
    dim: int
) -> List[IntVector]:
    """Both directions of every one-dimensional flat of the arrangement"""
    lines: List[IntVector] = []
    for subset in combinations(normals, dim - 1):
        rows = RatMatrix.from_rows(subset, dim)
        if rank(rows) != dim - 1:
            continue
        line: IntVector = primitive(nullspace(rows)[0])
        if line not in lines:
            lines.append(line)
    rays: List[IntVector] = []
    for line in lines:
        rays.append(line)
        rays.append(tuple(-v for v in line))
    return rays


def enumerate_topes(
    normals: Sequence[IntVector],
    dim: int
) -> List[Tope]:
    """All topes of an essential central arrangement, sorted by signs

    Each tope contains the sum of d independent extreme rays of its
    closure, so sums of d rays that avoid every wall reach every tope.
    The result is certified against the deletion-restriction count.
    """
    if dim == 0:
        return [Tope((), (), ())]
    rays: List[IntVector] = extreme_rays(normals, dim)
    samples: Dict[SignVector, IntVector] = {}
    for combo in combinations(rays, dim):
        point: IntVector = tuple(sum(coords) for coords in zip(*combo))
        signs: SignVector = tuple(
            sign(dot(normal, point)) for normal in normals)
        if 0 not in signs and signs not in samples:
            samples[signs] = point
    topes: List[Tope] = []
    for signs in sorted(samples, reverse=True):
        tope_rays: List[IntVector] = [
            ray for ray in rays
            if all(s * dot(n, ray) >= 0 for s, n in zip(signs, normals))
        ]
        topes.append(Tope(signs, samples[signs], tope_rays))
    expected: int = region_count(tuple(normals), dim)
    if len(topes) != expected:
        raise ConsistencyError(
            'found {} topes but the arrangement has {} regions'
            .format(len(topes), expected)
        )
    return topes


@lru_cache(maxsize=None)
def build_arrangement(
    vectors: Tuple[IntVector, ...],
    dim: int
) -> Arrangement:
    """The arrangement of hyperplanes spanned by rank d-1 sublists"""
    normals: List[IntVector] = hyperplane_normals(vectors, dim)
    return Arrangement(dim, normals, enumerate_topes(normals, dim))
