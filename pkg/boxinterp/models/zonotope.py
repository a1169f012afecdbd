from typing import (
    Any, Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple
)

from .rat_matrix import Scalar
from .vector_list import IntVector, VectorList
from ..utils.linalg import dot


class Halfspace(NamedTuple):
    """lower <= normal·u <= upper"""
    normal: IntVector
    lower: int
    upper: int

    def contains(
        self: 'Halfspace',
        point: Sequence[Scalar],
        strict: bool = False
    ) -> bool:
        value = dot(self.normal, point)
        if strict:
            return self.lower < value < self.upper
        return self.lower <= value <= self.upper


class Zonotope:
    """Z(X) in half-space representation"""

    source: VectorList
    halfspaces: List[Halfspace]

    def __init__(
        self: 'Zonotope',
        source: VectorList,
        halfspaces: List[Halfspace]
    ) -> None:
        self.source = source
        self.halfspaces = halfspaces

    def contains(
        self: 'Zonotope',
        point: Sequence[Scalar],
        strict: bool = False
    ) -> bool:
        return all(h.contains(point, strict) for h in self.halfspaces)

    def bounding_box(self: 'Zonotope') -> List[Tuple[int, int]]:
        """Per-coordinate range [Σ min(0, x_ij), Σ max(0, x_ij)]"""
        return [
            (
                sum(min(0, vec[j]) for vec in self.source),
                sum(max(0, vec[j]) for vec in self.source)
            )
            for j in range(self.source.dim)
        ]

    def to_dict(self: 'Zonotope') -> Dict[str, Any]:
        return {
            'halfspaces': [
                {'normal': list(h.normal), 'lower': h.lower, 'upper': h.upper}
                for h in self.halfspaces
            ]
        }


class LatticePointSet:
    """Sorted, duplicate-free set of integer points"""

    points: Tuple[IntVector, ...]

    def __init__(
        self: 'LatticePointSet',
        points: Iterable[Sequence[int]]
    ) -> None:
        self.points = tuple(sorted({tuple(pt) for pt in points}))

    def __len__(self: 'LatticePointSet') -> int:
        return len(self.points)

    def __iter__(self: 'LatticePointSet') -> Iterator[IntVector]:
        return iter(self.points)

    def __contains__(self: 'LatticePointSet', point: object) -> bool:
        if not isinstance(point, tuple):
            return False
        return point in self.points

    def __eq__(self: 'LatticePointSet', other: object) -> bool:
        if not isinstance(other, LatticePointSet):
            return NotImplemented
        return self.points == other.points

    def __repr__(self: 'LatticePointSet') -> str:
        return '<LatticePointSet {}>'.format([list(p) for p in self.points])

    def to_dict(self: 'LatticePointSet') -> Dict[str, Any]:
        return {'points': [list(p) for p in self.points]}
