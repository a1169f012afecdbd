from fractions import Fraction
from itertools import combinations
from typing import (
    Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple
)

from .errors import NonSpanningError, NotTotallyUnimodularError
from .rat_matrix import RatMatrix
from ..utils.linalg import rank, det, dot
from ..utils.unimodular import (
    IntMatrix, Violation, find_tu_violation, unimodular_completion
)

IntVector = Tuple[int, ...]


class VectorList:
    """The list X = (x_1, ..., x_N) of integer vectors in Z^d

    Duplicates are allowed and the order is significant. The list does not
    need to span; operations that require spanning check it themselves.
    """

    dim: int
    vectors: Tuple[IntVector, ...]

    def __init__(
        self: 'VectorList',
        dim: int,
        vectors: Sequence[Sequence[int]] = ()
    ) -> None:
        if dim < 0:
            raise ValueError('dimension must be non-negative: {}'.format(dim))
        normalized: List[IntVector] = []
        for vec in vectors:
            if len(vec) != dim:
                raise ValueError(
                    'vector {!r} does not have {} coordinates'
                    .format(tuple(vec), dim)
                )
            if not all(
                isinstance(v, int) and not isinstance(v, bool) for v in vec
            ):
                raise ValueError(
                    'vector {!r} has non-integer coordinates'
                    .format(tuple(vec))
                )
            normalized.append(tuple(int(v) for v in vec))
        self.dim = dim
        self.vectors = tuple(normalized)
        self._rank: Optional[int] = None
        self._tu_violation: Optional[Tuple[Optional[Violation]]] = None

    def __len__(self: 'VectorList') -> int:
        return len(self.vectors)

    def __iter__(self: 'VectorList') -> Iterator[IntVector]:
        return iter(self.vectors)

    def __getitem__(self: 'VectorList', index: int) -> IntVector:
        return self.vectors[index]

    def __eq__(self: 'VectorList', other: object) -> bool:
        if not isinstance(other, VectorList):
            return NotImplemented
        return self.dim == other.dim and self.vectors == other.vectors

    def __hash__(self: 'VectorList') -> int:
        return hash((self.dim, self.vectors))

    def __repr__(self: 'VectorList') -> str:
        return '<VectorList dim={} {}>'.format(
            self.dim, [list(v) for v in self.vectors])

    def to_dict(self: 'VectorList') -> Dict[str, Any]:
        return {'dim': self.dim, 'vectors': [list(v) for v in self.vectors]}

    @property
    def matrix(self: 'VectorList') -> RatMatrix:
        """The d×N matrix whose columns are the vectors"""
        if not self.vectors:
            return RatMatrix.zeros(self.dim, 0)
        return RatMatrix.from_columns(self.vectors, self.dim)

    def _check_index(self: 'VectorList', index: int) -> None:
        if not 0 <= index < len(self.vectors):
            raise IndexError(
                'vector index {} out of range for a list of {} vectors'
                .format(index, len(self.vectors))
            )

    def rank(self: 'VectorList') -> int:
        if self._rank is None:
            self._rank = rank(self.matrix)
        return self._rank

    def spans(self: 'VectorList') -> bool:
        return self.rank() == self.dim

    def require_spanning(self: 'VectorList') -> None:
        if not self.spans():
            raise NonSpanningError(
                'the vector list {!r} does not span R^{} (rank {})'
                .format(self, self.dim, self.rank())
            )

    def sublist(self: 'VectorList', indices: Sequence[int]) -> 'VectorList':
        return VectorList(self.dim, [self.vectors[i] for i in indices])

    def delete(self: 'VectorList', index: int) -> 'VectorList':
        self._check_index(index)
        return VectorList(
            self.dim, self.vectors[:index] + self.vectors[index + 1:])

    def append(self: 'VectorList', vector: Sequence[int]) -> 'VectorList':
        return VectorList(self.dim, self.vectors + (tuple(vector), ))

    def scale(self: 'VectorList', index: int, factor: int) -> 'VectorList':
        """Multiply one vector by an integer factor"""
        self._check_index(index)
        vectors: List[IntVector] = list(self.vectors)
        vectors[index] = tuple(factor * v for v in vectors[index])
        return VectorList(self.dim, vectors)

    def is_zero(self: 'VectorList', index: int) -> bool:
        self._check_index(index)
        return not any(self.vectors[index])

    def is_coloop(self: 'VectorList', index: int) -> bool:
        self._check_index(index)
        return self.delete(index).rank() < self.rank()

    def has_coloop(self: 'VectorList') -> bool:
        return any(self.is_coloop(i) for i in range(len(self.vectors)))

    def without_zeros(self: 'VectorList') -> 'VectorList':
        return VectorList(self.dim, [v for v in self.vectors if any(v)])

    def tu_violation(self: 'VectorList') -> Optional[Violation]:
        if self._tu_violation is None:
            self._tu_violation = (
                find_tu_violation(self.vectors, self.dim), )
        return self._tu_violation[0]

    def is_totally_unimodular(self: 'VectorList') -> bool:
        return self.tu_violation() is None

    def require_totally_unimodular(self: 'VectorList') -> None:
        violation: Optional[Violation] = self.tu_violation()
        if violation is not None:
            raise NotTotallyUnimodularError(*violation)

    def bases(self: 'VectorList') -> List[Tuple[int, ...]]:
        """Index tuples of all bases that can be selected from the list"""
        result: List[Tuple[int, ...]] = []
        for indices in combinations(range(len(self.vectors)), self.dim):
            if det(self.sublist(indices).matrix) != 0:
                result.append(indices)
        return result

    def volume(self: 'VectorList') -> Fraction:
        """Volume of the zonotope: sum of |det| over all bases"""
        return sum(
            (abs(det(self.sublist(basis).matrix)) for basis in self.bases()),
            Fraction(0)
        )

    def generic_functional(self: 'VectorList') -> IntVector:
        """Deterministic ℓ = (1, M, M², ...) with ℓ·x ≠ 0 for non-zero x"""
        return generic_functional(self.vectors, self.dim)

    def sign_normalize(self: 'VectorList') -> 'SignNormalization':
        """Flip vectors onto the positive side of a generic functional

        Zero vectors are dropped. The returned translation is the sum of the
        original vectors that were flipped, so that
        Z(X) = Z(X') + translation and B_X(u) = B_X'(u - translation).
        """
        ell: IntVector = self.generic_functional()
        normalized: List[IntVector] = []
        translation: List[int] = [0] * self.dim
        zeros: int = 0
        for vec in self.vectors:
            if not any(vec):
                zeros += 1
                continue
            if dot(ell, vec) < 0:
                translation = [t + v for t, v in zip(translation, vec)]
                vec = tuple(-v for v in vec)
            normalized.append(vec)
        return SignNormalization(
            VectorList(self.dim, normalized), tuple(translation), zeros)

    def contract(self: 'VectorList', index: int) -> 'Contraction':
        self._check_index(index)
        if self.is_zero(index):
            raise ValueError(
                'cannot contract the zero vector at index {}'.format(index))
        return Contraction(self, index)


class SignNormalization(NamedTuple):
    normalized: VectorList
    translation: IntVector
    dropped_zeros: int


class Contraction:
    """X/x in integral coordinates on the quotient lattice Λ/x

    `unimodular_map` is an integer matrix T with |det T| = 1 and
    T·x = e_d; the first d - 1 rows of T form `quotient_map`, which sends
    Λ onto Λ/x ≅ Z^(d-1).
    """

    parent: VectorList
    pivot_index: int
    unimodular_map: IntMatrix
    child: VectorList

    def __init__(
        self: 'Contraction',
        parent: VectorList,
        pivot_index: int
    ) -> None:
        self.parent = parent
        self.pivot_index = pivot_index
        self.unimodular_map = unimodular_completion(parent[pivot_index])
        self.child = VectorList(
            parent.dim - 1,
            [self.project(vec) for vec in parent.delete(pivot_index)]
        )

    @property
    def pivot(self: 'Contraction') -> IntVector:
        return self.parent[self.pivot_index]

    @property
    def quotient_map(self: 'Contraction') -> IntMatrix:
        return self.unimodular_map[:-1]

    def project(self: 'Contraction', point: Sequence[int]) -> IntVector:
        """Class of a lattice point in quotient coordinates"""
        return tuple(int(dot(row, point)) for row in self.quotient_map)

    def project_rational(
        self: 'Contraction',
        point: Sequence[Fraction]
    ) -> Tuple[Fraction, ...]:
        return tuple(
            Fraction(dot(row, point)) for row in self.quotient_map)

    def fiber_coordinate(self: 'Contraction', point: Sequence[int]) -> int:
        """Coordinate of a lattice point along the contracted vector"""
        return int(dot(self.unimodular_map[-1], point))

    def __repr__(self: 'Contraction') -> str:
        return '<Contraction of {!r} at {} -> {!r}>'.format(
            self.parent, self.pivot_index, self.child)


def generic_functional(
    vectors: Sequence[Sequence[int]],
    dim: int
) -> IntVector:
    magnitude: int = 1 + max(
        (abs(v) for vec in vectors for v in vec), default=0)
    while True:
        ell: IntVector = tuple(magnitude ** k for k in range(dim))
        if all(dot(ell, vec) != 0 for vec in vectors if any(vec)):
            return ell
        magnitude += 1
