from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import ConsistencyError
from .multi_poly import MultiPoly
from .rat_matrix import Scalar
from .vector_list import IntVector, VectorList, generic_functional
from ..utils.linalg import dot, sign

SignVector = Tuple[int, ...]


class Tope:
    """An open cone of the complement of a central arrangement

    `sample` is an integer point inside the cone and `rays` are the
    extreme rays of its closure.
    """

    signs: SignVector
    sample: IntVector
    rays: Tuple[IntVector, ...]

    def __init__(
        self: 'Tope',
        signs: SignVector,
        sample: IntVector,
        rays: Sequence[IntVector]
    ) -> None:
        self.signs = signs
        self.sample = sample
        self.rays = tuple(rays)

    def sign_text(self: 'Tope') -> str:
        return ''.join('+' if s > 0 else '-' for s in self.signs)

    def __repr__(self: 'Tope') -> str:
        return '<Tope {} sample={}>'.format(
            self.sign_text(), list(self.sample))


class Arrangement:
    dim: int
    normals: List[IntVector]
    topes: List[Tope]
    perturbation: IntVector

    def __init__(
        self: 'Arrangement',
        dim: int,
        normals: List[IntVector],
        topes: List[Tope]
    ) -> None:
        self.dim = dim
        self.normals = normals
        self.topes = topes
        self.perturbation = generic_functional(normals, dim)
        self._index: Dict[SignVector, int] = {
            tope.signs: idx for idx, tope in enumerate(topes)}

    def signs_of(
        self: 'Arrangement',
        point: Sequence[Scalar],
        direction: Optional[Sequence[Scalar]] = None
    ) -> SignVector:
        """Sign vector of point + δ·direction for small δ > 0"""
        if direction is None:
            direction = self.perturbation
        result: List[int] = []
        for normal in self.normals:
            value: int = sign(dot(normal, point))
            if value == 0:
                value = sign(dot(normal, direction))
            result.append(value)
        return tuple(result)

    def on_wall(self: 'Arrangement', point: Sequence[Scalar]) -> bool:
        return any(dot(normal, point) == 0 for normal in self.normals)

    def vanishing(self: 'Arrangement', point: Sequence[Scalar]) -> List[int]:
        """Indices of the normals whose hyperplane contains the point"""
        return [
            idx for idx, normal in enumerate(self.normals)
            if dot(normal, point) == 0
        ]

    def locate(
        self: 'Arrangement',
        point: Sequence[Scalar],
        direction: Optional[Sequence[Scalar]] = None
    ) -> int:
        signs: SignVector = self.signs_of(point, direction)
        if 0 in signs:
            raise ValueError(
                'direction {!r} lies on a wall of the arrangement'
                .format(direction)
            )
        try:
            return self._index[signs]
        except KeyError:
            raise ConsistencyError(
                'no tope with sign vector {!r}; the tope list is incomplete'
                .format(signs)
            )

    def to_dict(self: 'Arrangement') -> Dict[str, Any]:
        return {
            'normals': [list(n) for n in self.normals],
            'topes': [
                {'signs': tope.sign_text(), 'sample': list(tope.sample)}
                for tope in self.topes
            ]
        }


class SplineKind(Enum):
    MULTIVARIATE = 'multivariate'
    BOX = 'box'


class PiecewiseSpline:
    """T_X or B_X of a sign-normalized list, stored tope by tope

    `pieces[i]` is the polynomial of T_X on `arrangement.topes[i]`. A box
    spline additionally carries the signed shifts a_S; its values are
    assembled lazily from the T_X pieces.
    """

    kind: SplineKind
    original: VectorList
    source: VectorList
    arrangement: Arrangement
    pieces: List[MultiPoly]
    degree: int
    translation: IntVector
    functional: IntVector
    shifts: List[Tuple[IntVector, int]]

    def __init__(
        self: 'PiecewiseSpline',
        kind: SplineKind,
        original: VectorList,
        source: VectorList,
        arrangement: Arrangement,
        pieces: List[MultiPoly],
        translation: IntVector,
        functional: IntVector,
        shifts: Optional[List[Tuple[IntVector, int]]] = None
    ) -> None:
        self.kind = kind
        self.original = original
        self.source = source
        self.arrangement = arrangement
        self.pieces = pieces
        self.degree = len(source) - source.dim
        self.translation = translation
        self.functional = functional
        self.shifts = shifts or []

    @property
    def dim(self: 'PiecewiseSpline') -> int:
        return self.source.dim

    def piece_at(
        self: 'PiecewiseSpline',
        point: Sequence[Scalar],
        direction: Optional[Sequence[Scalar]] = None
    ) -> Tuple[int, MultiPoly]:
        idx: int = self.arrangement.locate(point, direction)
        return idx, self.pieces[idx]

    def to_dict(self: 'PiecewiseSpline') -> Dict[str, Any]:
        result: Dict[str, Any] = {
            'kind': self.kind.value,
            'normals': [list(n) for n in self.arrangement.normals],
            'pieces': [
                {'signs': tope.sign_text(), 'poly': piece.to_list()}
                for tope, piece in zip(self.arrangement.topes, self.pieces)
            ],
            'degree': self.degree,
            'translation': list(self.translation)
        }
        if self.kind is SplineKind.BOX:
            result['shifts'] = [
                {'point': list(point), 'coef': coef}
                for point, coef in self.shifts
            ]
        return result


def shifted(
    point: Sequence[Scalar],
    offset: Sequence[Scalar],
    factor: Scalar = -1
) -> Tuple[Fraction, ...]:
    """point + factor·offset"""
    return tuple(Fraction(p) + factor * o for p, o in zip(point, offset))
