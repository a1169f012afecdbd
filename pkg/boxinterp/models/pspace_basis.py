from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .errors import MembershipError
from .multi_poly import Exps, MultiPoly, homogeneous_monomials
from .rat_matrix import RatMatrix, Scalar
from .vector_list import VectorList
from ..utils.linalg import rref


class PSpaceKind(Enum):
    CENTRAL = 'central'
    INTERNAL = 'internal'


class GradedPiece:
    """Reduced echelon rows spanning one homogeneous degree of a space"""

    degree: int
    monomials: List[Exps]
    rows: RatMatrix
    pivots: List[int]

    def __init__(
        self: 'GradedPiece',
        degree: int,
        monomials: List[Exps],
        spanning_rows: Sequence[Sequence[Scalar]]
    ) -> None:
        self.degree = degree
        self.monomials = monomials
        if spanning_rows:
            self.rows, self.pivots = rref(
                RatMatrix.from_rows(spanning_rows, len(monomials)))
        else:
            self.rows, self.pivots = RatMatrix.zeros(0, len(monomials)), []

    @property
    def dimension(self: 'GradedPiece') -> int:
        return len(self.pivots)

    def coordinates(
        self: 'GradedPiece',
        vector: Sequence[Fraction]
    ) -> Optional[List[Fraction]]:
        """Echelon coordinates, or None when outside the span"""
        coords: List[Fraction] = [vector[col] for col in self.pivots]
        rebuilt: List[Fraction] = [Fraction(0)] * len(self.monomials)
        for coef, row in zip(coords, self.rows.iter_rows()):
            if coef:
                rebuilt = [r + coef * v for r, v in zip(rebuilt, row)]
        if rebuilt != list(vector):
            return None
        return coords


class PSpaceBasis:
    """Graded canonical basis of a central or internal P-space

    Every homogeneous degree is stored in reduced row echelon form over
    the graded monomials of that degree, which makes the basis canonical
    and doubles as the independence certificate.
    """

    kind: PSpaceKind
    source: VectorList
    nvars: int
    pieces: List[GradedPiece]

    def __init__(
        self: 'PSpaceBasis',
        kind: PSpaceKind,
        source: VectorList,
        rows_by_degree: Sequence[Sequence[Sequence[Scalar]]]
    ) -> None:
        self.kind = kind
        self.source = source
        self.nvars = source.dim
        self.pieces = [
            GradedPiece(k, homogeneous_monomials(source.dim, k), rows)
            for k, rows in enumerate(rows_by_degree)
        ]

    @property
    def max_degree(self: 'PSpaceBasis') -> int:
        return len(self.pieces) - 1

    @property
    def basis(self: 'PSpaceBasis') -> List[MultiPoly]:
        result: List[MultiPoly] = []
        for piece in self.pieces:
            for row in piece.rows.iter_rows():
                result.append(MultiPoly.from_coefficients(
                    self.nvars, piece.monomials, row))
        return result

    @property
    def hilbert(self: 'PSpaceBasis') -> List[int]:
        return [piece.dimension for piece in self.pieces]

    @property
    def dimension(self: 'PSpaceBasis') -> int:
        return sum(self.hilbert)

    def coordinates(self: 'PSpaceBasis', poly: MultiPoly) -> List[Fraction]:
        """Coefficients of `poly` against `basis`

        Raises MembershipError if the polynomial is not in the space.
        """
        if poly.nvars != self.nvars or poly.degree() > self.max_degree:
            raise MembershipError(
                'polynomial {} is not in the {} space of {!r}'
                .format(poly, self.kind.value, self.source)
            )
        coords: List[Fraction] = []
        for piece in self.pieces:
            part: MultiPoly = poly.homogeneous_part(piece.degree)
            vector: List[Fraction] = part.coefficient_vector(piece.monomials)
            piece_coords: Optional[List[Fraction]] = piece.coordinates(vector)
            if piece_coords is None:
                raise MembershipError(
                    'polynomial {} is not in the {} space of {!r}'
                    .format(poly, self.kind.value, self.source)
                )
            coords.extend(piece_coords)
        return coords

    def contains(self: 'PSpaceBasis', poly: MultiPoly) -> bool:
        try:
            self.coordinates(poly)
        except MembershipError:
            return False
        return True

    def combine(self: 'PSpaceBasis', coords: Sequence[Scalar]) -> MultiPoly:
        basis: List[MultiPoly] = self.basis
        if len(coords) != len(basis):
            raise ValueError(
                'expect {} coordinates, got {}'
                .format(len(basis), len(coords))
            )
        result: MultiPoly = MultiPoly.zero(self.nvars)
        for coef, poly in zip(coords, basis):
            if coef:
                result = result + poly.scale(coef)
        return result

    def to_dict(self: 'PSpaceBasis') -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'dimension': self.dimension,
            'hilbert': self.hilbert,
            'basis': [poly.to_list() for poly in self.basis]
        }

    def __repr__(self: 'PSpaceBasis') -> str:
        return '<PSpaceBasis {} of {!r} hilbert={}>'.format(
            self.kind.value, self.source, self.hilbert)
