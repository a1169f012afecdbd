from fractions import Fraction
from typing import Any, Dict, List, Tuple

from .multi_poly import MultiPoly
from .vector_list import IntVector


class Interpolant:
    """p ∈ P_-(X) with the values p(D)B_X attains on Z_-(X)"""

    poly: MultiPoly
    certificate: List[Tuple[IntVector, Fraction]]
    internal_basis_coords: List[Fraction]

    def __init__(
        self: 'Interpolant',
        poly: MultiPoly,
        certificate: List[Tuple[IntVector, Fraction]],
        internal_basis_coords: List[Fraction]
    ) -> None:
        self.poly = poly
        self.certificate = certificate
        self.internal_basis_coords = internal_basis_coords

    def __eq__(self: 'Interpolant', other: object) -> bool:
        if not isinstance(other, Interpolant):
            return NotImplemented
        return (
            self.poly == other.poly and
            self.certificate == other.certificate
        )

    def __repr__(self: 'Interpolant') -> str:
        return '<Interpolant {}>'.format(self.poly)

    def to_dict(self: 'Interpolant') -> Dict[str, Any]:
        return {
            'poly': self.poly.to_list(),
            'text': str(self.poly),
            'certificate': [
                {'point': list(point), 'value': value}
                for point, value in self.certificate
            ],
            'internal_basis_coords': self.internal_basis_coords
        }
