from fractions import Fraction
from typing import (
    Any, Dict, Iterable, List, Mapping, Sequence, Tuple
)

from .rat_matrix import Scalar, parse_integer, parse_rational
from .vector_list import IntVector


class GridFunction:
    """A finitely supported function Λ = Z^d -> Q

    Zero values are never stored, so two grid functions are equal exactly
    when their stored values are.
    """

    dim: int
    values: Dict[IntVector, Fraction]

    def __init__(
        self: 'GridFunction',
        dim: int,
        values: Mapping[Sequence[int], Scalar] = {}
    ) -> None:
        self.dim = dim
        self.values = {}
        for point, value in values.items():
            if len(point) != dim:
                raise ValueError(
                    'lattice point {!r} does not have {} coordinates'
                    .format(tuple(point), dim)
                )
            number: Fraction = parse_rational(value)
            if number != 0:
                self.values[tuple(parse_integer(p) for p in point)] = number

    @classmethod
    def zero(cls, dim: int) -> 'GridFunction':
        return cls(dim)

    @classmethod
    def delta(cls, point: Sequence[int]) -> 'GridFunction':
        return cls(len(point), {tuple(point): 1})

    @classmethod
    def from_list(
        cls,
        payload: Iterable[Mapping[str, Any]],
        dim: int
    ) -> 'GridFunction':
        """Parse [{"point": [...], "value": "p/q"}, ...]

        Repeated points are a ValueError.
        """
        values: Dict[IntVector, Fraction] = {}
        for item in payload:
            point: IntVector = tuple(parse_integer(p) for p in item['point'])
            if point in values:
                raise ValueError(
                    'value for point {} given twice'.format(list(point)))
            values[point] = parse_rational(item['value'])
        return cls(dim, values)

    def __getitem__(self: 'GridFunction', point: Sequence[int]) -> Fraction:
        return self.values.get(tuple(point), Fraction(0))

    @property
    def support(self: 'GridFunction') -> List[IntVector]:
        return sorted(self.values)

    def items(self: 'GridFunction') -> List[Tuple[IntVector, Fraction]]:
        return sorted(self.values.items())

    def is_zero(self: 'GridFunction') -> bool:
        return not self.values

    def _check_dim(self: 'GridFunction', other: 'GridFunction') -> None:
        if self.dim != other.dim:
            raise ValueError(
                'grid functions on Z^{} and Z^{} cannot be combined'
                .format(self.dim, other.dim)
            )

    def __add__(self: 'GridFunction', other: 'GridFunction') -> 'GridFunction':
        self._check_dim(other)
        values: Dict[IntVector, Fraction] = dict(self.values)
        for point, value in other.values.items():
            values[point] = values.get(point, Fraction(0)) + value
        return GridFunction(self.dim, values)

    def __neg__(self: 'GridFunction') -> 'GridFunction':
        return self.scale(-1)

    def __sub__(self: 'GridFunction', other: 'GridFunction') -> 'GridFunction':
        return self + (-other)

    def scale(self: 'GridFunction', factor: Scalar) -> 'GridFunction':
        return GridFunction(
            self.dim,
            {point: value * factor for point, value in self.values.items()}
        )

    def __eq__(self: 'GridFunction', other: object) -> bool:
        if not isinstance(other, GridFunction):
            return NotImplemented
        return self.dim == other.dim and self.values == other.values

    def __repr__(self: 'GridFunction') -> str:
        return '<GridFunction {}>'.format(
            ', '.join('{}: {}'.format(list(point), value)
                      for point, value in self.items()) or '0')

    def to_dict(self: 'GridFunction') -> Dict[str, Any]:
        return {
            'dim': self.dim,
            'values': [
                {'point': list(point), 'value': value}
                for point, value in self.items()
            ]
        }
