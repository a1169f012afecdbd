from fractions import Fraction
from typing import Any, Iterator, List, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
RatVector = Tuple[Fraction, ...]


def parse_rational(value: Any) -> Fraction:
    """An exact rational from an integer, a JSON number or a "p/q" string"""
    if isinstance(value, bool):
        raise ValueError('expect a rational number, got {!r}'.format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except ZeroDivisionError:
        raise ValueError('zero denominator in {!r}'.format(value))


def parse_integer(value: Any) -> int:
    """Like parse_rational, but the number must be integral"""
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    number: Fraction = parse_rational(value)
    if number.denominator != 1:
        raise ValueError('expect an integer, got {!r}'.format(value))
    return int(number)


class RatMatrix:
    """Dense matrix over the rationals, stored row-major and never mutated"""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __init__(
        self: 'RatMatrix',
        rows: int,
        cols: int,
        entries: Sequence[Scalar]
    ) -> None:
        if rows < 0 or cols < 0:
            raise ValueError(
                'matrix shape must be non-negative: {}x{}'.format(rows, cols))
        if len(entries) != rows * cols:
            raise ValueError(
                'expect {} entries for a {}x{} matrix, got {}'
                .format(rows * cols, rows, cols, len(entries))
            )
        self.rows = rows
        self.cols = cols
        self.entries = tuple(Fraction(e) for e in entries)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Scalar]],
        cols: int = -1
    ) -> 'RatMatrix':
        if cols < 0:
            cols = len(rows[0]) if rows else 0
        entries: List[Scalar] = []
        for row in rows:
            if len(row) != cols:
                raise ValueError(
                    'ragged matrix rows: expect {} columns, got {}'
                    .format(cols, len(row))
                )
            entries.extend(row)
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(
        cls,
        columns: Sequence[Sequence[Scalar]],
        rows: int = -1
    ) -> 'RatMatrix':
        return cls.from_rows(columns, rows).transpose()

    @classmethod
    def identity(cls, size: int) -> 'RatMatrix':
        return cls(size, size, [
            1 if i == j else 0
            for i in range(size) for j in range(size)
        ])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RatMatrix':
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def is_square(self: 'RatMatrix') -> bool:
        return self.rows == self.cols

    def __getitem__(self: 'RatMatrix', index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError('matrix index out of range: {!r}'.format(index))
        return self.entries[i * self.cols + j]

    def row(self: 'RatMatrix', i: int) -> RatVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self: 'RatMatrix', j: int) -> RatVector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self: 'RatMatrix') -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def iter_rows(self: 'RatMatrix') -> Iterator[RatVector]:
        for i in range(self.rows):
            yield self.row(i)

    def transpose(self: 'RatMatrix') -> 'RatMatrix':
        return RatMatrix(self.cols, self.rows, [
            self.entries[i * self.cols + j]
            for j in range(self.cols) for i in range(self.rows)
        ])

    def submatrix(
        self: 'RatMatrix',
        rows: Sequence[int],
        cols: Sequence[int]
    ) -> 'RatMatrix':
        return RatMatrix(len(rows), len(cols), [
            self.entries[i * self.cols + j] for i in rows for j in cols
        ])

    def apply(self: 'RatMatrix', vector: Sequence[Scalar]) -> RatVector:
        if len(vector) != self.cols:
            raise ValueError(
                'dimension mismatch: {}x{} matrix applied to a {}-vector'
                .format(self.rows, self.cols, len(vector))
            )
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector)), Fraction(0))
            for i in range(self.rows)
        )

    def __mul__(self: 'RatMatrix', other: 'RatMatrix') -> 'RatMatrix':
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                'dimension mismatch: {}x{} times {}x{}'
                .format(self.rows, self.cols, other.rows, other.cols)
            )
        columns: List[RatVector] = [
            other.column(j) for j in range(other.cols)]
        return RatMatrix(self.rows, other.cols, [
            sum((a * b for a, b in zip(self.row(i), col)), Fraction(0))
            for i in range(self.rows) for col in columns
        ])

    def __eq__(self: 'RatMatrix', other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.rows == other.rows and
            self.cols == other.cols and
            self.entries == other.entries
        )

    def __hash__(self: 'RatMatrix') -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self: 'RatMatrix') -> str:
        return '<RatMatrix {}x{} {}>'.format(
            self.rows, self.cols,
            [[str(e) for e in row] for row in self.iter_rows()]
        )
