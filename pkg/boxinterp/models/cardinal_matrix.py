from fractions import Fraction
from typing import Any, Dict, List

from .rat_matrix import RatMatrix


class CardinalMatrix:
    """M^N with m_ij = D^(i-1) B_(X_(N+1))(j) for i, j = 1..n

    Entries are stored 0-based in a RatMatrix.
    """

    n: int
    entries: RatMatrix

    def __init__(self: 'CardinalMatrix', n: int, entries: RatMatrix) -> None:
        if not (entries.is_square and entries.rows == n):
            raise ValueError(
                'cardinal matrix of size {} needs {}x{} entries, got {}x{}'
                .format(n, n, n, entries.rows, entries.cols)
            )
        self.n = n
        self.entries = entries

    def entry(self: 'CardinalMatrix', i: int, j: int) -> Fraction:
        """1-based m_ij; columns outside 1..n read as zero"""
        if not 1 <= i <= self.n:
            raise IndexError('row {} out of range 1..{}'.format(i, self.n))
        if not 1 <= j <= self.n:
            return Fraction(0)
        return self.entries[i - 1, j - 1]

    def follows_recursion(
        self: 'CardinalMatrix',
        smaller: 'CardinalMatrix'
    ) -> bool:
        """m^N_(i,j) = m^(N-1)_(i-1,j) - m^(N-1)_(i-1,j-1) for i >= 2"""
        if smaller.n != self.n - 1:
            raise ValueError(
                'recursion relates sizes {} and {}, got {}'
                .format(self.n, self.n - 1, smaller.n)
            )
        for i in range(2, self.n + 1):
            for j in range(1, self.n + 1):
                expected: Fraction = (
                    smaller.entry(i - 1, j) - smaller.entry(i - 1, j - 1))
                if self.entry(i, j) != expected:
                    return False
        return True

    def to_rows(self: 'CardinalMatrix') -> List[List[Fraction]]:
        return self.entries.to_rows()

    def to_dict(self: 'CardinalMatrix') -> Dict[str, Any]:
        return {'n': self.n, 'rows': self.to_rows()}
