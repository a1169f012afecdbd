from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..models.rat_matrix import RatMatrix
from .linalg import det

IntMatrix = Tuple[Tuple[int, ...], ...]
Violation = Tuple[Tuple[int, ...], Tuple[int, ...], Fraction]


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s·a + t·b = g = gcd(a, b) >= 0"""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def find_tu_violation(
    vectors: Sequence[Sequence[int]],
    dim: int
) -> Optional[Violation]:
    """First square submatrix (smallest first) with determinant outside
    {-1, 0, 1} of the dim×N matrix whose columns are `vectors`"""
    num: int = len(vectors)
    matrix = RatMatrix.from_columns(vectors, dim) if num else None
    for size in range(1, min(dim, num) + 1):
        for rows in combinations(range(dim), size):
            for cols in combinations(range(num), size):
                assert matrix is not None
                value: Fraction = det(matrix.submatrix(rows, cols))
                if value not in (-1, 0, 1):
                    return rows, cols, value
    return None


def unimodular_completion(vector: Sequence[int]) -> IntMatrix:
    """Integer matrix T with det ±1 and T·vector = e_d

    Raises ValueError if the vector is zero or not primitive.
    """
    dim: int = len(vector)
    if dim == 0 or all(v == 0 for v in vector):
        raise ValueError('cannot contract a zero vector')
    last: int = dim - 1
    rows: List[List[int]] = [
        [1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    value: List[int] = list(vector)
    for i in range(last):
        a, b = value[i], value[last]
        if a == 0:
            continue
        g, s, t = _extended_gcd(a, b)
        # [[b/g, -a/g], [s, t]] has determinant 1
        row_i = [(b // g) * p - (a // g) * q
                 for p, q in zip(rows[i], rows[last])]
        row_last = [s * p + t * q for p, q in zip(rows[i], rows[last])]
        rows[i], rows[last] = row_i, row_last
        value[i], value[last] = 0, g
    if value[last] == -1:
        rows[last] = [-p for p in rows[last]]
        value[last] = 1
    if value[last] != 1:
        raise ValueError(
            'vector {!r} is not primitive; the quotient lattice has torsion'
            .format(tuple(vector))
        )
    return tuple(tuple(row) for row in rows)
