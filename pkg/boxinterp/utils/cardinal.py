from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List

from ..models.cardinal_matrix import CardinalMatrix
from ..models.errors import ConsistencyError
from ..models.rat_matrix import RatMatrix, Scalar
from .linalg import det


def truncated_power(value: Fraction, power: int) -> Fraction:
    """(t)_+^k; the zeroth power is 1 exactly for t > 0"""
    if value <= 0:
        return Fraction(0)
    return value ** power


def cardinal_bspline(
    n_plus_1: int,
    u: Scalar,
    derivative: int = 0
) -> Fraction:
    """D^k B_(X_(N+1))(u) from the truncated-power closed form

    X_(N+1) is the list of N+1 copies of 1 in one dimension.
    """
    if n_plus_1 < 1:
        raise ValueError(
            'cardinal B-spline needs at least one vector, got {}'
            .format(n_plus_1)
        )
    degree: int = n_plus_1 - 1
    if not 0 <= derivative <= degree:
        raise ValueError(
            'derivative order {} outside 0..{}'.format(derivative, degree))
    scale: Fraction = Fraction(
        factorial(degree) // factorial(degree - derivative),
        factorial(degree)
    )
    point: Fraction = Fraction(u)
    total: Fraction = Fraction(0)
    for j in range(n_plus_1 + 1):
        total += (
            (-1) ** j * comb(n_plus_1, j) *
            truncated_power(point - j, degree - derivative)
        )
    return scale * total


@lru_cache(maxsize=None)
def cardinal_matrix(n: int) -> CardinalMatrix:
    """M^n; nonsingular for every n >= 1"""
    if n < 1:
        raise ValueError('cardinal matrix size must be positive: {}'.format(n))
    rows: List[List[Fraction]] = [
        [cardinal_bspline(n + 1, j, i) for j in range(1, n + 1)]
        for i in range(n)
    ]
    matrix = CardinalMatrix(n, RatMatrix.from_rows(rows, n))
    if det(matrix.entries) == 0:
        raise ConsistencyError('cardinal matrix M^{} is singular'.format(n))
    return matrix
