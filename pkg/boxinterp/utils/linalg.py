import cython  # type: ignore
from enum import Enum
from math import gcd
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..models.rat_matrix import RatMatrix, RatVector, Scalar


class SolveOutcome(Enum):
    NO_SOLUTION = 0
    NON_UNIQUE = 1


SolveResult = Union[RatVector, SolveOutcome]


@cython.ccall
@cython.returns(list)
def _reduce(rows: List[List[Fraction]], ncols: int) -> List[int]:
    """Bring `rows` into reduced row echelon form in place

    Pivots are chosen by largest magnitude within the column. Returns the
    pivot column of every non-zero row, in row order.
    """
    nrows: int = len(rows)
    pivots: List[int] = []
    r: int = 0
    for c in range(ncols):
        if r == nrows:
            break
        best: int = r
        for i in range(r + 1, nrows):
            if abs(rows[i][c]) > abs(rows[best][c]):
                best = i
        if rows[best][c] == 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        pivot: Fraction = rows[r][c]
        if pivot != 1:
            rows[r] = [v / pivot for v in rows[r]]
        for i in range(nrows):
            factor: Fraction = rows[i][c]
            if i != r and factor != 0:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: RatMatrix) -> Tuple[RatMatrix, List[int]]:
    """Reduced row echelon form (zero rows dropped) and its pivot columns"""
    rows: List[List[Fraction]] = m.to_rows()
    pivots: List[int] = _reduce(rows, m.cols)
    return RatMatrix.from_rows(rows[:len(pivots)], m.cols), pivots


def rank(m: RatMatrix) -> int:
    rows: List[List[Fraction]] = m.to_rows()
    return len(_reduce(rows, m.cols))


def det(a: RatMatrix) -> Fraction:
    if not a.is_square:
        raise ValueError(
            'determinant of a non-square {}x{} matrix'.format(a.rows, a.cols))
    size: int = a.rows
    rows: List[List[Fraction]] = a.to_rows()
    result: Fraction = Fraction(1)
    for c in range(size):
        best: int = c
        for i in range(c + 1, size):
            if abs(rows[i][c]) > abs(rows[best][c]):
                best = i
        if rows[best][c] == 0:
            return Fraction(0)
        if best != c:
            rows[c], rows[best] = rows[best], rows[c]
            result = -result
        pivot: Fraction = rows[c][c]
        result *= pivot
        for i in range(c + 1, size):
            factor: Fraction = rows[i][c] / pivot
            if factor != 0:
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[c])]
    return result


def _augmented_solution(
    a: RatMatrix,
    b: Sequence[Scalar]
) -> Tuple[Optional[List[Fraction]], bool]:
    """Particular solution (free variables zero) and a uniqueness flag"""
    if a.rows != len(b):
        raise ValueError(
            'dimension mismatch: {}x{} system with a {}-vector right side'
            .format(a.rows, a.cols, len(b))
        )
    rows: List[List[Fraction]] = [
        list(row) + [Fraction(rhs)] for row, rhs in zip(a.iter_rows(), b)
    ]
    pivots: List[int] = _reduce(rows, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None, False
    solution: List[Fraction] = [Fraction(0)] * a.cols
    for row, col in zip(rows, pivots):
        solution[col] = row[a.cols]
    return solution, len(pivots) == a.cols


def solve(a: RatMatrix, b: Sequence[Scalar]) -> SolveResult:
    """Exact solution of a·x = b, or a SolveOutcome tag"""
    solution, unique = _augmented_solution(a, b)
    if solution is None:
        return SolveOutcome.NO_SOLUTION
    if not unique:
        return SolveOutcome.NON_UNIQUE
    assert a.apply(solution) == tuple(Fraction(v) for v in b)
    return tuple(solution)


def particular_solution(
    a: RatMatrix,
    b: Sequence[Scalar]
) -> Optional[RatVector]:
    """Any exact solution of a consistent system (free variables are zero)"""
    solution, _ = _augmented_solution(a, b)
    if solution is None:
        return None
    assert a.apply(solution) == tuple(Fraction(v) for v in b)
    return tuple(solution)


def nullspace(m: RatMatrix) -> List[RatVector]:
    """Basis of {v : m·v = 0}, one vector per free column"""
    rows: List[List[Fraction]] = m.to_rows()
    pivots: List[int] = _reduce(rows, m.cols)
    pivot_set = set(pivots)
    basis: List[RatVector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec: List[Fraction] = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for row, col in zip(rows, pivots):
            vec[col] = -row[free]
        basis.append(tuple(vec))
    return basis


def primitive(vector: Sequence[Scalar]) -> Tuple[int, ...]:
    """Scale a rational vector to coprime integers, first non-zero positive"""
    fracs: List[Fraction] = [Fraction(v) for v in vector]
    denom: int = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints: List[int] = [int(f * denom) for f in fracs]
    divisor: int = 0
    for v in ints:
        divisor = gcd(divisor, v)
    if divisor == 0:
        return tuple(ints)
    for v in ints:
        if v != 0:
            if v < 0:
                divisor = -divisor
            break
    return tuple(v // divisor for v in ints)


def dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    total: Scalar = 0
    for x, y in zip(a, b):
        total += x * y
    return total


def sign(value: Scalar) -> int:
    return (value > 0) - (value < 0)
