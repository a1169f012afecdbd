from fractions import Fraction
from typing import List, NamedTuple, Sequence

import numpy as np

from ..models.rat_matrix import RatMatrix, Scalar
from ..models.vector_list import VectorList
from .linalg import SolveOutcome, det, dot, solve

DEFAULT_MC_SAMPLES = 100000
DEFAULT_SEED = 0
DEFAULT_SIGMAS = 3.0


class OracleEstimate(NamedTuple):
    estimate: float
    stderr: float
    samples: int

    def agrees(
        self: 'OracleEstimate',
        exact: Fraction,
        sigmas: float = DEFAULT_SIGMAS
    ) -> bool:
        return abs(float(exact) - self.estimate) <= (
            sigmas * self.stderr + 1e-12)


def fiber_volume(
    x: VectorList,
    point: Sequence[Scalar],
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED
) -> OracleEstimate:
    """Monte Carlo estimate of T_X(u) for a sign-normalized list

    With a basis C first and the free vectors F after it, T_X(u) is the
    volume of {λ_F >= 0 : C^-1(u - F λ_F) >= 0} divided by |det C|. Every
    free coordinate is bounded by ℓ·u / ℓ·x_j for the list's functional ℓ.
    """
    dim: int = x.dim
    basis: VectorList = x.sublist(range(dim))
    scale: float = float(abs(det(basis.matrix)))
    if scale == 0:
        raise ValueError(
            'the first {} vectors of {!r} are not a basis'.format(dim, x))
    ell = x.generic_functional()
    height: Fraction = Fraction(dot(ell, point))
    free: List[Sequence[int]] = list(x.vectors[dim:])
    if height <= 0:
        return OracleEstimate(0.0, 0.0, 0)
    if not free:
        coords = solve(basis.matrix, point)
        assert not isinstance(coords, SolveOutcome)
        inside: bool = all(c > 0 for c in coords)
        return OracleEstimate(1 / scale if inside else 0.0, 0.0, 0)

    bounds = np.array(
        [float(height / dot(ell, vec)) for vec in free], dtype=float)
    inverse = np.array([
        [float(v) for v in row]
        for row in _inverse(basis.matrix).iter_rows()
    ])
    free_matrix = np.array(free, dtype=float).T
    target = np.array([float(p) for p in point])

    rng = np.random.default_rng(seed)
    lam = rng.uniform(0.0, 1.0, size=(samples, len(free))) * bounds
    residual = target[np.newaxis, :] - lam @ free_matrix.T
    coords_mc = residual @ inverse.T
    hits = np.count_nonzero(np.all(coords_mc >= 0, axis=1))

    box_volume: float = float(np.prod(bounds))
    rate: float = hits / samples
    clipped: float = min(max(rate, 1 / samples), 1 - 1 / samples)
    return OracleEstimate(
        box_volume * rate / scale,
        box_volume * float(np.sqrt(clipped * (1 - clipped) / samples)) /
        scale,
        samples
    )


def _inverse(matrix: RatMatrix) -> RatMatrix:
    columns = []
    for j in range(matrix.rows):
        unit: List[int] = [1 if i == j else 0 for i in range(matrix.rows)]
        column = solve(matrix, unit)
        assert not isinstance(column, SolveOutcome)
        columns.append(column)
    return RatMatrix.from_columns(columns, matrix.rows)
