from math import comb
from collections import defaultdict
from typing import DefaultDict, Dict, FrozenSet, Tuple

from more_itertools import powerset

from ..models.errors import ConsistencyError
from ..models.tutte_poly import TuttePoly
from ..models.vector_list import VectorList

Coefficients = Dict[Tuple[int, int], int]


class _RankOracle:
    """Memoized rank function on index subsets of a vector list"""

    def __init__(self: '_RankOracle', vectors: VectorList) -> None:
        self.vectors = vectors
        self.cache: Dict[FrozenSet[int], int] = {}

    def __call__(self: '_RankOracle', indices: FrozenSet[int]) -> int:
        if indices not in self.cache:
            self.cache[indices] = self.vectors.sublist(sorted(indices)).rank()
        return self.cache[indices]


def tutte_by_corank_nullity(x: VectorList) -> TuttePoly:
    """Sum over all 2^N sublists of (x-1)^corank (y-1)^nullity"""
    rk = _RankOracle(x)
    full: int = rk(frozenset(range(len(x))))
    coefs: DefaultDict[Tuple[int, int], int] = defaultdict(int)
    for subset in powerset(range(len(x))):
        indices = frozenset(subset)
        corank: int = full - rk(indices)
        nullity: int = len(indices) - rk(indices)
        for i in range(corank + 1):
            for j in range(nullity + 1):
                coefs[(i, j)] += (
                    comb(corank, i) * comb(nullity, j) *
                    (-1) ** (corank - i + nullity - j)
                )
    return TuttePoly(dict(coefs))


def _merge(target: DefaultDict[Tuple[int, int], int],
           source: Coefficients,
           shift: Tuple[int, int] = (0, 0)) -> None:
    for (i, j), coef in source.items():
        target[(i + shift[0], j + shift[1])] += coef


def tutte_by_deletion_contraction(x: VectorList) -> TuttePoly:
    rk = _RankOracle(x)
    memo: Dict[Tuple[FrozenSet[int], FrozenSet[int]], Coefficients] = {}

    def minor_rank(
        indices: FrozenSet[int],
        contracted: FrozenSet[int]
    ) -> int:
        return rk(indices | contracted) - rk(contracted)

    def recurse(
        remaining: FrozenSet[int],
        contracted: FrozenSet[int]
    ) -> Coefficients:
        key = (remaining, contracted)
        if key in memo:
            return memo[key]
        result: DefaultDict[Tuple[int, int], int] = defaultdict(int)
        if not remaining:
            result[(0, 0)] = 1
        else:
            elem: int = min(remaining)
            rest = remaining - {elem}
            if minor_rank(frozenset([elem]), contracted) == 0:
                # loop
                _merge(result, recurse(rest, contracted), (0, 1))
            elif (
                minor_rank(rest, contracted) <
                minor_rank(remaining, contracted)
            ):
                # coloop
                _merge(result, recurse(rest, contracted | {elem}), (1, 0))
            else:
                _merge(result, recurse(rest, contracted))
                _merge(result, recurse(rest, contracted | {elem}))
        memo[key] = dict(result)
        return memo[key]

    return TuttePoly(recurse(frozenset(range(len(x))), frozenset()))


def tutte(x: VectorList, *, cross_check: bool = False) -> TuttePoly:
    """Tutte polynomial of the matroid represented by the list

    The deletion-contraction recursion is the fast path; with
    `cross_check` it is compared against the corank-nullity sum.
    """
    result: TuttePoly = tutte_by_deletion_contraction(x)
    if cross_check:
        oracle: TuttePoly = tutte_by_corank_nullity(x)
        if oracle != result:
            raise ConsistencyError(
                'Tutte polynomial mismatch: deletion-contraction gives {} '
                'but the corank-nullity sum gives {}'.format(result, oracle)
            )
    return result
