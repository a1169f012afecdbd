import os
from typing import Dict, List, Sequence, Tuple

import boxinterp
from boxinterp.models.vector_list import VectorList

DATA_DIR = os.path.join(os.path.dirname(boxinterp.__file__), 'data')


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def reduced_incidence(
    num_vertices: int,
    edges: Sequence[Tuple[int, int]]
) -> VectorList:
    """Incidence vectors e_i - e_j of a graph with the last vertex dropped"""
    vectors: List[List[int]] = []
    for head, tail in edges:
        vec: List[int] = [0] * num_vertices
        vec[head] += 1
        vec[tail] -= 1
        vectors.append(vec[:-1])
    return VectorList(num_vertices - 1, vectors)


FIG1 = VectorList(2, [(1, 0), (0, 1), (1, 1)])
X2 = VectorList(1, [(1, )] * 2)
X3 = VectorList(1, [(1, )] * 3)
X4 = VectorList(1, [(1, )] * 4)
SQUARE = VectorList(2, [(1, 0), (0, 1)])
NON_TU = VectorList(2, [(1, 1), (1, -1)])

GRAPHS: Dict[str, VectorList] = {
    'K2': reduced_incidence(2, [(0, 1)]),
    'P3': reduced_incidence(3, [(0, 1), (1, 2)]),
    'K3': reduced_incidence(3, [(0, 1), (1, 2), (0, 2)]),
    'P4': reduced_incidence(4, [(0, 1), (1, 2), (2, 3)]),
    'star': reduced_incidence(4, [(0, 3), (1, 3), (2, 3)]),
    'C4': reduced_incidence(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    'paw': reduced_incidence(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    'diamond': reduced_incidence(
        4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]),
    'K4': reduced_incidence(
        4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (0, 3)]),
}

# spanning, totally unimodular and cheap enough for every structural check
SMALL_SUITE: Dict[str, VectorList] = {
    'fig1': FIG1,
    'X2': X2,
    'X3': X3,
    'X4': X4,
    'mixed-1d': VectorList(1, [(1, ), (-1, ), (1, )]),
    'flipped': VectorList(2, [(-1, 0), (0, 1), (1, 1)]),
    'doubled': VectorList(2, [(1, 0), (0, 1), (1, 1), (1, 0)]),
    'K3': GRAPHS['K3'],
    'C4': GRAPHS['C4'],
}

SUITE: Dict[str, VectorList] = dict(SMALL_SUITE, **GRAPHS)



def pivots(x: VectorList) -> List[int]:
    """Indices that can be deleted and contracted"""
    return [
        index for index in range(len(x))
        if not x.is_zero(index) and not x.is_coloop(index)
    ]


PIVOT_CASES: List[Tuple[str, int]] = [
    (name, index)
    for name, x in sorted(SUITE.items())
    for index in pivots(x)
]
