from functools import lru_cache
from fractions import Fraction
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence

from more_itertools import powerset, unique_everseen

from ..models.errors import ConsistencyError
from ..models.multi_poly import (
    Exps, MultiPoly, homogeneous_monomials, monomials_up_to, product_form
)
from ..models.pspace_basis import PSpaceBasis, PSpaceKind
from ..models.rat_matrix import RatMatrix, RatVector
from ..models.vector_list import Contraction, VectorList
from .linalg import nullspace, particular_solution

GradedRows = List[List[RatVector]]


def degree_bound(x: VectorList) -> int:
    """Every P-space of a spanning list lives in degrees 0..N-d"""
    return max(len(x) - x.dim, 0)


def _central_rows(
    x: VectorList,
    target_rank: int,
    max_degree: int
) -> GradedRows:
    """Coefficient rows of p_Y for every Y with rk(X minus Y) = target_rank"""
    rows: GradedRows = [[] for _ in range(max_degree + 1)]
    everything: FrozenSet[int] = frozenset(range(len(x)))
    rank_cache: Dict[FrozenSet[int], int] = {}
    for removed in powerset(range(len(x))):
        if len(removed) > max_degree:
            break
        kept: FrozenSet[int] = everything - frozenset(removed)
        if kept not in rank_cache:
            rank_cache[kept] = x.sublist(sorted(kept)).rank()
        if rank_cache[kept] != target_rank:
            continue
        poly: MultiPoly = product_form([x[i] for i in removed], x.dim)
        rows[len(removed)].append(tuple(poly.coefficient_vector(
            homogeneous_monomials(x.dim, len(removed)))))
    return rows


@lru_cache(maxsize=None)
def central_space(x: VectorList) -> PSpaceBasis:
    """P(X) = span{p_Y : rk(X minus Y) = rk(X)}"""
    x.require_spanning()
    return PSpaceBasis(
        PSpaceKind.CENTRAL, x,
        _central_rows(x, x.dim, degree_bound(x))
    )


def _intersect(
    spans: Sequence[Sequence[RatVector]],
    width: int
) -> List[RatVector]:
    """Row-space intersection through the stacked annihilators"""
    annihilators: List[RatVector] = []
    for rows in spans:
        annihilators.extend(nullspace(RatMatrix.from_rows(rows, width)))
    return nullspace(RatMatrix.from_rows(annihilators, width))


@lru_cache(maxsize=None)
def internal_space(x: VectorList) -> PSpaceBasis:
    """P_-(X): the intersection of P(X minus x) over every x in X

    Every deleted central space is taken relative to the rank of X, so a
    coloop contributes the zero space.
    """
    x.require_spanning()
    max_degree: int = degree_bound(x)
    deleted_spaces: List[GradedRows] = [
        _central_rows(x.delete(i), x.dim, max_degree)
        for i in unique_everseen(
            range(len(x)), key=lambda i: x[i])
    ]
    graded: GradedRows = []
    for k in range(max_degree + 1):
        width: int = len(homogeneous_monomials(x.dim, k))
        graded.append(_intersect(
            [space[k] for space in deleted_spaces], width))
    return PSpaceBasis(PSpaceKind.INTERNAL, x, graded)


def multiply_embed(
    deleted: PSpaceBasis,
    vector: Sequence[int],
    parent: Optional[PSpaceBasis] = None
) -> List[MultiPoly]:
    """Map P_-(X minus x) into P_-(X) by multiplying with p_x

    `parent` defaults to the internal space of the deleted list with the
    vector appended; every image is checked for membership there.
    """
    if parent is None:
        parent = internal_space(deleted.source.append(vector))
    p_x: MultiPoly = product_form([vector], deleted.nvars)
    images: List[MultiPoly] = [poly * p_x for poly in deleted.basis]
    for poly in images:
        if not parent.contains(poly):
            raise ConsistencyError(
                'p_x * P_-(X minus x) is not contained in P_-(X): {}'
                .format(poly)
            )
    return images


class ProjectionSection(NamedTuple):
    images: List[MultiPoly]
    target: PSpaceBasis
    section: RatMatrix

    def lift(
        self: 'ProjectionSection',
        coords: Sequence[Fraction]
    ) -> List[Fraction]:
        """P_-(X/x) coordinates to P_-(X) coordinates"""
        return list(self.section.apply(coords))


def project_section(
    internal: PSpaceBasis,
    contraction: Contraction
) -> ProjectionSection:
    """Project P_-(X) onto P_-(X/x) and compute a right inverse

    Column k of the section matrix holds P_-(X) coordinates of a preimage
    of the k-th basis element of P_-(X/x).
    """
    images: List[MultiPoly] = [
        poly.project_vars(contraction.quotient_map)
        for poly in internal.basis
    ]
    target: PSpaceBasis = internal_space(contraction.child)
    nvars: int = contraction.child.dim
    monomials: List[Exps] = monomials_up_to(
        nvars, max(target.max_degree, internal.max_degree))
    image_matrix = (
        RatMatrix.from_columns(
            [poly.coefficient_vector(monomials) for poly in images],
            len(monomials))
        if images else RatMatrix.zeros(len(monomials), 0)
    )
    columns: List[RatVector] = []
    for poly in target.basis:
        preimage: Optional[RatVector] = particular_solution(
            image_matrix, poly.coefficient_vector(monomials))
        if preimage is None:
            raise ConsistencyError(
                'projection of P_-(X) does not reach {} in P_-(X/x)'
                .format(poly)
            )
        columns.append(preimage)
    section: RatMatrix = (
        RatMatrix.from_columns(columns, len(images))
        if columns else RatMatrix.zeros(len(images), 0)
    )
    return ProjectionSection(images, target, section)
