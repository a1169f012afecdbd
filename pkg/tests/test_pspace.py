import pytest

from boxinterp.models.errors import MembershipError, NonSpanningError
from boxinterp.models.multi_poly import MultiPoly
from boxinterp.models.vector_list import VectorList
from boxinterp.utils.pspace import (
    central_space, degree_bound, internal_space, multiply_embed,
    project_section
)
from boxinterp.utils.zonotope import interior_lattice_points

from .conftest import FIG1, PIVOT_CASES, SQUARE, SUITE, X3

S = MultiPoly.variable(1, 0)
S1 = MultiPoly.variable(2, 0)
S2 = MultiPoly.variable(2, 1)


def test_degree_bound():
    assert degree_bound(FIG1) == 1
    assert degree_bound(X3) == 2
    assert degree_bound(SQUARE) == 0


def test_fig1_spaces():
    central = central_space(FIG1)
    assert central.hilbert == [1, 2]
    assert central.contains(S1 + S2)
    assert central.contains(MultiPoly.constant(2, 5))
    assert not central.contains(S1 * S2)
    internal = internal_space(FIG1)
    assert internal.hilbert == [1, 0]
    assert internal.basis == [MultiPoly.constant(2, 1)]
    assert not internal.contains(S1)


def test_parallel_spaces():
    internal = internal_space(X3)
    assert internal.dimension == 2
    assert internal.basis == [MultiPoly.constant(1, 1), S]
    assert internal.coordinates(S.scale(3) + MultiPoly.constant(1, 2)) == [
        2, 3]
    with pytest.raises(MembershipError):
        internal.coordinates(S ** 2)
    assert central_space(X3).dimension == 3


def test_coloop_has_no_internal_space():
    assert internal_space(SQUARE).dimension == 0
    assert central_space(SQUARE).dimension == 1


@pytest.mark.parametrize('name', sorted(SUITE))
def test_dimensions(name):
    x = SUITE[name]
    assert central_space(x).dimension == len(x.bases())
    assert internal_space(x).dimension == len(interior_lattice_points(x))


def test_non_spanning():
    with pytest.raises(NonSpanningError):
        central_space(VectorList(2, [(1, 0), (2, 0)]))


def test_combine():
    internal = internal_space(X3)
    assert internal.combine([1, 2]) == MultiPoly.constant(1, 1) + 2 * S
    with pytest.raises(ValueError):
        internal.combine([1])


def test_multiply_embed():
    deleted = internal_space(X3.delete(0))
    images = multiply_embed(deleted, (1, ))
    assert images == [S]
    assert all(internal_space(X3).contains(poly) for poly in images)


def test_project_section():
    contraction = FIG1.contract(2)
    section = project_section(internal_space(FIG1), contraction)
    assert section.images == [MultiPoly.constant(1, 1)]
    assert section.lift([3]) == [3]


@pytest.mark.parametrize('name,index', PIVOT_CASES)
def test_deletion_contraction_sequence(name, index):
    x = SUITE[name]
    internal = internal_space(x)
    deleted = internal_space(x.delete(index))
    contraction = x.contract(index)
    images = multiply_embed(deleted, x[index], internal)
    assert len(images) == deleted.dimension
    assert all(
        poly.project_vars(contraction.quotient_map).is_zero()
        for poly in images
    )
    section = project_section(internal, contraction)
    assert internal.dimension == (
        deleted.dimension + section.target.dimension)
    central = central_space(x.delete(index))
    assert all(central.contains(poly) for poly in internal.basis)


def test_to_dict():
    payload = internal_space(X3).to_dict()
    assert payload['kind'] == 'internal'
    assert payload['dimension'] == 2
    assert payload['hilbert'] == [1, 1, 0]
