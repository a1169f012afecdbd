from fractions import Fraction

import pytest

from boxinterp.models.errors import (
    NonSpanningError, NotTotallyUnimodularError
)
from boxinterp.models.vector_list import VectorList
from boxinterp.models.rat_matrix import RatMatrix
from boxinterp.utils.linalg import det
from boxinterp.utils.unimodular import (
    find_tu_violation, unimodular_completion
)

from .conftest import FIG1, GRAPHS, NON_TU, SQUARE, X3


def test_construction_errors():
    with pytest.raises(ValueError):
        VectorList(2, [(1, 0, 0)])
    with pytest.raises(ValueError):
        VectorList(-1)
    with pytest.raises(ValueError):
        VectorList(1, [(True, )])
    with pytest.raises(ValueError):
        VectorList(1, [(1.0, )])


def test_rank_and_spanning():
    assert FIG1.rank() == 2
    assert FIG1.spans()
    flat = VectorList(2, [(1, 0), (2, 0)])
    assert not flat.spans()
    with pytest.raises(NonSpanningError):
        flat.require_spanning()


def test_coloops_and_zeros():
    assert SQUARE.has_coloop()
    assert not FIG1.has_coloop()
    padded = VectorList(2, [(1, 0), (0, 0), (0, 1), (1, 1)])
    assert padded.is_zero(1)
    assert padded.without_zeros() == FIG1
    assert GRAPHS['P3'].is_coloop(0)


def test_total_unimodularity():
    assert FIG1.is_totally_unimodular()
    assert not NON_TU.is_totally_unimodular()
    assert NON_TU.tu_violation() == ((0, 1), (0, 1), Fraction(-2))
    with pytest.raises(NotTotallyUnimodularError) as excinfo:
        NON_TU.require_totally_unimodular()
    assert excinfo.value.to_dict()['witness']['det'] == -2
    assert find_tu_violation([(2, )], 1) == ((0, ), (0, ), Fraction(2))


def test_bases_and_volume():
    assert FIG1.bases() == [(0, 1), (0, 2), (1, 2)]
    assert FIG1.volume() == 3
    assert X3.volume() == 3
    assert NON_TU.volume() == 2


def test_scale():
    scaled = FIG1.scale(2, -1)
    assert scaled[2] == (-1, -1)
    assert scaled.volume() == FIG1.volume()


def test_sign_normalize():
    result = VectorList(2, [(-1, 0), (0, 1)]).sign_normalize()
    assert result.normalized == SQUARE
    assert result.translation == (-1, 0)
    assert result.dropped_zeros == 0
    with_zero = VectorList(1, [(0, ), (-1, ), (1, )]).sign_normalize()
    assert with_zero.normalized == VectorList(1, [(1, ), (1, )])
    assert with_zero.translation == (-1, )
    assert with_zero.dropped_zeros == 1


@pytest.mark.parametrize('vector', [(1, 1), (0, -1), (1, -1, 0), (2, 3)])
def test_unimodular_completion(vector):
    transform = unimodular_completion(vector)
    assert abs(det(RatMatrix.from_rows(transform))) == 1
    image = tuple(sum(a * b for a, b in zip(row, vector))
                  for row in transform)
    assert image == (0, ) * (len(vector) - 1) + (1, )


def test_unimodular_completion_errors():
    with pytest.raises(ValueError):
        unimodular_completion((0, 0))
    with pytest.raises(ValueError):
        unimodular_completion((2, 4))


def test_contract():
    contraction = FIG1.contract(2)
    assert contraction.pivot == (1, 1)
    assert contraction.child.dim == 1
    assert sorted(contraction.child.vectors) == [(-1, ), (1, )]
    assert contraction.project((1, 1)) == (0, )
    assert contraction.fiber_coordinate((2, 2)) == 2
    with pytest.raises(ValueError):
        VectorList(2, [(0, 0), (1, 0), (0, 1)]).contract(0)
