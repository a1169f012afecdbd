from fractions import Fraction

import pytest

from boxinterp.models.errors import DiscontinuityError, WallPointError
from boxinterp.models.multi_poly import MultiPoly
from boxinterp.models.spline import SplineKind, shifted
from boxinterp.models.vector_list import VectorList
from boxinterp.utils.cardinal import cardinal_bspline
from boxinterp.utils.spline import (
    basis_first, box_shifts, build_box, build_multivariate,
    eval_box_derivative, eval_multivariate, is_generic, require_generic
)

from .conftest import FIG1, SQUARE, X2, X3, X4

S = MultiPoly.variable(1, 0)
HALF = Fraction(1, 2)


def test_shifted():
    assert shifted((1, 2), (1, 1)) == (0, 1)
    assert shifted((1, 2), (1, 1), HALF) == (Fraction(3, 2), Fraction(5, 2))


def test_basis_first():
    x = VectorList(2, [(1, 0), (2, 0), (0, 1)])
    assert basis_first(x).vectors == ((1, 0), (0, 1), (2, 0))


def test_box_shifts():
    assert box_shifts(X3) == [((0, ), 1), ((1, ), -3), ((2, ), 3), ((3, ), -1)]
    assert box_shifts(SQUARE) == [
        ((0, 0), 1), ((0, 1), -1), ((1, 0), -1), ((1, 1), 1)]


def test_multivariate_one_dimensional():
    spline = build_multivariate(X3)
    assert spline.kind is SplineKind.MULTIVARIATE
    assert spline.degree == 2
    assert eval_multivariate(spline, (2, )) == 2
    assert eval_multivariate(spline, (-1, )) == 0
    assert eval_multivariate(spline, (3, ), S) == 3


@pytest.mark.parametrize('copies,point,expected', [
    (X2, (1, ), 1),
    (X3, (0, ), 0),
    (X3, (1, ), HALF),
    (X3, (HALF, ), Fraction(1, 8)),
    (X4, (2, ), Fraction(2, 3)),
    (X4, (5, ), 0),
])
def test_cardinal_values(copies, point, expected):
    assert eval_box_derivative(build_box(copies), None, point) == expected


def test_cardinal_derivatives():
    assert eval_box_derivative(build_box(X4), S, (1, )) == HALF
    assert eval_box_derivative(build_box(X3), S, (HALF, )) == HALF
    assert eval_box_derivative(build_box(X4), S ** 2, (2, )) == -2


@pytest.mark.parametrize('n_plus_1', [2, 3, 4, 5, 6, 7])
def test_engine_matches_closed_form(n_plus_1):
    spline = build_box(VectorList(1, [(1, )] * n_plus_1))
    for j in range(4 * n_plus_1 + 1):
        u = Fraction(j, 4)
        assert eval_box_derivative(spline, None, (u, )) == \
            cardinal_bspline(n_plus_1, u)
        # derivatives below order n_plus_1 - 1 are continuous everywhere
        for order in range(1, n_plus_1 - 1):
            assert eval_box_derivative(spline, S ** order, (u, )) == \
                cardinal_bspline(n_plus_1, u, order)


def test_courant_element():
    spline = build_box(FIG1)
    assert spline.kind is SplineKind.BOX
    assert eval_box_derivative(spline, None, (1, 1)) == 1
    assert eval_box_derivative(spline, None, (HALF, HALF)) == HALF
    assert eval_box_derivative(spline, None, (2, 0)) == 0
    assert eval_box_derivative(spline, None, (3, 3)) == 0


def test_flipped_list_is_translated():
    flipped = VectorList(2, [(-1, 0), (0, 1), (1, 1)])
    spline = build_box(flipped)
    assert spline.translation == (-1, 0)
    assert eval_box_derivative(spline, None, (0, 1)) == 1
    assert eval_box_derivative(spline, None, (1, 1)) == 0


def test_mixed_signs_in_one_dimension():
    mixed = VectorList(1, [(1, ), (-1, ), (1, )])
    spline = build_box(mixed)
    assert eval_box_derivative(spline, None, (0, )) == HALF
    assert eval_box_derivative(spline, None, (1, )) == HALF
    assert eval_box_derivative(spline, None, (-1, )) == 0


def test_discontinuity_detected():
    spline = build_box(SQUARE)
    with pytest.raises(DiscontinuityError) as excinfo:
        eval_box_derivative(spline, None, (0, HALF))
    assert sorted(excinfo.value.limits) == [0, 1]
    assert eval_box_derivative(spline, None, (0, HALF), False) in (0, 1)
    assert eval_box_derivative(spline, None, (HALF, HALF)) == 1


def test_genericity():
    spline = build_box(X3)
    assert is_generic(spline, (HALF, ))
    assert not is_generic(spline, (2, ))
    with pytest.raises(WallPointError):
        require_generic(spline, (2, ))
    multivariate = build_multivariate(FIG1)
    assert is_generic(multivariate, (2, 1))
    assert not is_generic(multivariate, (1, 1))


def test_operator_dimension_mismatch():
    with pytest.raises(ValueError):
        eval_box_derivative(build_box(FIG1), S, (1, 1))
    with pytest.raises(ValueError):
        eval_box_derivative(build_box(FIG1), None, (1, ))


def test_to_dict():
    payload = build_box(X3).to_dict()
    assert payload['kind'] == 'box'
    assert payload['degree'] == 2
    assert payload['translation'] == [0]
    assert len(payload['shifts']) == 4
    assert 'shifts' not in build_multivariate(X3).to_dict()
