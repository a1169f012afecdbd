from fractions import Fraction

import numpy as np
import pytest

from boxinterp.models.errors import (
    ConsistencyError, MembershipError, NotTotallyUnimodularError,
    PreconditionError, SupportError
)
from boxinterp.models.grid_function import GridFunction
from boxinterp.models.multi_poly import MultiPoly
from boxinterp.utils.interpolate import (
    check_commutativity, check_linearity, check_support,
    collocation_matrix, default_pivot, gamma, inverse_nabla, nabla,
    random_grid_function, sigma, solve_direct, solve_recursive
)
from boxinterp.utils.pspace import internal_space
from boxinterp.utils.zonotope import interior_lattice_points

from .conftest import (
    FIG1, GRAPHS, NON_TU, PIVOT_CASES, SMALL_SUITE, SQUARE, SUITE, X3, pivots
)

S = MultiPoly.variable(1, 0)
HALF = Fraction(1, 2)


def test_gamma():
    assert gamma(X3, S) == GridFunction(1, {(1, ): 1, (2, ): -1})
    assert gamma(X3, MultiPoly.constant(1, 1)) == GridFunction(
        1, {(1, ): HALF, (2, ): HALF})
    assert gamma(FIG1, MultiPoly.constant(2, 3)) == GridFunction(
        2, {(1, 1): 3})
    with pytest.raises(MembershipError):
        gamma(X3, S ** 2)


def test_nabla():
    assert nabla(GridFunction.delta((1, )), (1, )) == GridFunction(
        1, {(1, ): 1, (2, ): -1})
    with pytest.raises(ValueError):
        nabla(GridFunction.delta((1, )), (1, 0))


def test_sigma_and_inverse_nabla():
    contraction = FIG1.contract(2)
    assert sigma(GridFunction.delta((1, 1)), contraction) == \
        GridFunction.delta((0, ))
    g = GridFunction(2, {(1, 1): 1, (2, 2): -1})
    assert sigma(g, contraction).is_zero()
    h = inverse_nabla(g, contraction)
    assert h == GridFunction.delta((1, 1))
    assert nabla(h, contraction.pivot) == g
    with pytest.raises(ConsistencyError):
        inverse_nabla(GridFunction.delta((1, 1)), contraction)


def test_check_support():
    assert check_support(X3, GridFunction.delta((2, ))).points == (
        (1, ), (2, ))
    with pytest.raises(SupportError) as excinfo:
        check_support(X3, GridFunction.delta((3, )))
    assert excinfo.value.outside == [(3, )]
    with pytest.raises(ValueError):
        check_support(X3, GridFunction.delta((1, 1)))


def test_collocation_matrix():
    matrix = collocation_matrix(X3)
    assert matrix.to_rows() == [[HALF, 1], [HALF, -1]]


@pytest.mark.parametrize('a,b', [(1, 0), (0, 1), (2, -3), (HALF, 5)])
def test_solve_parallel(a, b):
    f = GridFunction(1, {(1, ): a, (2, ): b})
    expected = MultiPoly(1, {(0, ): a + b, (1, ): Fraction(a - b, 2)})
    assert solve_direct(X3, f).poly == expected
    assert solve_recursive(X3, f).poly == expected


def test_interpolant_payload():
    result = solve_direct(X3, GridFunction.delta((1, )))
    assert str(result.poly) == '1 + (1/2)s'
    assert result.certificate == [((1, ), 1), ((2, ), 0)]
    assert result.internal_basis_coords == [1, HALF]
    payload = result.to_dict()
    assert payload['text'] == '1 + (1/2)s'
    assert payload['certificate'][0] == {'point': [1], 'value': 1}


def test_fig1():
    f = GridFunction.delta((1, 1)).scale(7)
    assert solve_direct(FIG1, f).poly == MultiPoly.constant(2, 7)
    assert solve_recursive(FIG1, f).poly == MultiPoly.constant(2, 7)


@pytest.mark.parametrize('name', sorted(SMALL_SUITE))
def test_solvers_agree(name):
    x = SMALL_SUITE[name]
    rng = np.random.default_rng(7)
    for _ in range(3):
        f = random_grid_function(x, rng)
        direct = solve_direct(x, f)
        assert gamma(x, direct.poly) == f
        assert internal_space(x).contains(direct.poly)
        for index in range(len(x)):
            if x.is_coloop(index):
                continue
            assert solve_recursive(x, f, index) == direct


@pytest.mark.parametrize('name', sorted(SUITE))
def test_round_trip(name):
    x = SUITE[name]
    rng = np.random.default_rng(8)
    choices = pivots(x)[:2] or [None]
    for _ in range(5):
        f = random_grid_function(x, rng)
        direct = solve_direct(x, f)
        assert gamma(x, direct.poly) == f
        for index in choices:
            assert solve_recursive(x, f, index).poly == direct.poly


def test_round_trip_uses_two_pivots():
    assert all(
        len(pivots(x)) >= 2 for x in SUITE.values()
        if interior_lattice_points(x).points
    )


def test_empty_interior():
    assert len(interior_lattice_points(SQUARE)) == 0
    zero = GridFunction.zero(2)
    assert solve_direct(SQUARE, zero).poly.is_zero()
    assert solve_recursive(SQUARE, zero).poly.is_zero()
    with pytest.raises(SupportError):
        solve_direct(SQUARE, GridFunction.delta((0, 0)))


def test_preconditions():
    with pytest.raises(NotTotallyUnimodularError):
        solve_direct(NON_TU, GridFunction.zero(2))
    with pytest.raises(PreconditionError):
        solve_recursive(SQUARE, GridFunction.zero(2), 0)
    with pytest.raises(PreconditionError):
        default_pivot(GRAPHS['P3'])
    assert default_pivot(FIG1) == 0


@pytest.mark.parametrize('name,index', PIVOT_CASES)
def test_commutativity(name, index):
    report = check_commutativity(SUITE[name], index)
    assert report.passed, report.failures


def test_linearity():
    rng = np.random.default_rng(9)
    f = random_grid_function(X3, rng)
    g = random_grid_function(X3, rng)
    report = check_linearity(X3, f, g, Fraction(2, 3), -4)
    assert report.passed
