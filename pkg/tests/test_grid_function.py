from fractions import Fraction

import pytest

from boxinterp.models.grid_function import GridFunction


def test_zero_values_are_dropped():
    f = GridFunction(1, {(1, ): 0, (2, ): 3})
    assert f.support == [(2, )]
    assert f[(1, )] == 0
    assert f == GridFunction(1, {(2, ): 3})
    assert GridFunction.zero(2).is_zero()


def test_arithmetic():
    f = GridFunction.delta((1, 1))
    g = GridFunction(2, {(1, 1): 2, (0, 1): Fraction(1, 2)})
    assert f + g == GridFunction(2, {(1, 1): 3, (0, 1): Fraction(1, 2)})
    assert (g - g).is_zero()
    assert (-f)[(1, 1)] == -1
    assert g.scale(2)[(0, 1)] == 1
    with pytest.raises(ValueError):
        f + GridFunction.delta((1, ))


def test_from_list():
    f = GridFunction.from_list([
        {'point': [1], 'value': '1/2'},
        {'point': [2], 'value': 3},
    ], 1)
    assert f.items() == [((1, ), Fraction(1, 2)), ((2, ), 3)]
    with pytest.raises(ValueError):
        GridFunction.from_list([
            {'point': [1], 'value': 1},
            {'point': [1], 'value': 2},
        ], 1)
    with pytest.raises(ValueError):
        GridFunction.from_list([{'point': [1, 2], 'value': 1}], 1)


def test_to_dict():
    f = GridFunction(1, {(2, ): 1, (1, ): Fraction(-1, 3)})
    assert f.to_dict() == {
        'dim': 1,
        'values': [
            {'point': [1], 'value': Fraction(-1, 3)},
            {'point': [2], 'value': 1},
        ]
    }


def test_points_must_be_integral():
    with pytest.raises(ValueError):
        GridFunction.from_list([{'point': [1.5], 'value': '1'}], 1)
    with pytest.raises(ValueError):
        GridFunction.from_list([{'point': ['3/2'], 'value': '1'}], 1)
    with pytest.raises(ValueError):
        GridFunction.from_list([{'point': [True], 'value': '1'}], 1)
    with pytest.raises(ValueError):
        GridFunction(1, {(Fraction(1, 2), ): 1})
    f = GridFunction.from_list([{'point': [2.0], 'value': '1'}], 1)
    assert f.support == [(2, )]


def test_values_must_be_rational():
    with pytest.raises(ValueError):
        GridFunction.from_list([{'point': [1], 'value': '1/0'}], 1)
    with pytest.raises(ValueError):
        GridFunction.from_list([{'point': [1], 'value': 'one'}], 1)
    with pytest.raises(ValueError):
        GridFunction.from_list([{'point': [1], 'value': False}], 1)
    f = GridFunction.from_list([{'point': [1], 'value': 0.25}], 1)
    assert f[(1, )] == Fraction(1, 4)
