import io
from fractions import Fraction

import pytest

from boxinterp.models.multi_poly import MultiPoly
from boxinterp.models.rat_matrix import parse_integer, parse_rational
from boxinterp.models.vector_list import VectorList
from boxinterp.parsers import matrix
from boxinterp.parsers.values import parse_point, parse_poly
from boxinterp.utils import codec

from .conftest import data_path


def test_parse_vector_list():
    assert matrix.parse_vector_list({'vectors': [[1, 0], [0, 1]]}) == \
        VectorList(2, [(1, 0), (0, 1)])
    assert matrix.parse_vector_list({'dim': 0, 'vectors': []}) == \
        VectorList(0)
    with pytest.raises(ValueError):
        matrix.parse_vector_list({'vectors': []})
    with pytest.raises(ValueError):
        matrix.parse_vector_list({'vectors': [[True]]})
    with pytest.raises(KeyError):
        matrix.parse_vector_list({'dim': 1})


def test_load_files():
    with open(data_path('k4.json'), 'rb') as fp:
        problem = matrix.load(fp)
    assert problem.x.dim == 3
    assert len(problem.x) == 6
    assert problem.values is None
    with open(data_path('x3_values.json'), 'rb') as fp:
        problem = matrix.load(fp)
    assert problem.values is not None
    assert problem.values[(1, )] == 1
    assert problem.values.support == [(1, )]
    with pytest.raises(ValueError):
        matrix.load(io.BytesIO(b'[1, 2]'))


def test_parse_point():
    assert parse_point('1/2, 3', 2) == (Fraction(1, 2), 3)
    assert parse_point('', 0) == ()
    with pytest.raises(ValueError):
        parse_point('1', 2)
    with pytest.raises(ValueError):
        parse_point('a', 1)
    with pytest.raises(ValueError):
        parse_point('1/0', 1)


@pytest.mark.parametrize('value,expected', [
    (3, 3), ('-7', -7), (4.0, 4), ('12/4', 3), (Fraction(6, 3), 2),
])
def test_parse_integer(value, expected):
    assert parse_integer(value) == expected


@pytest.mark.parametrize('value', [1.5, '1/2', '1/0', True, 'x'])
def test_parse_integer_rejects(value):
    with pytest.raises(ValueError):
        parse_integer(value)


def test_parse_rational():
    assert parse_rational(' -3/6 ') == Fraction(-1, 2)
    assert parse_rational(0.125) == Fraction(1, 8)
    with pytest.raises(ValueError):
        parse_rational('2/0')
    with pytest.raises(ValueError):
        parse_rational(False)


def test_parse_poly():
    assert parse_poly(None, 2) is None
    assert parse_poly('[{"exps": [0, 2], "coef": "-1/3"}]', 2) == \
        MultiPoly(2, {(0, 2): Fraction(-1, 3)})
    assert parse_poly('[]', 2) == MultiPoly.zero(2)
    with pytest.raises(ValueError):
        parse_poly('{"exps": [1]}', 1)
    with pytest.raises(ValueError):
        parse_poly('[{"exps": [1], "coef": 1}]', 2)


def test_codec():
    payload = {'value': Fraction(-3, 4), 'whole': Fraction(2), 'n': 1}
    assert codec.loads(codec.dumps(payload)) == {
        'value': '-3/4', 'whole': '2', 'n': 1}
    assert codec.loads(codec.dumps(payload, as_float=True)) == {
        'value': -0.75, 'whole': 2.0, 'n': 1}
    assert codec.dumps({}).endswith(b'\n')
    with pytest.raises(TypeError):
        codec.dumps({'bad': object()})
