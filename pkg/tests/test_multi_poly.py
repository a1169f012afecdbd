from fractions import Fraction

import numpy as np
import pytest

from boxinterp.models.multi_poly import (
    MultiPoly, homogeneous_monomials, linear_form, monomials_up_to,
    product_form
)

S = MultiPoly.variable(1, 0)
S1 = MultiPoly.variable(2, 0)
S2 = MultiPoly.variable(2, 1)


def test_monomial_order():
    assert homogeneous_monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert monomials_up_to(2, 1) == [(0, 0), (1, 0), (0, 1)]
    assert homogeneous_monomials(0, 0) == [()]
    assert homogeneous_monomials(0, 1) == []


def test_arithmetic():
    poly = (S1 + S2) ** 2
    assert poly == MultiPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert poly - poly == MultiPoly.zero(2)
    assert (2 * S1).coefficient((1, 0)) == 2
    assert poly.degree() == 2
    assert poly.is_homogeneous(2)
    assert not (poly + MultiPoly.constant(2, 1)).is_homogeneous()
    assert MultiPoly.zero(1).degree() == -1
    with pytest.raises(ValueError):
        S + S1


def test_text():
    poly = MultiPoly(1, {(0, ): 1, (1, ): Fraction(1, 2)})
    assert str(poly) == '1 + (1/2)s'
    assert str(S1 - 3 * S2) == 's1 - 3 s2'
    assert str(MultiPoly.zero(2)) == '0'
    assert str(-(S ** 2)) == '-s^2'


def test_evaluate_and_integrate():
    poly = product_form([(1, 0), (1, 1)], 2)
    assert poly == S1 * S1 + S1 * S2
    assert poly.evaluate((2, Fraction(1, 2))) == 5
    assert (S ** 2).integrate(0, 3) == 9
    with pytest.raises(ValueError):
        poly.integrate(0, 1)


def test_apply_diff():
    target = S1 ** 2 * S2
    assert S1.apply_diff(target) == 2 * S1 * S2
    assert (S1 * S2).apply_diff(target) == 2 * S1
    assert (S2 ** 2).apply_diff(target).is_zero()
    assert target.derivative(1) == S1 ** 2


def test_compose_and_project():
    assert linear_form((1, -1)) == S1 - S2
    # s -> s1 + s2
    assert (S ** 2).compose([S1 + S2]) == (S1 + S2) ** 2
    projected = (S1 * S2).project_vars([(1, -1)])
    assert projected == -(S ** 2)


def test_coefficients():
    monomials = monomials_up_to(1, 2)
    poly = MultiPoly.from_coefficients(1, monomials, [1, 0, 3])
    assert poly.coefficient_vector(monomials) == [1, 0, 3]
    with pytest.raises(ValueError):
        poly.coefficient_vector(monomials[:2])


def test_from_list():
    poly = MultiPoly.from_list([
        {'exps': [1, 0], 'coef': '1/2'},
        {'exps': [1, 0], 'coef': 1},
        {'exps': [0, 0], 'coef': '-2'},
    ])
    assert poly == MultiPoly(2, {(1, 0): Fraction(3, 2), (0, 0): -2})
    assert poly.to_list()[0] == {'exps': [0, 0], 'coef': -2}
    with pytest.raises(ValueError):
        MultiPoly(2, {(1, ): 1})
    with pytest.raises(IndexError):
        MultiPoly.variable(1, 1)


def test_from_list_rejects_malformed_terms():
    with pytest.raises(ValueError):
        MultiPoly.from_list([{'exps': [0.5], 'coef': 1}])
    with pytest.raises(ValueError):
        MultiPoly.from_list([{'exps': [True], 'coef': 1}])
    with pytest.raises(ValueError):
        MultiPoly.from_list([{'exps': [-1], 'coef': 1}])
    with pytest.raises(ValueError):
        MultiPoly.from_list([{'exps': [1], 'coef': '1/0'}])
    assert MultiPoly.from_list([{'exps': [2.0], 'coef': 1}]) == S ** 2


def random_poly(
    rng: np.random.Generator,
    nvars: int,
    degree: int
) -> MultiPoly:
    return MultiPoly(nvars, {
        exps: Fraction(int(rng.integers(-3, 3, endpoint=True)),
                       int(rng.integers(1, 4, endpoint=True)))
        for exps in monomials_up_to(nvars, degree)
    })


@pytest.mark.parametrize('seed', range(6))
def test_apply_diff_is_a_ring_action(seed):
    rng = np.random.default_rng(seed)
    nvars = int(rng.integers(1, 3, endpoint=True))
    p, q = random_poly(rng, nvars, 2), random_poly(rng, nvars, 2)
    target = random_poly(rng, nvars, 4)
    other = random_poly(rng, nvars, 3)
    assert (p * q).apply_diff(target) == p.apply_diff(q.apply_diff(target))
    assert (p + q).apply_diff(target) == (
        p.apply_diff(target) + q.apply_diff(target))
    assert p.apply_diff(target + other) == (
        p.apply_diff(target) + p.apply_diff(other))
    assert MultiPoly.constant(nvars, 1).apply_diff(target) == target
    for index in range(nvars):
        assert MultiPoly.variable(nvars, index).apply_diff(target) == \
            target.derivative(index)


@pytest.mark.parametrize('seed', range(6))
def test_compose_is_a_ring_map(seed):
    rng = np.random.default_rng(seed)
    p, q = random_poly(rng, 2, 2), random_poly(rng, 2, 2)
    images = [random_poly(rng, 3, 1), random_poly(rng, 3, 1)]
    assert (p * q).compose(images) == p.compose(images) * q.compose(images)
    assert (p + q).compose(images) == p.compose(images) + q.compose(images)
    point = (Fraction(1, 2), -1, 3)
    inner = tuple(image.evaluate(point) for image in images)
    assert p.compose(images).evaluate(point) == p.evaluate(inner)
    assert p.compose([S1, S2]) == p
