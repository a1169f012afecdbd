import cython  # type: ignore
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import (
    Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
)

from .rat_matrix import Scalar, parse_integer, parse_rational

Exps = Tuple[int, ...]


@cython.cfunc
@cython.inline
@cython.returns(int)
def _falling_factorial(n: int, k: int) -> int:
    result: int = 1
    for i in range(k):
        result *= n - i
    return result


def _monomial_key(exps: Exps) -> Tuple[int, Tuple[int, ...]]:
    return sum(exps), tuple(-e for e in exps)


def homogeneous_monomials(nvars: int, degree: int) -> List[Exps]:
    """All exponent vectors of the given total degree, in graded order"""
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    result: List[Exps] = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps: List[int] = [0] * nvars
        for var in combo:
            exps[var] += 1
        result.append(tuple(exps))
    return sorted(result, key=_monomial_key)


def monomials_up_to(nvars: int, degree: int) -> List[Exps]:
    result: List[Exps] = []
    for k in range(degree + 1):
        result.extend(homogeneous_monomials(nvars, k))
    return result


class MultiPoly:
    """Polynomial in s_1, ..., s_n with exact rational coefficients

    The same value acts as the differential operator p(D) obtained by
    replacing s_i with the partial derivative along the i-th coordinate.
    """

    nvars: int
    terms: Dict[Exps, Fraction]

    def __init__(
        self: 'MultiPoly',
        nvars: int,
        terms: Optional[Mapping[Exps, Scalar]] = None
    ) -> None:
        self.nvars = nvars
        self.terms = {}
        for exps, coef in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(
                    'exponent vector {!r} does not have {} entries'
                    .format(exps, nvars)
                )
            if any(e < 0 for e in exps):
                raise ValueError(
                    'negative exponent in {!r}'.format(exps))
            if coef != 0:
                self.terms[tuple(exps)] = Fraction(coef)

    @classmethod
    def zero(cls, nvars: int) -> 'MultiPoly':
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> 'MultiPoly':
        return cls(nvars, {(0, ) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> 'MultiPoly':
        if not 0 <= index < nvars:
            raise IndexError(
                'variable index {} out of range for {} variables'
                .format(index, nvars)
            )
        exps: List[int] = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def from_list(
        cls,
        payload: Iterable[Mapping[str, Any]],
        nvars: int = -1
    ) -> 'MultiPoly':
        """Parse the [{"exps": [...], "coef": "p/q"}, ...] JSON form"""
        terms: Dict[Exps, Fraction] = {}
        for item in payload:
            exps: Exps = tuple(parse_integer(e) for e in item['exps'])
            if nvars < 0:
                nvars = len(exps)
            coef: Fraction = parse_rational(item['coef'])
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return cls(max(nvars, 0), terms)

    def _check_nvars(self: 'MultiPoly', other: 'MultiPoly') -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                'polynomials in {} and {} variables do not mix'
                .format(self.nvars, other.nvars)
            )

    def is_zero(self: 'MultiPoly') -> bool:
        return not self.terms

    def sorted_terms(self: 'MultiPoly') -> List[Tuple[Exps, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _monomial_key(t[0]))

    def degree(self: 'MultiPoly') -> int:
        """Total degree; -1 for the zero polynomial"""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(
        self: 'MultiPoly',
        degree: Optional[int] = None
    ) -> bool:
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def homogeneous_part(self: 'MultiPoly', degree: int) -> 'MultiPoly':
        return MultiPoly(self.nvars, {
            e: c for e, c in self.terms.items() if sum(e) == degree})

    def coefficient(self: 'MultiPoly', exps: Exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def coefficient_vector(
        self: 'MultiPoly',
        monomials: Sequence[Exps]
    ) -> List[Fraction]:
        """Coordinates against a monomial list that covers the support"""
        covered = set(monomials)
        stray = [e for e in self.terms if e not in covered]
        if stray:
            raise ValueError(
                'monomials {!r} are outside the coordinate list'
                .format(sorted(stray, key=_monomial_key))
            )
        return [self.coefficient(e) for e in monomials]

    @classmethod
    def from_coefficients(
        cls,
        nvars: int,
        monomials: Sequence[Exps],
        coefficients: Sequence[Scalar]
    ) -> 'MultiPoly':
        return cls(nvars, dict(zip(monomials, coefficients)))

    def __add__(self: 'MultiPoly', other: 'MultiPoly') -> 'MultiPoly':
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_nvars(other)
        terms: Dict[Exps, Fraction] = dict(self.terms)
        for exps, coef in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return MultiPoly(self.nvars, terms)

    def __neg__(self: 'MultiPoly') -> 'MultiPoly':
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self: 'MultiPoly', other: 'MultiPoly') -> 'MultiPoly':
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def scale(self: 'MultiPoly', factor: Scalar) -> 'MultiPoly':
        return MultiPoly(
            self.nvars, {e: c * factor for e, c in self.terms.items()})

    def __mul__(
        self: 'MultiPoly',
        other: Union['MultiPoly', Scalar]
    ) -> 'MultiPoly':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_nvars(other)
        terms: Dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps: Exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    def __rmul__(self: 'MultiPoly', other: Scalar) -> 'MultiPoly':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self: 'MultiPoly', exponent: int) -> 'MultiPoly':
        if exponent < 0:
            raise ValueError('negative power of a polynomial')
        result: MultiPoly = MultiPoly.constant(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self: 'MultiPoly', other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self: 'MultiPoly') -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def derivative(self: 'MultiPoly', index: int) -> 'MultiPoly':
        terms: Dict[Exps, Fraction] = {}
        for exps, coef in self.terms.items():
            if exps[index] == 0:
                continue
            lowered: List[int] = list(exps)
            lowered[index] -= 1
            terms[tuple(lowered)] = coef * exps[index]
        return MultiPoly(self.nvars, terms)

    def apply_diff(self: 'MultiPoly', target: 'MultiPoly') -> 'MultiPoly':
        """p(D) applied to `target`, term by term"""
        self._check_nvars(target)
        terms: Dict[Exps, Fraction] = {}
        for op_exps, op_coef in self.terms.items():
            for exps, coef in target.terms.items():
                if any(b < a for a, b in zip(op_exps, exps)):
                    continue
                factor: int = 1
                for a, b in zip(op_exps, exps):
                    factor *= _falling_factorial(b, a)
                lowered: Exps = tuple(b - a for a, b in zip(op_exps, exps))
                terms[lowered] = (
                    terms.get(lowered, Fraction(0)) +
                    op_coef * coef * factor
                )
        return MultiPoly(self.nvars, terms)

    def compose(
        self: 'MultiPoly',
        images: Sequence['MultiPoly']
    ) -> 'MultiPoly':
        """Substitute s_i by images[i]; all images share one ring"""
        if len(images) != self.nvars:
            raise ValueError(
                'expect {} substitutions, got {}'
                .format(self.nvars, len(images))
            )
        if not images:
            return MultiPoly(0, self.terms)
        target_nvars: int = images[0].nvars
        powers: List[List[MultiPoly]] = [
            [MultiPoly.constant(target_nvars, 1)] for _ in images]
        result: MultiPoly = MultiPoly.zero(target_nvars)
        for exps, coef in self.terms.items():
            term: MultiPoly = MultiPoly.constant(target_nvars, coef)
            for var, e in enumerate(exps):
                cache = powers[var]
                while len(cache) <= e:
                    cache.append(cache[-1] * images[var])
                if e:
                    term = term * cache[e]
            result = result + term
        return result

    def project_vars(
        self: 'MultiPoly',
        quotient_map: Sequence[Sequence[int]]
    ) -> 'MultiPoly':
        """Image under the algebra map induced by a linear map of lattices

        s_i goes to the linear form given by column i of `quotient_map`.
        """
        if any(len(row) != self.nvars for row in quotient_map):
            raise ValueError(
                'projection map columns do not match {} variables'
                .format(self.nvars)
            )
        images: List[MultiPoly] = [
            linear_form([row[i] for row in quotient_map])
            if quotient_map else MultiPoly.zero(0)
            for i in range(self.nvars)
        ]
        return self.compose(images)

    def evaluate(self: 'MultiPoly', point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(
                'cannot evaluate a polynomial in {} variables at {!r}'
                .format(self.nvars, tuple(point))
            )
        total: Fraction = Fraction(0)
        for exps, coef in self.terms.items():
            value: Fraction = coef
            for x, e in zip(point, exps):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return total

    def integrate(
        self: 'MultiPoly',
        lower: Scalar,
        upper: Scalar
    ) -> Fraction:
        """Definite integral of a univariate polynomial"""
        if self.nvars != 1:
            raise ValueError(
                'definite integration needs a univariate polynomial, '
                'got {} variables'.format(self.nvars)
            )
        total: Fraction = Fraction(0)
        for (e, ), coef in self.terms.items():
            total += coef * (
                Fraction(upper) ** (e + 1) - Fraction(lower) ** (e + 1)
            ) / (e + 1)
        return total

    def to_list(self: 'MultiPoly') -> List[Dict[str, Any]]:
        return [
            {'exps': list(exps), 'coef': coef}
            for exps, coef in self.sorted_terms()
        ]

    def variable_names(self: 'MultiPoly') -> List[str]:
        if self.nvars == 1:
            return ['s']
        return ['s{}'.format(i + 1) for i in range(self.nvars)]

    def _monomial_text(self: 'MultiPoly', exps: Exps) -> str:
        factors: List[str] = []
        for name, e in zip(self.variable_names(), exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append('{}^{}'.format(name, e))
        return ' '.join(factors)

    def __str__(self: 'MultiPoly') -> str:
        if not self.terms:
            return '0'
        text: str = ''
        for idx, (exps, coef) in enumerate(self.sorted_terms()):
            magnitude: Fraction = abs(coef)
            monomial: str = self._monomial_text(exps)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            elif magnitude.denominator == 1:
                body = '{} {}'.format(magnitude, monomial)
            else:
                body = '({}){}'.format(magnitude, monomial)
            if idx == 0:
                text = ('-' if coef < 0 else '') + body
            else:
                text += (' - ' if coef < 0 else ' + ') + body
        return text

    def __repr__(self: 'MultiPoly') -> str:
        return '<MultiPoly nvars={} {}>'.format(self.nvars, self)


def linear_form(vector: Sequence[Scalar]) -> MultiPoly:
    """p_v = Σ v_i s_i"""
    nvars: int = len(vector)
    terms: Dict[Exps, Scalar] = {}
    for i, v in enumerate(vector):
        exps: List[int] = [0] * nvars
        exps[i] = 1
        terms[tuple(exps)] = v
    return MultiPoly(nvars, terms)


def product_form(vectors: Iterable[Sequence[int]], nvars: int) -> MultiPoly:
    """p_Y = ∏ p_y; the empty product is 1"""
    result: MultiPoly = MultiPoly.constant(nvars, 1)
    for vec in vectors:
        result = result * linear_form(vec)
    return result
