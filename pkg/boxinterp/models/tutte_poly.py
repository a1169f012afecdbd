from typing import Any, Dict, List, Tuple


class TuttePoly:
    """Bivariate polynomial in x, y with non-negative integer coefficients"""

    coefficients: Dict[Tuple[int, int], int]

    def __init__(
        self: 'TuttePoly',
        coefficients: Dict[Tuple[int, int], int]
    ) -> None:
        for exps, coef in coefficients.items():
            if coef < 0:
                raise ValueError(
                    'Tutte coefficient of x^{}y^{} is negative: {}'
                    .format(exps[0], exps[1], coef)
                )
        self.coefficients = {
            exps: coef for exps, coef in coefficients.items() if coef}

    def evaluate(self: 'TuttePoly', x: int, y: int) -> int:
        return sum(
            coef * x ** i * y ** j
            for (i, j), coef in self.coefficients.items()
        )

    def sorted_terms(self: 'TuttePoly') -> List[Tuple[Tuple[int, int], int]]:
        return sorted(
            self.coefficients.items(),
            key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0])
        )

    def __eq__(self: 'TuttePoly', other: object) -> bool:
        if not isinstance(other, TuttePoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self: 'TuttePoly') -> int:
        return hash(frozenset(self.coefficients.items()))

    def __str__(self: 'TuttePoly') -> str:
        parts: List[str] = []
        for (i, j), coef in self.sorted_terms():
            factors: List[str] = []
            if i:
                factors.append('x' if i == 1 else 'x^{}'.format(i))
            if j:
                factors.append('y' if j == 1 else 'y^{}'.format(j))
            if not factors:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(' '.join(factors))
            else:
                parts.append('{} {}'.format(coef, ' '.join(factors)))
        return ' + '.join(parts) or '0'

    def __repr__(self: 'TuttePoly') -> str:
        return '<TuttePoly {}>'.format(self)

    def to_dict(self: 'TuttePoly') -> Dict[str, Any]:
        return {
            'terms': [
                {'x': i, 'y': j, 'coef': coef}
                for (i, j), coef in self.sorted_terms()
            ],
            'text': str(self)
        }
