from fractions import Fraction
from typing import Any, Optional, Tuple

from ..models.multi_poly import MultiPoly
from ..models.rat_matrix import parse_rational
from ..utils import codec


def parse_point(text: str, dim: int) -> Tuple[Fraction, ...]:
    """Comma separated rationals such as "1/2,3" """
    stripped: str = text.strip()
    point: Tuple[Fraction, ...] = tuple(
        parse_rational(part) for part in stripped.split(',')
    ) if stripped else ()
    if len(point) != dim:
        raise ValueError(
            'point {!r} does not have {} coordinates'.format(text, dim))
    return point


def parse_poly(text: Optional[str], nvars: int) -> Optional[MultiPoly]:
    """Polynomial JSON, [{"exps": [...], "coef": "p/q"}, ...]"""
    if text is None:
        return None
    payload: Any = codec.loads(text.encode('UTF-8'))
    if not isinstance(payload, list):
        raise ValueError(
            'a polynomial must be a JSON list of terms: {!r}'.format(text))
    poly: MultiPoly = MultiPoly.from_list(payload, nvars)
    if poly.nvars != nvars:
        raise ValueError(
            'polynomial {!r} is not in {} variables'.format(text, nvars))
    return poly
