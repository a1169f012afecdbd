from fractions import Fraction
from typing import Any

import orjson

DUMP_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE


def rational_text(value: Fraction) -> str:
    """"p/q", or "p" for integers"""
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def _exact_default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return rational_text(obj)
    raise TypeError


def _float_default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return float(obj)
    return _exact_default(obj)


def dumps(payload: Any, as_float: bool = False) -> bytes:
    return orjson.dumps(
        payload,
        default=_float_default if as_float else _exact_default,
        option=DUMP_OPTIONS
    )


def loads(data: bytes) -> Any:
    return orjson.loads(data)
