from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple


class BoxInterpError(Exception):
    """Base class of every error raised by boxinterp"""

    def to_dict(self: 'BoxInterpError') -> Dict[str, Any]:
        return {
            'error': str(self),
            'type': self.__class__.__name__
        }


class PreconditionError(BoxInterpError, ValueError):
    """The input violates a hypothesis of the interpolation problem"""


class NonSpanningError(PreconditionError):
    pass


class NotTotallyUnimodularError(PreconditionError):

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    det: Fraction

    def __init__(
        self: 'NotTotallyUnimodularError',
        rows: Tuple[int, ...],
        cols: Tuple[int, ...],
        det: Fraction
    ) -> None:
        super().__init__(
            'list is not totally unimodular: submatrix rows={!r} '
            'cols={!r} has determinant {}'.format(list(rows), list(cols), det)
        )
        self.rows = rows
        self.cols = cols
        self.det = det

    def to_dict(self: 'NotTotallyUnimodularError') -> Dict[str, Any]:
        result: Dict[str, Any] = super().to_dict()
        result['witness'] = {
            'rows': list(self.rows),
            'cols': list(self.cols),
            'det': self.det
        }
        return result


class SupportError(PreconditionError):

    outside: List[Tuple[int, ...]]

    def __init__(
        self: 'SupportError',
        outside: List[Tuple[int, ...]]
    ) -> None:
        super().__init__(
            'values given outside the interior lattice points: {}'
            .format([list(pt) for pt in outside])
        )
        self.outside = outside


class MembershipError(PreconditionError):
    """A polynomial is not contained in the expected P-space"""


class WallPointError(PreconditionError):
    """A sample point lies on a wall although a generic point is required"""


class ConsistencyError(BoxInterpError, AssertionError):
    """A certified mathematical identity failed; this indicates a bug"""


class DiscontinuityError(BoxInterpError, ArithmeticError):

    limits: Tuple[Fraction, Fraction]
    directions: Tuple[Tuple[int, ...], Tuple[int, ...]]

    def __init__(
        self: 'DiscontinuityError',
        point: Tuple[Fraction, ...],
        limits: Tuple[Fraction, Fraction],
        directions: Tuple[Tuple[int, ...], Tuple[int, ...]],
        message: Optional[str] = None
    ) -> None:
        super().__init__(
            message or
            'one-sided limits disagree at {}: {} (direction {}) '
            'and {} (direction {})'.format(
                '({})'.format(', '.join(str(c) for c in point)),
                limits[0], list(directions[0]),
                limits[1], list(directions[1])
            )
        )
        self.limits = limits
        self.directions = directions

    def to_dict(self: 'DiscontinuityError') -> Dict[str, Any]:
        result: Dict[str, Any] = super().to_dict()
        result['limits'] = list(self.limits)
        return result
