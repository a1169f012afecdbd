from . import check_tu
from . import points
from . import tutte
from . import pspace
from . import spline_eval
from . import interpolate
from . import verify

__all__ = [
    'check_tu',
    'points',
    'tutte',
    'pspace',
    'spline_eval',
    'interpolate',
    'verify'
]
