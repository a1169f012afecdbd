import click
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..cli import cli
from ..models.message import Message, MessageLevel
from ..models.multi_poly import MultiPoly
from ..models.spline import PiecewiseSpline
from ..parsers.matrix import Problem
from ..parsers.values import parse_point, parse_poly
from ..processor import Processor, report_processor
from ..utils.spline import (
    build_box, build_multivariate, eval_box_derivative, eval_multivariate,
    is_generic
)


@cli.command('spline-eval')
@click.option(
    '-p', '--point', 'point_texts',
    multiple=True,
    required=True,
    help='Comma separated rational coordinates, e.g. "1/2,1"')
@click.option(
    '-d', '--diff',
    type=str,
    help=('Differential operator p(D) as polynomial JSON '
          '[{"exps": [...], "coef": "p/q"}, ...]'))
@click.option(
    '--box/--multivariate',
    default=True,
    help=('Box spline B_X, or the multivariate spline T_X of the '
          'sign-normalized list'))
@click.option(
    '--check-continuity/--no-check-continuity',
    default=True,
    help='Compare the limits from every adjacent cell at wall points')
@click.option(
    '--dump/--no-dump',
    default=False,
    help='Also print the piecewise polynomial representation')
def spline_eval(
    point_texts: Tuple[str, ...],
    diff: Optional[str],
    box: bool,
    check_continuity: bool,
    dump: bool
) -> Processor:
    """Exact values of p(D)B_X or p(D)T_X"""

    @report_processor('spline-eval')
    def processor(
        problem: Problem,
        messages: List[Message]
    ) -> Dict[str, Any]:
        dim: int = problem.x.dim
        poly: Optional[MultiPoly] = parse_poly(diff, dim)
        spline: PiecewiseSpline = (
            build_box(problem.x) if box else build_multivariate(problem.x))
        values: List[Dict[str, Any]] = []
        for text in point_texts:
            point: Tuple[Fraction, ...] = parse_point(text, dim)
            if not is_generic(spline, point):
                messages.append(Message(
                    'spline-eval', MessageLevel.INFO,
                    'point {} lies on a wall; the value is the limit along '
                    'the generic perturbation'.format(text)
                ))
            value: Fraction = (
                eval_box_derivative(spline, poly, point, check_continuity)
                if box else eval_multivariate(spline, point, poly)
            )
            values.append({'point': list(point), 'value': value})
        payload: Dict[str, Any] = {
            'kind': spline.kind.value,
            'values': values
        }
        if dump:
            payload['spline'] = spline.to_dict()
        return payload

    return processor
