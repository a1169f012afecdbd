import click
from typing import Any, Dict, List

from ..cli import cli
from ..models.message import Message
from ..models.tutte_poly import TuttePoly
from ..parsers.matrix import Problem
from ..processor import Processor, report_processor
from ..utils.tutte import tutte as tutte_polynomial


@cli.command('tutte')
@click.option(
    '--cross-check/--no-cross-check',
    default=False,
    help=('Compare deletion-contraction against the corank-nullity '
          'expansion'))
def tutte(cross_check: bool) -> Processor:
    """Tutte polynomial of the matroid of X

    T(0, 1) counts interior lattice points and T(1, 1) bases.
    """

    @report_processor('tutte')
    def processor(
        problem: Problem,
        messages: List[Message]
    ) -> Dict[str, Any]:
        poly: TuttePoly = tutte_polynomial(
            problem.x, cross_check=cross_check)
        payload: Dict[str, Any] = poly.to_dict()
        payload['evaluations'] = [
            {'x': x, 'y': y, 'value': poly.evaluate(x, y)}
            for x, y in ((0, 1), (1, 1))
        ]
        return payload

    return processor
