import click
from typing import Any, Dict, List, Optional

from ..cli import cli
from ..models.errors import ConsistencyError
from ..models.grid_function import GridFunction
from ..models.interpolant import Interpolant
from ..models.message import Message, MessageLevel
from ..parsers.matrix import Problem
from ..processor import Processor, report_processor
from ..utils.interpolate import solve_direct, solve_recursive


@cli.command('interpolate')
@click.option(
    '--solver',
    type=click.Choice(['direct', 'recursive', 'both']),
    default='both',
    help=('Collocation solve, deletion-contraction recursion, or both '
          'with their results compared'))
@click.option(
    '--pivot',
    type=int,
    help='0-based index of the top-level pivot of the recursive solver')
def interpolate(solver: str, pivot: Optional[int]) -> Processor:
    """The unique p in P_-(X) with p(D)B_X = f on Z_-(X)

    Values are read from a values file given by -m/--matrix; points
    without a value are zero.
    """

    @report_processor('interpolate')
    def processor(
        problem: Problem,
        messages: List[Message]
    ) -> Dict[str, Any]:
        values: GridFunction = (
            problem.values if problem.values is not None
            else GridFunction.zero(problem.x.dim)
        )
        if problem.values is None:
            messages.append(Message(
                'interpolate', MessageLevel.WARNING,
                'no values given; interpolating the zero function'
            ))
        result: Interpolant
        if solver == 'recursive':
            result = solve_recursive(problem.x, values, pivot)
        else:
            result = solve_direct(problem.x, values)
        if solver == 'both':
            recursive: Interpolant = solve_recursive(
                problem.x, values, pivot)
            if recursive != result:
                raise ConsistencyError(
                    'solvers disagree: direct {} and recursive {}'
                    .format(result.poly, recursive.poly)
                )
            messages.append(Message(
                'interpolate', MessageLevel.INFO,
                'direct and recursive solvers agree'
            ))
        return result.to_dict()

    return processor
