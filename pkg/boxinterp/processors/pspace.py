import click
from typing import Any, Dict, List

from ..cli import cli
from ..models.message import Message
from ..models.pspace_basis import PSpaceBasis
from ..parsers.matrix import Problem
from ..processor import Processor, report_processor
from ..utils.pspace import central_space, internal_space


@cli.command('pspace')
@click.option(
    '--internal/--central',
    default=True,
    help='Internal space P_-(X) or central space P(X)')
def pspace(internal: bool) -> Processor:
    """Graded basis and Hilbert sequence of a P-space"""

    @report_processor('pspace')
    def processor(
        problem: Problem,
        messages: List[Message]
    ) -> Dict[str, Any]:
        basis: PSpaceBasis = (
            internal_space(problem.x) if internal
            else central_space(problem.x)
        )
        payload: Dict[str, Any] = basis.to_dict()
        payload['text'] = [str(poly) for poly in basis.basis]
        return payload

    return processor
