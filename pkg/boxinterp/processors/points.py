import click
from typing import Any, Dict, List

from ..cli import cli
from ..models.message import Message, MessageLevel
from ..models.zonotope import LatticePointSet
from ..parsers.matrix import Problem
from ..processor import Processor, report_processor
from ..utils.zonotope import (
    hrep, interior_lattice_points, lattice_points, quotient_bijection
)


@cli.command('points')
@click.option(
    '--interior/--closed',
    default=True,
    help='Lattice points of the open or the closed zonotope')
@click.option(
    '--halfspaces/--no-halfspaces',
    default=False,
    help='Also print the half-space representation of Z(X)')
@click.option(
    '--pivot',
    type=int,
    help=('Also pair Z_-(X) minus Z_-(X\\x) with Z_-(X/x) for the vector '
          'at this 0-based index'))
def points(
    interior: bool,
    halfspaces: bool,
    pivot: int
) -> Processor:
    """Lattice points of the zonotope Z(X)"""

    @report_processor('points')
    def processor(
        problem: Problem,
        messages: List[Message]
    ) -> Dict[str, Any]:
        found: LatticePointSet = (
            interior_lattice_points(problem.x) if interior
            else lattice_points(problem.x)
        )
        payload: Dict[str, Any] = found.to_dict()
        if halfspaces:
            payload.update(hrep(problem.x).to_dict())
        if pivot is not None:
            pairs = quotient_bijection(problem.x, pivot)
            payload['quotient'] = [
                {'point': list(pair.point), 'class': list(pair.image)}
                for pair in pairs
            ]
            messages.append(Message(
                'points', MessageLevel.INFO,
                'projection along vector {} is a bijection onto {} '
                'classes'.format(pivot, len(pairs))
            ))
        return payload

    return processor
