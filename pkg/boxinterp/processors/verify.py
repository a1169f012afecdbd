import click
from typing import Any, Dict, List

from ..cli import cli
from ..models.message import Message
from ..models.report import CheckReport
from ..parsers.matrix import Problem
from ..processor import Processor, report_processor
from ..utils.oracle import DEFAULT_MC_SAMPLES
from ..utils.verify import DEFAULT_SEED, DEFAULT_VERIFY_MAX_N, verify as run


@cli.command('verify')
@click.option(
    '--max-n',
    type=int,
    default=DEFAULT_VERIFY_MAX_N,
    show_default=True,
    help='Only the cardinal check runs on lists longer than this')
@click.option(
    '--samples',
    type=int,
    default=DEFAULT_MC_SAMPLES,
    show_default=True,
    help='Monte Carlo samples per point; 0 skips the estimate')
@click.option(
    '--seed',
    type=int,
    default=DEFAULT_SEED,
    show_default=True,
    help='Seed of every random sample')
def verify(max_n: int, samples: int, seed: int) -> Processor:
    """Run the structural checks of the spline and interpolation engine

    Exits with status 1 when any check fails.
    """

    @report_processor('verify')
    def processor(
        problem: Problem,
        messages: List[Message]
    ) -> Dict[str, Any]:
        local: List[Message] = []
        reports: List[CheckReport] = run(
            problem.x, local, max_n, samples, seed)
        messages.extend(local)
        return {
            'passed': all(report.passed for report in reports),
            'checks': [report.to_dict() for report in reports],
            'messages': [message.to_dict() for message in local]
        }

    return processor
