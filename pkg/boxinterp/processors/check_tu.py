from fractions import Fraction
from typing import List, Optional, TypedDict

from ..cli import cli
from ..models.message import Message
from ..parsers.matrix import Problem
from ..processor import Processor, report_processor
from ..utils.unimodular import Violation


class Witness(TypedDict):
    rows: List[int]
    cols: List[int]
    det: Fraction


# XXX: remove total=False after upgraded to 3.11 (PEP 655)
class Payload(TypedDict, total=False):
    tu: bool
    witness: Witness


@cli.command('check-tu')
def check_tu() -> Processor:
    """Check whether every square submatrix has determinant 0 or ±1

    The first offending submatrix (smallest first) is reported as a
    witness.
    """

    @report_processor('check-tu')
    def processor(
        problem: Problem,
        messages: List[Message]
    ) -> Payload:
        violation: Optional[Violation] = problem.x.tu_violation()
        payload: Payload = {'tu': violation is None}
        if violation is not None:
            rows, cols, det = violation
            payload['witness'] = {
                'rows': list(rows),
                'cols': list(cols),
                'det': det
            }
        return payload

    return processor
