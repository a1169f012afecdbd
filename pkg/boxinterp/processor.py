from typing import Any, Callable, Dict, List

from .models.message import Message
from .parsers.matrix import Problem

Payload = Dict[str, Any]
ProcessorFunc = Callable[[Problem, List[Message]], Payload]


class Processor:
    command_name: str
    _processor: ProcessorFunc

    def __init__(
        self: 'Processor',
        command_name: str,
        processor: ProcessorFunc
    ) -> None:
        self.command_name = command_name
        # XXX: use setattr to avoid mypy warning:
        # https://github.com/python/mypy/issues/2427
        setattr(self, '_processor', processor)

    def __call__(
        self: 'Processor',
        problem: Problem,
        messages: List[Message]
    ) -> Payload:
        return self._processor(problem, messages)  # type: ignore


def report_processor(
    command_name: str
) -> Callable[[ProcessorFunc], Processor]:

    def wrapper(processor: ProcessorFunc) -> Processor:
        return Processor(command_name, processor)

    return wrapper
