import click
from typing import Any, BinaryIO, Dict, List, Union

from .processor import Payload, Processor
from .parsers import matrix
from .parsers.matrix import Problem
from .models.errors import BoxInterpError, PreconditionError
from .models.message import Message
from .utils import codec

EXIT_FAILURE = 1
EXIT_PRECONDITION = 2


@click.group(chain=True, invoke_without_command=True)
@click.option(
    '-m', '--matrix', 'matrix_file',
    type=click.File('rb'),
    default='-',
    help=('Vector list JSON {"dim": d, "vectors": [...]}, or a values '
          'file {"matrix": ..., "values": [...]}. Default: stdin'))
@click.option(
    '-o', '--output',
    type=click.File('wb'),
    default='-',
    help='Output file. Default: stdout')
@click.option(
    '--float/--exact', 'as_float',
    default=False,
    help='Render rationals as decimal approximations or exact strings')
@click.option(
    '-V/-q', '--verbose/--quiet',
    default=False,
    help='Verbose/quiet output')
@click.option(
    '--enable-profile/--disable-profile',
    default=False,
    help='Enable cProfile')
def cli(
    matrix_file: BinaryIO,
    output: BinaryIO,
    as_float: bool,
    verbose: bool,
    enable_profile: bool
) -> None:
    pass


def check_processors(processors: List[Processor]) -> None:
    if not processors:
        raise click.ClickException('No command is specified')


def call_processors(
    processors: List[Processor],
    problem: Problem,
    messages: List[Message]
) -> List[Payload]:
    return [processor(problem, messages) for processor in processors]


def error_payload(exc: Exception) -> Dict[str, Any]:
    if isinstance(exc, BoxInterpError):
        return exc.to_dict()
    return {'error': str(exc), 'type': exc.__class__.__name__}


def echo_messages(messages: List[Message]) -> None:
    for message in messages:
        click.echo(str(message), err=True)


@cli.result_callback()
def process_pipeline(
    processors: List[Processor],
    matrix_file: BinaryIO,
    output: BinaryIO,
    as_float: bool,
    verbose: bool,
    enable_profile: bool
) -> None:
    ctx: click.Context = click.get_current_context()
    check_processors(processors)
    messages: List[Message] = []
    payloads: List[Payload]

    try:
        problem: Problem = matrix.load(matrix_file)
        if enable_profile:
            import cProfile
            import pstats
            with cProfile.Profile() as profile:
                payloads = call_processors(processors, problem, messages)
                ps = pstats.Stats(profile)
                ps.print_stats()
        else:
            payloads = call_processors(processors, problem, messages)
    except PreconditionError as exc:
        output.write(codec.dumps(error_payload(exc), as_float))
        if verbose:
            echo_messages(messages)
        ctx.exit(EXIT_PRECONDITION)
    except (BoxInterpError, ValueError, KeyError, TypeError,
            IndexError, ZeroDivisionError) as exc:
        output.write(codec.dumps(error_payload(exc), as_float))
        if verbose:
            echo_messages(messages)
        ctx.exit(EXIT_FAILURE)

    result: Union[Payload, List[Payload]] = (
        payloads[0] if len(payloads) == 1 else payloads)
    output.write(codec.dumps(result, as_float))
    if verbose:
        echo_messages(messages)
    if any(payload.get('passed') is False for payload in payloads):
        ctx.exit(EXIT_FAILURE)
