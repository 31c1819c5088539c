"""CLI Adapter - Command-line interface for the ALBO^id tableau."""
import sys
from dataclasses import dataclass, field

import click

from src.adapters.inbound.problem_parser import read_problem
from src.adapters.outbound import (
    ConsoleLogger,
    JsonLogger,
    TraceMode,
    TraceRecorder,
    format_model,
    render_trace,
)
from src.application.bounds import mu, step_bound
from src.application.normalizer import normalize_problem
from src.application.reasoner_service import create_reasoner
from src.application.standard_translation import print_formula, st_translate
from src.domain.entities.verdict import ResourceLimit
from src.domain.exceptions import AlboError, BoundOverflow, InputError
from src.domain.value_objects import (
    CalculusOptions,
    Limits,
    StrategyName,
    print_concept,
    strategy_for,
)
from src.ports.outbound import LoggerPort

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LIMIT = 3
EXIT_INTERNAL = 4

STRATEGY_CHOICES = [name.value for name in StrategyName]
TRACE_CHOICES = [mode.value for mode in TraceMode]


@dataclass(frozen=True)
class RunConfig:
    """Everything one `solve` run needs; built from the command line."""

    input_path: str
    strategy: StrategyName = StrategyName.DFS_ID
    limits: Limits = field(default_factory=Limits)
    trace: TraceMode = TraceMode.NONE
    trace_path: str | None = None
    model_path: str | None = None
    una: bool | None = None
    initial_depth: int = 64
    depth_increment: int = 64
    blocking: bool = True
    blocking_delay: int = 0
    merge_first: bool = True
    log_level: str = "WARNING"
    log_format: str = "text"


def _make_logger(level: str, log_format: str) -> LoggerPort:
    if log_format == "json":
        return JsonLogger(level=level, context={"tool": "albo-tableau"})
    return ConsoleLogger(level=level)


def _log_level(verbose: bool, quiet: bool) -> str:
    return "DEBUG" if verbose else ("ERROR" if quiet else "WARNING")


def run(config: RunConfig) -> int:
    """
    Decide the problem in config.input_path and report the verdict.

    Prints exactly one line (SAT, UNSAT or LIMIT <reason>) to stdout when a
    verdict is reached; everything else goes to stderr or to files.

    Returns:
        Exit status: 0 for SAT/UNSAT, 2 for bad input, 3 for a resource
        limit, 4 for internal errors
    """
    logger = _make_logger(config.log_level, config.log_format)
    recorder = TraceRecorder() if config.trace != TraceMode.NONE else None

    try:
        strategy = strategy_for(config.strategy, config.initial_depth, config.depth_increment)
        options = CalculusOptions(blocking=config.blocking, blocking_delay=config.blocking_delay)
    except ValueError as e:
        logger.error(f"Invalid configuration: {e}", exception=e)
        return EXIT_INPUT

    try:
        problem = read_problem(config.input_path)
        if config.una is not None:
            problem.una = config.una
        reasoner = create_reasoner(logger=logger, trace=recorder)
        report = reasoner.solve(
            problem,
            strategy,
            limits=config.limits,
            options=options,
            model_path=config.model_path,
            merge_first=config.merge_first,
        )
    except InputError as e:
        logger.error(f"{config.input_path}: {e}", exception=e)
        return EXIT_INPUT
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Cannot run {config.input_path}: {e}", exception=e)
        return EXIT_INPUT
    except AlboError as e:
        logger.error(f"Internal error: {e}", exception=e)
        return EXIT_INTERNAL
    except Exception as e:
        logger.error(f"Unexpected failure: {e}", exception=e)
        return EXIT_INTERNAL

    verdict = report.verdict
    click.echo(verdict.label)
    status = EXIT_LIMIT if isinstance(verdict, ResourceLimit) else EXIT_OK

    if recorder is not None:
        try:
            _write_trace(render_trace(recorder.events, config.trace), config.trace_path)
        except OSError as e:
            logger.error(f"Cannot write trace to {config.trace_path}: {e}", exception=e)
            return EXIT_INPUT
    return status


def _write_trace(document: str, path: str | None) -> None:
    if path is None:
        click.echo(document, err=True, nl=False)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(document)


@click.group()
@click.version_option(version="0.1.0", prog_name="albo-tableau")
def cli() -> None:
    """
    ALBO^id Tableau - decide satisfiability of ALBO^id concepts.

    Problems are read from .albo files; the verdict is printed on stdout,
    logs and traces go to stderr.
    """
    pass


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option(
    "--strategy", "-s",
    type=click.Choice(STRATEGY_CHOICES),
    default=StrategyName.DFS_ID.value,
    show_default=True,
    help="Branch selection strategy.",
)
@click.option(
    "--max-steps",
    type=click.IntRange(min=1),
    default=None,
    help="Limit on rule applications over the whole search.",
)
@click.option(
    "--max-branch-steps",
    type=click.IntRange(min=1),
    default=None,
    help="Limit on rule applications per branch. Default for dfs-ahb: the computed step bound.",
)
@click.option(
    "--timeout",
    type=click.FloatRange(min=0, min_open=True),
    default=None,
    help="Wall-clock limit in seconds.",
)
@click.option(
    "--trace",
    type=click.Choice(TRACE_CHOICES),
    default=TraceMode.NONE.value,
    show_default=True,
    help="Derivation trace format.",
)
@click.option(
    "--trace-out",
    default=None,
    help="File for the derivation trace. Default: stderr.",
)
@click.option(
    "--model-out",
    default=None,
    help="File for the model of a satisfiable problem.",
)
@click.option(
    "--una/--no-una",
    default=None,
    help="Override the unique name assumption of the problem file.",
)
@click.option(
    "--initial-depth",
    type=click.IntRange(min=1),
    default=64,
    show_default=True,
    help="dfs-id: rule applications per branch in the first iteration.",
)
@click.option(
    "--depth-increment",
    type=click.IntRange(min=1),
    default=64,
    show_default=True,
    help="dfs-id: added to the per-branch limit after each iteration.",
)
@click.option(
    "--no-blocking",
    is_flag=True,
    help="Disable the (ub) rule. For experiments only: termination is lost.",
)
@click.option(
    "--blocking-delay",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Enable (ub) only after this many (∃) applications in a branch.",
)
@click.option(
    "--distinct-first",
    is_flag=True,
    help="Explore the distinct side of (ub) before the merge side.",
)
@click.option(
    "--verbose", "-v",
    is_flag=True,
    help="Enable verbose output (DEBUG level logging).",
)
@click.option(
    "--quiet", "-q",
    is_flag=True,
    help="Suppress all output except errors.",
)
@click.option(
    "--log-format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Log line format on stderr.",
)
def solve(
    file: str,
    strategy: str,
    max_steps: int | None,
    max_branch_steps: int | None,
    timeout: float | None,
    trace: str,
    trace_out: str | None,
    model_out: str | None,
    una: bool | None,
    initial_depth: int,
    depth_increment: int,
    no_blocking: bool,
    blocking_delay: int,
    distinct_first: bool,
    verbose: bool,
    quiet: bool,
    log_format: str,
) -> None:
    """
    Decide satisfiability of the problem in FILE.

    Examples:

        # Default strategy (iterative deepening)
        albo-tableau solve problems/role-union-witness.albo

        # Breadth-first with a text trace
        albo-tableau solve problems/unsat-successor-chain.albo -s bfs --trace text

        # Write the model of a satisfiable problem
        albo-tableau solve problems/everywhere-successor.albo --model-out out/model.model
    """
    config = RunConfig(
        input_path=file,
        strategy=StrategyName(strategy),
        limits=Limits(
            max_steps_per_branch=max_branch_steps,
            max_total_steps=max_steps,
            wall_clock=timeout,
        ),
        trace=TraceMode(trace),
        trace_path=trace_out,
        model_path=model_out,
        una=una,
        initial_depth=initial_depth,
        depth_increment=depth_increment,
        blocking=not no_blocking,
        blocking_delay=blocking_delay,
        merge_first=not distinct_first,
        log_level=_log_level(verbose, quiet),
        log_format=log_format,
    )
    sys.exit(run(config))


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option(
    "--fo",
    is_flag=True,
    help="Also print the two-variable first-order translation.",
)
def normalize(file: str, fo: bool) -> None:
    """
    Print the core concept a problem is reduced to, with its size measures.
    """
    logger = ConsoleLogger(level="WARNING")
    try:
        normalized = normalize_problem(read_problem(file))
    except (InputError, OSError) as e:
        logger.error(f"{file}: {e}", exception=e)
        sys.exit(EXIT_INPUT)

    click.echo(print_concept(normalized.concept))
    click.echo(f"length: {normalized.length}")
    click.echo(f"individuals: {normalized.individual_count}")
    click.echo(f"existentials: {normalized.existential_count}")
    for name, concept in normalized.fresh_roles.items():
        click.echo(f"fresh role {name}: lcyl({print_concept(concept)})")
    if fo:
        click.echo(print_formula(st_translate(normalized.concept)))


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option(
    "--max-domain",
    type=click.IntRange(min=1),
    default=3,
    show_default=True,
    help="Largest domain size to try.",
)
def oracle(file: str, max_domain: int) -> None:
    """
    Search for a small model by brute force (cross-check for the tableau).

    Prints the first model in canonical order, or NONE if there is no model
    with at most --max-domain elements.
    """
    logger = ConsoleLogger(level="WARNING")
    try:
        problem = read_problem(file)
        model = create_reasoner(logger=logger).find_model(problem, max_domain)
    except (InputError, OSError) as e:
        logger.error(f"{file}: {e}", exception=e)
        sys.exit(EXIT_INPUT)

    if model is None:
        click.echo(f"NONE (domain <= {max_domain})")
        return
    click.echo("MODEL")
    click.echo(format_model(model), nl=False)


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.argument("k", type=click.IntRange(min=1))
@click.argument("m", type=click.IntRange(min=0))
def bounds(n: int, k: int, m: int) -> None:
    """
    Print the model size bound mu(N) and the branch step bound for N, K and M.
    """
    for name, compute in (("mu", lambda: mu(n)), ("step_bound", lambda: step_bound(n, k, m))):
        try:
            click.echo(f"{name}: {compute()}")
        except BoundOverflow as e:
            click.echo(f"{name}: overflow ({e})")


def main() -> None:
    """Entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
