"""Command-line front end for surfcalc.

Every command prints a rich report, or the same report as JSON with ``--json``
(rationals as "p/q" strings). Exit codes: 0 on success, 1 when a verification
check fails, 2 on bad input.

Usage:
    python -m surfcalc graph analyze e8.json
    python -m surfcalc --json classify screen
    python -m surfcalc verify
"""

import logging
import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Any

import typer
from dotenv import load_dotenv
from pydantic import BaseModel, TypeAdapter, ValidationError
from rich.console import Console
from rich.markup import escape

from surfcalc.classify import (
    EXAMPLES,
    ConstructionKind,
    ConstructionParams,
    ConstructionReport,
    ExampleReport,
    attachment_enumeration,
    fe_check,
    no_p1_example,
    node_choice_patterns,
    paper_suite,
    rational_example,
    screen_forks,
    surface_report,
    verify_params,
)
from surfcalc.classify.reports import CheckedReport
from surfcalc.cli import render
from surfcalc.cli.schemas import parse_graph, parse_script
from surfcalc.config import Settings, get_settings
from surfcalc.dualgraph import Attachment, analyze, lct_report, recognition_report
from surfcalc.errors import ParseError, SurfcalcError
from surfcalc.surface import run_script


logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_INPUT = 2

app = typer.Typer(
    name="surfcalc",
    help="Exact invariants of surface singularities and rational surface constructions.",
    no_args_is_help=True,
    add_completion=False,
)
graph_app = typer.Typer(help="Invariants of a resolution dual graph.", no_args_is_help=True)
surface_app = typer.Typer(help="Blowup scripts on the base surfaces.", no_args_is_help=True)
classify_app = typer.Typer(help="Screens used by the classification.", no_args_is_help=True)
app.add_typer(graph_app, name="graph")
app.add_typer(surface_app, name="surface")
app.add_typer(classify_app, name="classify")

err_console = Console(stderr=True)

ExistingFile = Annotated[
    Path, typer.Argument(exists=True, dir_okay=False, readable=True, help="JSON input file")
]


@dataclass(frozen=True, slots=True)
class CliState:
    console: Console
    settings: Settings
    json_output: bool


def _state(ctx: typer.Context) -> CliState:
    return ctx.find_object(CliState)


@contextmanager
def _input_errors() -> Iterator[None]:
    """Map library errors to a one-line diagnostic and exit code 2."""
    try:
        yield
    except SurfcalcError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        err_console.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        raise typer.Exit(EXIT_INPUT) from e


def _emit(
    state: CliState,
    report: BaseModel | Sequence[BaseModel],
    draw: Callable[[Console, Any], None],
) -> None:
    if state.json_output:
        if isinstance(report, BaseModel):
            text = report.model_dump_json(indent=state.settings.json_indent)
        else:
            adapter = TypeAdapter(list[type(report[0])]) if report else TypeAdapter(list)
            text = adapter.dump_json(list(report), indent=state.settings.json_indent).decode()
        typer.echo(text)
    else:
        draw(state.console, report)


def _finish(reports: Sequence[CheckedReport]) -> None:
    failed = [report.label for report in reports if not report.passed]
    if failed:
        err_console.print(f"[red]failed:[/red] {escape(', '.join(failed))}", highlight=False)
        raise typer.Exit(EXIT_FAILED)


@app.callback()
def main(
    ctx: typer.Context,
    json_output: Annotated[
        bool, typer.Option("--json", help="Print reports as JSON.")
    ] = False,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Log debug output to stderr.")
    ] = False,
    no_color: Annotated[
        bool, typer.Option("--no-color", help="Disable ANSI color.")
    ] = False,
) -> None:
    load_dotenv()
    try:
        settings = get_settings()
    except ValidationError as e:
        err_console.print(f"error: invalid settings: {e.errors()[0]['msg']}", highlight=False)
        raise typer.Exit(EXIT_INPUT) from e
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else settings.logging_level,
        datefmt="%d/%m/%Y %H:%M",
        format="%(asctime)s %(name)-12s %(levelname)-8s %(message)s",
    )
    console = Console(no_color=no_color or not settings.color, highlight=False)
    ctx.obj = CliState(console=console, settings=settings, json_output=json_output)


@graph_app.command("analyze")
def graph_analyze(ctx: typer.Context, path: ExistingFile) -> None:
    """Determinant, class group, fundamental cycle, discrepancies, klt, type."""
    with _input_errors():
        report = analyze(parse_graph(path))
    _emit(_state(ctx), report, render.render_graph)


@graph_app.command("recognize")
def graph_recognize(ctx: typer.Context, path: ExistingFile) -> None:
    """Recognize a minimal resolution graph as cyclic, fork, Du Val or not quotient."""
    with _input_errors():
        report = recognition_report(parse_graph(path))
    _emit(_state(ctx), report, render.render_recognition)


def _parse_attachment(specs: list[str]) -> Attachment:
    intersections: dict[str, int] = {}
    for spec in specs:
        vertex_id, _, count = spec.partition("=")
        try:
            value = int(count) if count else 1
        except ValueError as e:
            raise ParseError(f"'{spec}' is not ID or ID=N", field="attach") from e
        intersections[vertex_id] = intersections.get(vertex_id, 0) + value
    return Attachment(intersections=intersections)


@app.command("lct")
def lct(
    ctx: typer.Context,
    path: ExistingFile,
    attach: Annotated[
        list[str],
        typer.Option("--attach", "-a", help="Vertex met by the curve, as ID or ID=N."),
    ],
) -> None:
    """Log canonical threshold of a curve through the point."""
    with _input_errors():
        report = lct_report(parse_graph(path), _parse_attachment(attach))
    _emit(_state(ctx), report, render.render_lct)


@surface_app.command("run")
def surface_run(ctx: typer.Context, path: ExistingFile) -> None:
    """Run a blowup script and report the contracted surface."""
    with _input_errors():
        script = parse_script(path)
        report = surface_report(run_script(script), label=path.stem)
    _emit(_state(ctx), report, render.render_surface)


@classify_app.command("screen")
def classify_screen(ctx: typer.Context) -> None:
    """Noether screen of the candidate forks."""
    _emit(_state(ctx), screen_forks(), render.render_screen)


@classify_app.command("attach")
def classify_attach(ctx: typer.Context, path: ExistingFile) -> None:
    """Unit attachment at every vertex of the graph."""
    with _input_errors():
        reports = attachment_enumeration(parse_graph(path))
    _emit(_state(ctx), reports, render.render_attachments)


@app.command("construct")
def construct(
    ctx: typer.Context,
    kind: Annotated[ConstructionKind, typer.Argument(help="node or cusp")],
    m: Annotated[int, typer.Argument(help="Number of blowups")],
    choice: Annotated[
        list[str] | None,
        typer.Option(
            "--choice",
            "-c",
            help="on-gamma or on-previous-e, one per blowup after the first; "
            "omit to run every pattern.",
        ),
    ] = None,
) -> None:
    """Build and verify a member of the construction family."""
    with _input_errors():
        if kind is ConstructionKind.NODE and not choice and m > 1:
            family = node_choice_patterns(m)
        else:
            family = [ConstructionParams(kind=kind, m=m, choices=tuple(choice or ()))]
        reports: list[ConstructionReport] = [verify_params(params) for params in family]

    state = _state(ctx)
    if len(reports) == 1:
        _emit(state, reports[0], render.render_construction)
    else:
        _emit(state, reports, render.render_constructions)
    _finish(reports)


@app.command("fe-check")
def fe_check_command(
    ctx: typer.Context,
    e: Annotated[int, typer.Argument(help="Hirzebruch index, 0 or at least 2")],
) -> None:
    """Decompositions of -K on F_e into two classes."""
    with _input_errors():
        verdict = fe_check(e)
    _emit(_state(ctx), verdict, render.render_fe)


@app.command("verify-paper")
@app.command("verify", help="Alias of verify-paper.")
def verify_paper(
    ctx: typer.Context,
    seed: Annotated[int | None, typer.Option(help="Seed of the random property checks.")] = None,
    samples: Annotated[
        int | None, typer.Option(min=1, help="Samples per property check.")
    ] = None,
) -> None:
    """Run every verification check."""
    report = paper_suite(seed=seed, samples=samples)
    _emit(_state(ctx), report, render.render_checks)
    _finish([report])


EXAMPLE_NAMES = ("rational", "no-p1", *EXAMPLES)


@app.command("example")
def example(
    ctx: typer.Context,
    name: Annotated[str, typer.Argument(help=f"One of: {', '.join(EXAMPLE_NAMES)}")],
    m: Annotated[int, typer.Option("--m", help="Length of the rational example.")] = 5,
    variant: Annotated[str, typer.Option(help="no-p1 base: A8 or smooth.")] = "A8",
) -> None:
    """Run one worked example."""
    with _input_errors():
        report: ExampleReport
        if name == "rational":
            report = rational_example(m).report
        elif name == "no-p1":
            report = no_p1_example(variant)
        elif name in EXAMPLES:
            report = EXAMPLES[name]()
        else:
            raise ParseError(
                f"unknown example '{name}'; expected one of {', '.join(EXAMPLE_NAMES)}",
                field="name",
            )
    _emit(_state(ctx), report, render.render_checks)
    _finish([report])
