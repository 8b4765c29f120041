"""Rich rendering of reports for the terminal."""

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from surfcalc.classify import (
    AttachmentReport,
    ConstructionReport,
    ExampleReport,
    FeVerdict,
    ScreenReport,
    SurfaceReport,
)
from surfcalc.classify.reports import CheckedReport, show
from surfcalc.dualgraph import GraphReport, LctReport, RecognitionReport
from surfcalc.exact import format_rat


def _mark(passed: bool | None) -> str:
    if passed is None:
        return "[dim]n/a[/dim]"
    return "[green]yes[/green]" if passed else "[red]no[/red]"


def _key_values(title: str, values: dict[str, str]) -> Table:
    table = Table(title=escape(title), box=box.SIMPLE, show_header=False)
    table.add_column("key", style="bold")
    table.add_column("value")
    for key, value in values.items():
        table.add_row(key, escape(value))
    return table


def render_graph(console: Console, report: GraphReport) -> None:
    values = {
        "det": str(report.determinant),
        "class group": show(report.class_group) if report.class_group else "trivial",
        "order": str(report.class_group_order),
        "index": "n/a" if report.index is None else str(report.index),
        "fundamental cycle": show(report.fundamental_cycle),
        "min coefficient": str(report.fundamental_cycle_min),
        "p_a(Z)": format_rat(report.fundamental_genus),
        "rational": show(report.rational),
        "klt": "n/a" if report.klt is None else show(report.klt),
    }
    if report.canonical_pairing is not None:
        values["(K_Y.G)"] = format_rat(report.canonical_pairing)
    values["type"] = report.type or f"unrecognized ({report.note})"
    console.print(_key_values("Graph invariants", values))
    if report.discrepancies:
        table = Table(title="Discrepancies", box=box.ROUNDED, header_style="bold magenta")
        table.add_column("vertex")
        table.add_column("d", justify="right")
        for vertex, value in report.discrepancies.items():
            table.add_row(vertex, format_rat(value))
        console.print(table)


def render_recognition(console: Console, report: RecognitionReport) -> None:
    console.print(f"type: {report.type}")
    if report.other_convention is not None:
        console.print("other convention: 1/{}(1,{})".format(*report.other_convention))
    if report.reason:
        console.print(f"reason: {report.reason}")
    console.print(f"admissible cyclic: {show(report.admissible_cyclic)}")


def render_lct(console: Console, report: LctReport) -> None:
    console.print(f"attachment: {show(report.attachment)}")
    console.print(f"lct = {format_rat(report.threshold)}")


def render_screen(console: Console, reports: list[ScreenReport]) -> None:
    table = Table(title="Noether screen", box=box.ROUNDED, header_style="bold magenta")
    for column in ("candidate", "types", "KG", "r", "rho", "integral"):
        table.add_column(column)
    for report in reports:
        table.add_row(
            report.label,
            ", ".join(report.candidates),
            format_rat(report.kg),
            str(report.r),
            format_rat(report.rho),
            _mark(report.integral),
        )
    console.print(table)
    survivors = [report.label for report in reports if report.integral]
    console.print(f"survivors: {', '.join(survivors) or 'none'}")


def render_attachments(console: Console, reports: list[AttachmentReport]) -> None:
    table = Table(title="Unit attachments", box=box.ROUNDED, header_style="bold magenta")
    for column in ("vertex", "coefficients", "integral", "all >= 1"):
        table.add_column(column)
    for report in reports:
        table.add_row(
            report.vertex,
            show(report.coefficients),
            _mark(report.integral),
            _mark(report.passes),
        )
    console.print(table)


def render_checks(console: Console, report: CheckedReport) -> None:
    table = Table(box=box.ROUNDED, header_style="bold magenta")
    for column in ("check", "computed", "expected", "ok"):
        table.add_column(column)
    for check in report.checks:
        table.add_row(
            escape(check.name), escape(check.computed), escape(check.expected), _mark(check.passed)
        )
    style = "green" if report.passed else "red"
    console.print(Panel(table, title=escape(report.label), border_style=style))
    if isinstance(report, ExampleReport) and report.values:
        console.print(_key_values("Values", report.values))


def render_points(console: Console, report: ConstructionReport | SurfaceReport) -> None:
    table = Table(title="Singular points", box=box.ROUNDED, header_style="bold magenta")
    for column in ("point", "curves", "type", "index", "Du Val", "admissible"):
        table.add_column(column)
    for point in report.points:
        table.add_row(
            point.label + (" (carried)" if point.carried else ""),
            ", ".join(point.curves),
            point.type or "unrecognized",
            "n/a" if point.index is None else str(point.index),
            _mark(point.du_val),
            _mark(point.admissible_cyclic) if point.cyclic else "",
        )
    console.print(table)


def render_construction(console: Console, report: ConstructionReport) -> None:
    render_points(console, report)
    render_checks(console, report)


def render_constructions(console: Console, reports: list[ConstructionReport]) -> None:
    for report in reports:
        render_construction(console, report)
    passed = sum(report.passed for report in reports)
    console.print(f"{passed}/{len(reports)} constructions verified")


def render_surface(console: Console, report: SurfaceReport) -> None:
    render_points(console, report)
    table = Table(title="Tracked curves", box=box.ROUNDED, header_style="bold magenta")
    for column in ("curve", "p_a", "contracted", "C^2", "K_X.C"):
        table.add_column(column)
    for curve in report.curves:
        table.add_row(
            curve.id,
            str(curve.pa),
            _mark(curve.contracted),
            "" if curve.self_intersection is None else format_rat(curve.self_intersection),
            "" if curve.canonical_degree is None else format_rat(curve.canonical_degree),
        )
    console.print(table)
    values = {
        "Cl(X)": report.class_group or "n/a",
        "generated by -K_X": (
            "n/a"
            if report.anticanonical_generated is None
            else show(report.anticanonical_generated)
        ),
        "rho": str(report.rho),
        "r": str(report.r),
        "KG": format_rat(report.kg),
        "K_X^2": format_rat(report.k_squared),
        "Noether consistent": show(report.noether_consistent),
    }
    console.print(_key_values(report.label, values))


def render_fe(console: Console, verdict: FeVerdict) -> None:
    table = Table(
        title=f"Splits of -K on F_{verdict.e}", box=box.ROUNDED, header_style="bold magenta"
    )
    for column in ("M1", "M2", "generates", "balanced"):
        table.add_column(column)
    for candidate in verdict.candidates:
        table.add_row(
            "{}C0 + {}F".format(*candidate.m1),
            "{}C0 + {}F".format(*candidate.m2),
            _mark(candidate.generates),
            _mark(candidate.balanced),
        )
    console.print(table)
    console.print(
        f"no generating decomposition: {show(verdict.no_generating_decomposition)}"
    )
