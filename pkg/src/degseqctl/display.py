"""Rendering of command results: rich text for terminals, json/csv/md for scripts.

Every renderer writes to stdout only and produces the same bytes for the
same input; logs go to stderr.
"""

import csv
import io
import json
from collections.abc import Sequence
from typing import Any

import typer
from rich.console import Console
from rich.table import Table
from rich.text import Text

from degseq.bounds import CertificateOutcome, CertificateStatus
from degseq.graphicality import Realization, Verdict
from degseq.management.bootstrap import OutputFormat
from degseq.rational import format_fraction
from degseq.sequence import SequenceStats


STATUS_COLORS = {
    CertificateStatus.CERTIFIED_GRAPHIC: "green",
    CertificateStatus.INCONCLUSIVE: "yellow",
    CertificateStatus.NOT_APPLICABLE: "dim",
}

ROW_STATUS_COLORS = {
    "pass": "green",
    "match": "green",
    "fail": "red",
    "mismatch": "red",
    "new": "cyan",
}


def stdout_console(no_color: bool = False) -> Console:
    # fixed width keeps text output independent of the terminal
    return Console(no_color=no_color, highlight=False, width=100, soft_wrap=False)


def echo_json(document: Any):
    """One indented JSON document on stdout."""
    typer.echo(json.dumps(document, indent=2, ensure_ascii=False))


def render_csv(columns: Sequence[str], rows: list[dict[str, Any]]) -> str:
    """Header row plus one line per record; columns missing from a record are empty."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_markdown(columns: Sequence[str], rows: list[dict[str, Any]]) -> str:
    """GitHub-style table, one line per row."""
    lines = [
        "| " + " | ".join(columns) + " |",
        "|" + "|".join("---" for _ in columns) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(row.get(c, "")) for c in columns) + " |")
    return "\n".join(lines)


def display_rows(
    title: str,
    columns: Sequence[str],
    rows: list[dict[str, Any]],
    output_format: OutputFormat,
    no_color: bool = False,
    json_rows: list[dict[str, Any]] | None = None,
):
    """Print tabular results in the requested format.

    Args:
        title: Caption of the text table
        columns: Column order for text, csv and md
        rows: Flat records
        json_rows: Records for json output when they carry more than the columns
    """
    if output_format is OutputFormat.JSON:
        echo_json(json_rows if json_rows is not None else rows)
    elif output_format is OutputFormat.CSV:
        typer.echo(render_csv(columns, rows))
    elif output_format is OutputFormat.MD:
        typer.echo(render_markdown(columns, rows))
    else:
        table = Table(title=title, title_justify="left")
        for column in columns:
            table.add_column(column, justify="right" if column in ("n", "m", "expected_m") else "left")
        for row in rows:
            cells = []
            for column in columns:
                value = str(row.get(column, ""))
                style = ROW_STATUS_COLORS.get(value, "") if column == "status" else ""
                cells.append(Text(value, style=style))
            table.add_row(*cells)
        stdout_console(no_color).print(table)


def _outcome_text(outcome: CertificateOutcome) -> Text:
    """Colored status, reason and the quantities the certifier computed."""
    text = Text()
    text.append(outcome.status.value, style=STATUS_COLORS[outcome.status])
    text.append(f"  {outcome.reason}")
    details = []
    if outcome.d_value is not None:
        details.append(f"D = {format_fraction(outcome.d_value)}")
    if outcome.rg is not None:
        details.append(f"rg = {format_fraction(outcome.rg)}")
    if outcome.spread is not None:
        details.append(f"spread = {outcome.spread}")
    if outcome.bound is not None:
        details.append(f"bound = {format_fraction(outcome.bound)}")
    if details:
        text.append(f" ({', '.join(details)})", style="dim")
    return text


def display_check(
    sequence: str,
    summary: SequenceStats,
    verdict: Verdict,
    outcomes: dict[str, CertificateOutcome],
    no_color: bool = False,
):
    """Two-column report: sequence statistics, verdict and every certifier."""
    table = Table(show_header=False, title=f"Degree sequence {sequence}", title_justify="left")
    table.add_column("field", style="bold")
    table.add_column("value")

    for key, value in summary.to_dict().items():
        table.add_row(key, str(value))
    verdict_style = "green" if verdict.graphic else "red"
    table.add_row("verdict", Text(verdict.describe(), style=verdict_style))
    for name, outcome in outcomes.items():
        table.add_row(name, _outcome_text(outcome))

    stdout_console(no_color).print(table)


def display_realization(realization: Realization):
    """One ``u v`` line per edge, sorted; nothing else on stdout."""
    for line in realization.to_lines():
        typer.echo(line)


def display_verdict_line(verdict: Verdict):
    """The one-line ``describe()`` form, for commands whose result is not graphic."""
    typer.echo(verdict.describe())


def display_mapping(title: str, values: dict[str, Any], no_color: bool = False):
    """Two-column field/value table for a single record."""
    table = Table(show_header=False, title=title, title_justify="left")
    table.add_column("field", style="bold")
    table.add_column("value")
    for key, value in values.items():
        table.add_row(key, str(value))
    stdout_console(no_color).print(table)
