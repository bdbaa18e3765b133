"""verify-table command: recompute m(n) and compare with the table."""

from typing import Annotated

import typer

from degseq.management.bootstrap import OutputFormat
from degseq.search.engine import SearchMode
from degseq.search.table import verify_table
from degseqctl.display import display_rows
from degseqctl.state import EXIT_MISMATCH, exit_on_error, get_state


COLUMNS = ("n", "expected_m", "m", "witness", "status")


def verify_table_cmd(
    ctx: typer.Context,
    n_from: Annotated[int | None, typer.Option("--from", help="First n (default from config: 4)")] = None,
    n_to: Annotated[int | None, typer.Option("--to", help="Last n (default from config: 40)")] = None,
    mode: Annotated[SearchMode | None, typer.Option("--mode", help="fast or exhaustive (n <= 14)")] = None,
    output_format: Annotated[OutputFormat | None, typer.Option("--format", "-f", help="text, json, csv or md")] = None,
    jobs: Annotated[int | None, typer.Option("--jobs", "-j", help="Worker processes (default: CPU count)")] = None,
):
    """Recompute m(n) for the range and compare with the table, zero tolerance.

    Exit code 3 when any row fails.
    """
    state = get_state(ctx)
    with exit_on_error():
        settings = state.settings(
            n_from=n_from,
            n_to=n_to,
            mode=mode.value if mode else None,
            output_format=output_format.value if output_format else None,
            jobs=jobs,
        )
        report = verify_table(
            settings.n_from,
            settings.n_to,
            mode=settings.mode,
            jobs=settings.jobs,
            table=state.table(settings),
            check_monotone=settings.check_monotone,
        )

    records = [check.to_dict() for check in report.rows]
    display_rows(
        f"Table verification, {settings.mode} mode",
        COLUMNS,
        records,
        settings.output_format,
        no_color=state.no_color,
    )
    if not report.passed:
        failed = ", ".join(str(row.n) for row in report.failed_rows)
        typer.secho(f"Mismatch for n = {failed}", fg=typer.colors.RED, err=True)
        raise typer.Exit(EXIT_MISMATCH)
