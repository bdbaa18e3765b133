"""mn command: compute m(n) rows."""

from typing import Annotated

import typer

from degseq.management.bootstrap import OutputFormat
from degseq.search.engine import SearchConfig, SearchMode, SearchRow, compute_rows
from degseq.search.table import table_by_n
from degseqctl.display import display_rows
from degseqctl.state import exit_on_error, get_state


COLUMNS = ("n", "m", "witness", "status")


def row_status(row: SearchRow, known: dict[int, SearchRow]) -> str:
    """match / mismatch against the table, new when the table has no such n."""
    reference = known.get(row.n)
    if reference is None:
        return "new"
    return "match" if reference.m == row.m else "mismatch"


def mn_cmd(
    ctx: typer.Context,
    n_from: Annotated[int | None, typer.Option("--from", help="First n (default from config: 4)")] = None,
    n_to: Annotated[int | None, typer.Option("--to", help="Last n (default from config: 40)")] = None,
    mode: Annotated[SearchMode | None, typer.Option("--mode", help="fast or exhaustive (n <= 14)")] = None,
    output_format: Annotated[OutputFormat | None, typer.Option("--format", "-f", help="text, json, csv or md")] = None,
    jobs: Annotated[int | None, typer.Option("--jobs", "-j", help="Worker processes (default: CPU count)")] = None,
    check_monotone: Annotated[bool | None, typer.Option("--check-monotone/--no-check-monotone", help="Re-check around the binary-search boundary")] = None,
):
    """Compute m(n) with a minimal non-graphic witness for each n in the range.

    Output is ordered by n and does not depend on --jobs.
    """
    state = get_state(ctx)
    with exit_on_error():
        settings = state.settings(
            n_from=n_from,
            n_to=n_to,
            mode=mode.value if mode else None,
            output_format=output_format.value if output_format else None,
            jobs=jobs,
            check_monotone=check_monotone,
        )
        config = SearchConfig(
            mode=settings.mode,
            n_from=settings.n_from,
            n_to=settings.n_to,
            jobs=settings.jobs,
            check_monotone=settings.check_monotone,
        )
        rows = compute_rows(config)
        known = table_by_n(state.table(settings))

    records = [{**row.to_dict(), "status": row_status(row, known)} for row in rows]
    display_rows(
        f"m(n), {settings.mode} mode",
        COLUMNS,
        records,
        settings.output_format,
        no_color=state.no_color,
    )
