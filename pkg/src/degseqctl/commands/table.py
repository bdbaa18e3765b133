"""table command: print the m(n) ground truth."""

from typing import Annotated

import typer

from degseq.management.bootstrap import OutputFormat
from degseq.search.table import validate_witness
from degseqctl.display import display_rows
from degseqctl.state import exit_on_error, get_state


COLUMNS = ("n", "m", "witness", "status")


def table_cmd(
    ctx: typer.Context,
    n_from: Annotated[int | None, typer.Option("--from", help="First n to print (default: first row)")] = None,
    n_to: Annotated[int | None, typer.Option("--to", help="Last n to print (default: last row)")] = None,
    output_format: Annotated[OutputFormat | None, typer.Option("--format", "-f", help="text, json, csv or md")] = None,
):
    """Print the table with each witness validated (status pass/fail)."""
    state = get_state(ctx)
    with exit_on_error():
        settings = state.settings(output_format=output_format.value if output_format else None)
        rows = state.table(settings)

    low = n_from if n_from is not None else min(row.n for row in rows)
    high = n_to if n_to is not None else max(row.n for row in rows)
    records = [
        {**row.to_dict(), "status": "fail" if validate_witness(row) else "pass"}
        for row in rows
        if low <= row.n <= high
    ]
    display_rows("m(n) table", COLUMNS, records, settings.output_format, no_color=state.no_color)
