"""Stats command."""

from typing import Annotated

import typer

from degseq.management.bootstrap import OutputFormat
from degseq.sequence import format_sequence, parse_sequence, stats
from degseqctl.display import display_mapping, display_rows, echo_json
from degseqctl.state import exit_on_error, get_state


def stats_cmd(
    ctx: typer.Context,
    sequence: Annotated[str, typer.Argument(help="Degree sequence, e.g. 5^2,1^6")],
    output_format: Annotated[OutputFormat, typer.Option("--format", "-f", help="Output format")] = OutputFormat.TEXT,
):
    """Print n, sum, mean, extremes, spread and rg (rationals as p/q)."""
    with exit_on_error():
        seq = parse_sequence(sequence)
        summary = stats(seq).to_dict()

    if output_format is OutputFormat.JSON:
        echo_json({"sequence": format_sequence(seq), **summary})
    elif output_format is OutputFormat.TEXT:
        display_mapping(f"Degree sequence {format_sequence(seq)}", summary, get_state(ctx).no_color)
    else:
        display_rows("", list(summary), [summary], output_format)
