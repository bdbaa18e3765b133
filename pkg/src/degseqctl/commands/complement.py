"""Complement command."""

from typing import Annotated

import typer

from degseq.management.bootstrap import OutputFormat
from degseq.sequence import complement, format_sequence, parse_sequence
from degseqctl.display import echo_json
from degseqctl.state import exit_on_error


def complement_cmd(
    sequence: Annotated[str, typer.Argument(help="Degree sequence with values <= n-1")],
    output_format: Annotated[OutputFormat, typer.Option("--format", "-f", help="text or json")] = OutputFormat.TEXT,
):
    """Print the complement sequence (d -> n-1-d)."""
    with exit_on_error():
        seq = parse_sequence(sequence)
        result = complement(seq)

    if output_format is OutputFormat.JSON:
        echo_json({"sequence": format_sequence(seq), "complement": format_sequence(result)})
    else:
        typer.echo(format_sequence(result))
