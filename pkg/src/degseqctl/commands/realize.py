"""Realize command: Havel–Hakimi edge list."""

import logging
from typing import Annotated

import typer

from degseq.graphicality import Realization, havel_hakimi_realize
from degseq.management.bootstrap import OutputFormat
from degseq.sequence import format_sequence, parse_sequence
from degseqctl.display import display_realization, display_rows, display_verdict_line, echo_json
from degseqctl.state import exit_on_error


_log = logging.getLogger("degseqctl")

EDGE_COLUMNS = ("u", "v")


def realize_cmd(
    sequence: Annotated[str, typer.Argument(help="Degree sequence, e.g. 3^4")],
    output_format: Annotated[OutputFormat, typer.Option("--format", "-f", help="text (u v lines), json, csv or md")] = OutputFormat.TEXT,
):
    """Print a simple graph with the given degrees, or why none exists.

    Vertex i carries the i-th largest degree. A non-graphic sequence is a
    result, not an error (exit code 0).
    """
    with exit_on_error():
        seq = parse_sequence(sequence)
        result = havel_hakimi_realize(seq)

    if isinstance(result, Realization):
        _log.info(f"Realized {format_sequence(seq)}: n={result.n}, {len(result.edges)} edges")

    if output_format is OutputFormat.JSON:
        document = {"sequence": format_sequence(seq), "graphic": isinstance(result, Realization)}
        if isinstance(result, Realization):
            document["edges"] = [list(edge) for edge in result.edges]
        else:
            document["verdict"] = result.to_dict()
        echo_json(document)
    elif not isinstance(result, Realization):
        display_verdict_line(result)
    elif output_format is OutputFormat.TEXT:
        display_realization(result)
    else:
        rows = [{"u": u, "v": v} for u, v in result.edges]
        display_rows("", EDGE_COLUMNS, rows, output_format)
