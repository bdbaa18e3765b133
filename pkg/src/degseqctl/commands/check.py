"""Check command: statistics, Erdős–Gallai verdict and every certifier."""

from typing import Annotated

import typer

from degseq.bounds import theorem1_certify, theorem2_certify
from degseq.graphicality import erdos_gallai_check
from degseq.management.bootstrap import OutputFormat
from degseq.search.table import difference_certify
from degseq.sequence import format_sequence, parse_sequence, stats
from degseqctl.display import display_check, display_rows, echo_json
from degseqctl.state import exit_on_error, get_state


def check_cmd(
    ctx: typer.Context,
    sequence: Annotated[str, typer.Argument(help="Degree sequence, e.g. 4^3,2^2")],
    output_format: Annotated[OutputFormat, typer.Option("--format", "-f", help="text, json, or a one-row csv/md")] = OutputFormat.TEXT,
):
    """Decide graphicality and report the regularity certificates.

    The difference certificate compares the spread with m(n) from the table
    (embedded, or `table_path` from config).
    """
    state = get_state(ctx)
    with exit_on_error():
        seq = parse_sequence(sequence)
        settings = state.settings()
        table = state.table(settings)

        summary = stats(seq)
        verdict = erdos_gallai_check(seq)
        outcomes = {
            "theorem1": theorem1_certify(seq),
            "theorem2": theorem2_certify(seq),
            "difference": difference_certify(seq, table),
        }

    text = format_sequence(seq)
    if output_format is OutputFormat.JSON:
        document = {"sequence": text, "stats": summary.to_dict(), "verdict": verdict.to_dict()}
        document.update({name: outcome.to_dict() for name, outcome in outcomes.items()})
        echo_json(document)
    elif output_format is OutputFormat.TEXT:
        display_check(text, summary, verdict, outcomes, no_color=state.no_color)
    else:
        row = {"sequence": text, **summary.to_dict(), "graphic": verdict.graphic}
        row.update({name: outcome.status.value for name, outcome in outcomes.items()})
        display_rows("", list(row), [row], output_format)
