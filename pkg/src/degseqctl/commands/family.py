"""Family command: the two-valued sequences that make the mean-window bound tight."""

from typing import Annotated

import typer

from degseq.bounds import counterexample_family, family_predicted_graphic
from degseq.graphicality import erdos_gallai_check
from degseq.management.bootstrap import OutputFormat
from degseq.sequence import format_sequence
from degseqctl.display import display_mapping, echo_json
from degseqctl.state import exit_on_error, get_state


def family_cmd(
    ctx: typer.Context,
    n: Annotated[int, typer.Option("--n", help="Even length")],
    mean: Annotated[int, typer.Option("--mean", help="Integer mean mu")],
    c: Annotated[int, typer.Option("--c", help="Half-width c >= 0")],
    output_format: Annotated[OutputFormat, typer.Option("--format", "-f", help="text or json")] = OutputFormat.TEXT,
):
    """Print ((mu+c)^(n/2), (mu-c)^(n/2)) with its verdict.

    The sequence is non-graphic exactly when c > (n-2)/4.
    """
    with exit_on_error():
        seq = counterexample_family(n, mean, c)
    verdict = erdos_gallai_check(seq)
    document = {
        "sequence": format_sequence(seq),
        "predicted_graphic": family_predicted_graphic(n, c),
        "verdict": verdict.to_dict(),
    }

    if output_format is OutputFormat.JSON:
        echo_json(document)
    else:
        display_mapping(
            f"Family n={n} mu={mean} c={c}",
            {
                "sequence": document["sequence"],
                "predicted_graphic": document["predicted_graphic"],
                "verdict": verdict.describe(),
            },
            get_state(ctx).no_color,
        )
