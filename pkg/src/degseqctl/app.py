"""Main Typer app for degseqctl.

Usage:
    degseqctl check 4^3,2^2
    degseqctl mn --from 4 --to 10 --format csv
    degseqctl --verbose verify-table --from 4 --to 40
"""

import logging
import os
import sys
from typing import Annotated

import typer
from rich.console import Console
from rich.logging import RichHandler

from degseq.management.environment import load_dotenv_if_available
from degseqctl.commands.check import check_cmd
from degseqctl.commands.complement import complement_cmd
from degseqctl.commands.family import family_cmd
from degseqctl.commands.mn import mn_cmd
from degseqctl.commands.realize import realize_cmd
from degseqctl.commands.stats import stats_cmd
from degseqctl.commands.table import table_cmd
from degseqctl.commands.verify_table import verify_table_cmd
from degseqctl.state import CliState


# Disable typer's rich integration to avoid compatibility issues
os.environ["_TYPER_STANDARD_TRACEBACK"] = "1"

app = typer.Typer(
    pretty_exceptions_enable=False,
    rich_markup_mode=None,
    no_args_is_help=True,
    add_completion=False,
    help="Graphicality of degree sequences, regularity certificates and the m(n) table.",
)
app.command("check")(check_cmd)
app.command("realize")(realize_cmd)
app.command("complement")(complement_cmd)
app.command("stats")(stats_cmd)
app.command("family")(family_cmd)
app.command("mn")(mn_cmd)
app.command("verify-table")(verify_table_cmd)
app.command("table")(table_cmd)


_handler: logging.Handler | None = None


def setup_logging(level: int, use_color: bool):
    """Install one stderr handler on the root logger (replacing a previous one).

    Args:
        level: Root logger level
        use_color: If True, use Rich colored logging; if False, use plain text
    """
    global _handler
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)

    if use_color:
        _handler = RichHandler(
            console=Console(stderr=True),
            show_time=True,
            show_level=True,
            show_path=False,
            rich_tracebacks=True,
            tracebacks_show_locals=False,
            log_time_format="%Y-%m-%d %H:%M:%S",
        )
        _handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter(
            "%(asctime)s [%(levelname)-5s] [%(name)-8s] %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        ))

    root.addHandler(_handler)
    root.setLevel(level)


@app.callback()
def main_callback(
    ctx: typer.Context,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="INFO level logging (per-row search progress)")] = False,
    debug: Annotated[bool, typer.Option("--debug", help="DEBUG level logging")] = False,
    no_color: Annotated[bool, typer.Option("--no-color", help="Plain logs and uncolored tables")] = False,
    config: Annotated[str | None, typer.Option("--config", "-c", help="Path to config file (default: config/degseq.yaml)")] = None,
):
    """Global options; logging goes to stderr, results to stdout."""
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    setup_logging(level, use_color=not no_color)

    # Existing env vars take precedence over .env
    load_dotenv_if_available()

    ctx.obj = CliState(config_path=config, no_color=no_color)


def main():
    """Entry point for degseqctl CLI."""
    app()


if __name__ == "__main__":
    main()
