"""Per-invocation state shared by the callback and the commands."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any

import typer

from degseq.errors import DegreeSequenceError, SequenceParseError
from degseq.management.bootstrap import SearchSettings, resolve_search_settings
from degseq.search.engine import SearchRow
from degseq.search.table import load_table


EXIT_USAGE = 2
EXIT_MISMATCH = 3

_log = logging.getLogger("degseqctl")


@dataclass
class CliState:
    """Global options collected by the app callback."""

    config_path: str | None = None
    no_color: bool = False

    def settings(self, **overrides: Any) -> SearchSettings:
        """Resolve settings; options left at None fall through to config/env/defaults."""
        return resolve_search_settings(self.config_path, overrides=overrides)

    def table(self, settings: SearchSettings) -> list[SearchRow]:
        """Rows of the embedded table, or of ``table_path`` when configured."""
        return load_table(settings.table_path)


def get_state(ctx: typer.Context) -> CliState:
    """State set by the app callback (a default one when a command runs standalone)."""
    if isinstance(ctx.obj, CliState):
        return ctx.obj
    return CliState()


def fail(message: str, code: int = EXIT_USAGE):
    """Print ``Error: message`` in red on stderr and exit with ``code``."""
    typer.secho(f"Error: {message}", fg=typer.colors.RED, err=True)
    raise typer.Exit(code)


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Map library errors to a red message on stderr and exit code 2."""
    try:
        yield
    except SequenceParseError as e:
        fail(f"{e} (token: {e.token!r})")
    except DegreeSequenceError as e:
        fail(str(e))
    except OSError as e:
        fail(str(e))
    except RuntimeError as e:
        _log.debug("Search failed", exc_info=True)
        fail(str(e), code=1)
