"""Bootstrap helpers for the command-line tool.

Single source of truth for:
- Config file path resolution (default vs. explicit-must-exist semantics)
- Search settings (args -> config file -> DEGSEQ_* env -> defaults)
"""

import logging
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any

from degseq.errors import ConfigurationError
from degseq.management.configuration import create_configuration_manager
from degseq.search.engine import SearchMode


DEFAULT_CONFIG_FILE = "config/degseq.yaml"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    MD = "md"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SearchSettings:
    """Resolved settings for search and output.

    Attributes:
        mode: fast or exhaustive
        jobs: Worker processes for independent rows
        n_from, n_to: Default row range for ``mn`` and ``verify-table``
        output_format: Default rendering
        table_path: Override of the embedded m(n) table (None = embedded)
        check_monotone: Re-check around the binary-search boundary
    """

    mode: SearchMode = SearchMode.FAST
    jobs: int = 1
    n_from: int = 4
    n_to: int = 40
    output_format: OutputFormat = OutputFormat.TEXT
    table_path: Path | None = None
    check_monotone: bool = True

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "mode": self.mode.value,
            "jobs": self.jobs,
            "n_from": self.n_from,
            "n_to": self.n_to,
            "output_format": self.output_format.value,
            "table_path": str(self.table_path) if self.table_path else None,
            "check_monotone": self.check_monotone,
        }


def default_settings() -> dict[str, Any]:
    return {
        "mode": SearchMode.FAST.value,
        "jobs": os.cpu_count() or 1,
        "n_from": 4,
        "n_to": 40,
        "output_format": OutputFormat.TEXT.value,
        "table_path": None,
        "check_monotone": True,
    }


def determine_config_file(
    config_arg: str | None,
    default: str = DEFAULT_CONFIG_FILE,
    logger: logging.Logger | None = None,
) -> str:
    """Resolve config file path.

    If ``config_arg`` is given, the file MUST exist (ConfigurationError otherwise).
    If ``config_arg`` is None, returns the default path, which may not exist;
    ``FileConfigSource`` treats a missing file as empty.
    """
    log = logger or logging.getLogger("cfg")

    if config_arg is not None:
        if not Path(config_arg).exists():
            raise ConfigurationError(f"Configuration file not found: {config_arg}")
        log.info(f"Using config file: {config_arg}")
        return config_arg

    if Path(default).exists():
        log.info(f"Using default config file: {default}")
    else:
        log.debug(f"Default config file not found: {default}, continuing with defaults")
    return default


def _as_int(name: str, value: Any) -> int:
    """Accept ints and integer strings; anything else is a ConfigurationError."""
    if isinstance(value, bool):
        raise ConfigurationError(f"{name} must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"{name} must be an integer, got {value!r}") from e


def _as_bool(name: str, value: Any) -> bool:
    """Accept bools and the on/off words; anything else is a ConfigurationError."""
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.lower() in ("true", "yes", "on", "1"):
        return True
    if isinstance(value, str) and value.lower() in ("false", "no", "off", "0"):
        return False
    if isinstance(value, int) and value in (0, 1):
        return bool(value)
    raise ConfigurationError(f"{name} must be a boolean, got {value!r}")


def settings_from_dict(raw: dict[str, Any]) -> SearchSettings:
    """Validate a merged config dict into SearchSettings; unknown keys are ignored."""
    try:
        mode = SearchMode(str(raw["mode"]).lower())
    except ValueError as e:
        raise ConfigurationError(
            f"Unknown mode {raw['mode']!r} (expected fast or exhaustive)"
        ) from e
    try:
        output_format = OutputFormat(str(raw["output_format"]).lower())
    except ValueError as e:
        raise ConfigurationError(
            f"Unknown output_format {raw['output_format']!r} (expected text, json, csv or md)"
        ) from e

    jobs = _as_int("jobs", raw["jobs"])
    if jobs < 1:
        raise ConfigurationError(f"jobs must be >= 1, got {jobs}")
    n_from = _as_int("n_from", raw["n_from"])
    n_to = _as_int("n_to", raw["n_to"])
    if not 4 <= n_from <= n_to:
        raise ConfigurationError(f"Invalid range n_from={n_from}, n_to={n_to} (need 4 <= from <= to)")

    table_path = raw.get("table_path")
    return SearchSettings(
        mode=mode,
        jobs=jobs,
        n_from=n_from,
        n_to=n_to,
        output_format=output_format,
        table_path=Path(table_path) if table_path else None,
        check_monotone=_as_bool("check_monotone", raw["check_monotone"]),
    )


def resolve_search_settings(
    config_arg: str | None = None,
    overrides: dict[str, Any] | None = None,
    default_config: str = DEFAULT_CONFIG_FILE,
) -> SearchSettings:
    """Resolve settings from layered sources.

    Resolution order (highest precedence first):
        1. ``overrides`` (command-line options; None values ignored)
        2. YAML config file
        3. Environment variables ``DEGSEQ_<FIELD>``
        4. Defaults

    Raises:
        ConfigurationError: Missing explicit config file or invalid value
    """
    config_file = determine_config_file(config_arg, default=default_config)
    manager = create_configuration_manager(
        config_file=config_file,
        args_config=overrides,
        defaults=default_settings(),
    )
    manager.log_sources()
    settings = settings_from_dict(manager.resolve_config())
    logging.getLogger("cfg").debug(f"Resolved settings: {settings.to_dict()}")
    return settings
