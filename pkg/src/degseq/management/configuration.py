"""Layered settings for degseqctl: defaults < DEGSEQ_* env < YAML file < CLI options.

Every source yields a flat mapping of setting names (``mode``, ``jobs``,
``n_from`` ...). ``ConfigurationManager`` merges them by priority; turning the
merged mapping into validated settings is ``bootstrap.settings_from_dict``.
"""

import logging
import os
import re
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

import yaml


_log = logging.getLogger("cfg")

# ${NAME} or ${NAME:-fallback}
_REFERENCE = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)(?::-([^}]*))?\}")

_TRUE_WORDS = frozenset({"true", "yes", "on"})
_FALSE_WORDS = frozenset({"false", "no", "off"})


def coerce_scalar(text: str, booleans: bool = True) -> Any:
    """'8' -> 8, 'off' -> False (when ``booleans``); anything else unchanged."""
    lowered = text.strip().lower()
    if booleans and lowered in _TRUE_WORDS:
        return True
    if booleans and lowered in _FALSE_WORDS:
        return False
    try:
        return int(text)
    except ValueError:
        return text


def _substitute(name: str, fallback: str | None, placeholder: str) -> str:
    if name in os.environ:
        return os.environ[name]
    if fallback is not None:
        return fallback
    _log.warning(f"${{{name}}} is not set and has no fallback, left as is")
    return placeholder


def expand_env_vars(value: Any) -> Any:
    """Expand ${NAME} and ${NAME:-fallback} inside strings, lists and mappings.

    A string that is a single reference becomes an int when the expansion is
    numeric, so ``jobs: ${DEGSEQ_JOBS:-4}`` gives 4 rather than "4".

        >>> expand_env_vars("results/${MISSING:-out}.csv")
        'results/out.csv'
    """
    if isinstance(value, dict):
        return {key: expand_env_vars(item) for key, item in value.items()}
    if isinstance(value, list):
        return [expand_env_vars(item) for item in value]
    if not isinstance(value, str):
        return value

    whole = _REFERENCE.fullmatch(value)
    if whole is not None:
        return coerce_scalar(_substitute(whole[1], whole[2], value), booleans=False)
    return _REFERENCE.sub(lambda ref: _substitute(ref[1], ref[2], ref[0]), value)


class ConfigSource(ABC):
    """One layer of settings. Higher ``priority`` overrides lower."""

    label = "source"

    def __init__(self, priority: int):
        self.priority = priority

    @abstractmethod
    def load(self) -> dict[str, Any]:
        """Settings provided by this layer (possibly empty)."""

    def is_available(self) -> bool:
        return True

    def describe(self) -> str:
        return self.label


class DefaultConfigSource(ConfigSource):
    label = "defaults"

    def __init__(self, defaults: dict[str, Any] | None = None, priority: int = 0):
        super().__init__(priority)
        self.defaults = dict(defaults or {})

    def load(self) -> dict[str, Any]:
        return dict(self.defaults)


class EnvConfigSource(ConfigSource):
    """DEGSEQ_<SETTING> variables, e.g. DEGSEQ_JOBS=8 -> jobs=8.

    ``.env`` is loaded by the CLI before resolution, so its entries show up
    here like any other variable.
    """

    label = "environment"

    def __init__(self, prefix: str = "degseq", priority: int = 5):
        super().__init__(priority)
        self.prefix = prefix.upper().rstrip("_") + "_"

    def _matching(self) -> list[str]:
        return sorted(key for key in os.environ if key.startswith(self.prefix))

    def load(self) -> dict[str, Any]:
        settings = {}
        for key in self._matching():
            name = key.removeprefix(self.prefix).lower()
            settings[name] = coerce_scalar(os.environ[key])
            _log.debug(f"{key} -> {name}")
        return settings

    def is_available(self) -> bool:
        return bool(self._matching())

    def describe(self) -> str:
        return f"{self.label} ({self.prefix}*)"


class FileConfigSource(ConfigSource):
    """YAML mapping of settings. Unreadable files count as empty, with a warning."""

    label = "file"

    def __init__(self, file_path: str | Path, priority: int = 10):
        super().__init__(priority)
        self.file_path = Path(file_path)

    def load(self) -> dict[str, Any]:
        try:
            document = yaml.safe_load(self.file_path.read_text(encoding="utf-8"))
        except (OSError, yaml.YAMLError) as exc:
            _log.warning(f"Cannot read settings from {self.file_path}: {exc}")
            return {}
        if document is None:
            return {}
        if not isinstance(document, dict):
            _log.warning(
                f"Ignoring {self.file_path}: expected a mapping of settings, "
                f"got {type(document).__name__}"
            )
            return {}
        return expand_env_vars(document)

    def is_available(self) -> bool:
        return self.file_path.exists()

    def describe(self) -> str:
        return f"{self.label} ({self.file_path})"


class ArgsConfigSource(ConfigSource):
    """Command-line options; options left unset (``None``) do not override."""

    label = "command line"

    def __init__(self, config_dict: dict[str, Any], priority: int = 30):
        super().__init__(priority)
        self.config_dict = {key: value for key, value in config_dict.items() if value is not None}

    def load(self) -> dict[str, Any]:
        return dict(self.config_dict)


def _deep_merge(base: dict[str, Any], update: dict[str, Any]) -> dict[str, Any]:
    """Copy of ``base`` with ``update`` applied; nested mappings merge key by key."""
    merged = dict(base)
    for key, value in update.items():
        current = merged.get(key)
        if isinstance(current, dict) and isinstance(value, dict):
            merged[key] = _deep_merge(current, value)
        else:
            merged[key] = value
    return merged


class ConfigurationManager:
    """Holds the sources, highest priority first, and merges them."""

    def __init__(self):
        self.sources: list[ConfigSource] = []

    def add_source(self, source: ConfigSource):
        self.sources.append(source)
        self.sources.sort(key=lambda s: s.priority, reverse=True)

    def log_sources(self):
        """INFO summary of the layers, as shown by ``degseqctl -v``."""
        _log.info("Settings layers (highest priority first):")
        for source in self.sources:
            mark = "used" if source.is_available() else "absent"
            _log.info(f"  [{source.priority:2d}] {source.describe()}: {mark}")

    def resolve_config(self) -> dict[str, Any]:
        """Merge available sources, lowest priority first."""
        merged: dict[str, Any] = {}
        for source in reversed(self.sources):
            if source.is_available():
                merged = _deep_merge(merged, source.load())
        _log.debug(f"Merged settings: {merged}")
        return merged


def create_configuration_manager(
    config_file: str | Path | None = None,
    args_config: dict[str, Any] | None = None,
    defaults: dict[str, Any] | None = None,
    env_prefix: str = "degseq",
) -> ConfigurationManager:
    """Defaults, environment, optional YAML file and CLI options, in that order."""
    manager = ConfigurationManager()
    manager.add_source(DefaultConfigSource(defaults))
    manager.add_source(EnvConfigSource(env_prefix))
    if config_file:
        manager.add_source(FileConfigSource(config_file))
    if args_config:
        manager.add_source(ArgsConfigSource(args_config))
    return manager
