"""Configuration and environment handling."""

from .bootstrap import (
    DEFAULT_CONFIG_FILE,
    OutputFormat,
    SearchSettings,
    determine_config_file,
    resolve_search_settings,
)
from .configuration import (
    ArgsConfigSource,
    ConfigSource,
    ConfigurationManager,
    DefaultConfigSource,
    EnvConfigSource,
    FileConfigSource,
    create_configuration_manager,
)
from .environment import load_dotenv_if_available


__all__ = [
    "DEFAULT_CONFIG_FILE",
    "OutputFormat",
    "SearchSettings",
    "determine_config_file",
    "resolve_search_settings",
    "ConfigurationManager",
    "ConfigSource",
    "FileConfigSource",
    "ArgsConfigSource",
    "DefaultConfigSource",
    "EnvConfigSource",
    "create_configuration_manager",
    "load_dotenv_if_available",
]
