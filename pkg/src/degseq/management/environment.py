"""Loading of .env files for the command-line tool."""

import logging
from pathlib import Path

from dotenv import load_dotenv


def load_dotenv_if_available(directory: str | Path = ".") -> tuple[bool, Path | None]:
    """Load ``.env`` from ``directory`` if it exists.

    Existing environment variables take precedence (override=False).

    Returns:
        (loaded, absolute path of the file or None)
    """
    logger = logging.getLogger("env")

    env_file = Path(directory) / ".env"
    if not env_file.exists():
        logger.debug(f"No .env file found in {Path(directory).absolute()}")
        return False, None

    load_dotenv(env_file, override=False)
    logger.debug(f"Loaded environment from {env_file.absolute()}")
    return True, env_file.absolute()
