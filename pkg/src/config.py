"""
Settings for the Schubert derivation toolkit.
"""
import logging
import os
from functools import lru_cache
from typing import Any, Dict

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DEFAULT_OUTPUT_WIDTH = 88

logger = logging.getLogger(__name__)


def configure_logging(level: int = logging.WARNING) -> None:
    """Configure root logging once for the command-line front end."""
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


def _read_width(raw: str) -> int:
    try:
        width = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer SCHUBERT_OUTPUT_WIDTH={raw!r}")
        return DEFAULT_OUTPUT_WIDTH
    if width <= 0:
        logger.warning(f"Ignoring non-positive SCHUBERT_OUTPUT_WIDTH={width}")
        return DEFAULT_OUTPUT_WIDTH
    return width


@lru_cache(maxsize=1)
def get_output_settings() -> Dict[str, Any]:
    """Lazy load output settings."""
    return {
        'OUTPUT_WIDTH': _read_width(
            os.getenv('SCHUBERT_OUTPUT_WIDTH', str(DEFAULT_OUTPUT_WIDTH))
        ),
        'DEFAULT_CONVENTION': 'bertram',
    }


@lru_cache(maxsize=1)
def get_verify_settings() -> Dict[str, Any]:
    """Lazy load verification sweep defaults."""
    return {
        'MAX_K': 4,
        'MAX_INDEX': 10,
        'MAX_H': 6,
        'MAX_PART': 5,
        'RANDOM_CASES': 1000,
        'SEED': 20040101,
        'TIMEOUT': 0,  # seconds, 0 disables
    }


def get_output_setting(name: str) -> Any:
    """Get an output setting by name."""
    return get_output_settings()[name]


def get_verify_setting(name: str) -> Any:
    """Get a verification setting by name."""
    settings = get_verify_settings()
    if name in settings:
        return settings[name]
    raise KeyError(f"Verification setting '{name}' not found")
