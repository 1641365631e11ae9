"""
Utility Functions Module
"""

import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
ENV_PREFIX = 'LOGHESSE_'
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class ConfigError(ValueError):
    """Invalid configuration value"""


@dataclass(frozen=True)
class AppConfig:
    """Runtime settings; they never change computed results"""
    log_level: str = 'WARNING'
    fuzz_workers: int = 1


def load_config(env_file: Optional[str] = None) -> AppConfig:
    """
    Load configuration from the environment and an optional .env file

    Args:
        env_file: Path of a dotenv file (default: search for .env)

    Returns:
        AppConfig built from LOGHESSE_* variables
    """
    load_dotenv(env_file)
    level = os.getenv(f'{ENV_PREFIX}LOG_LEVEL', AppConfig.log_level).upper()
    if level not in LOG_LEVELS:
        raise ConfigError(f"unknown log level '{level}'")
    raw_workers = os.getenv(f'{ENV_PREFIX}FUZZ_WORKERS', str(AppConfig.fuzz_workers))
    try:
        workers = int(raw_workers)
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}FUZZ_WORKERS must be an integer, got '{raw_workers}'")
    if workers < 1:
        raise ConfigError(f"{ENV_PREFIX}FUZZ_WORKERS must be positive, got {workers}")
    return AppConfig(log_level=level, fuzz_workers=workers)


def setup_logging(level: str = 'WARNING') -> None:
    """Configure root logging on stderr so stdout stays machine-readable"""
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def read_expression(argument: str) -> str:
    """The expression itself, or the contents of the file named by '@path'"""
    if argument.startswith('@'):
        return Path(argument[1:]).read_text().strip()
    return argument


def parse_point(text: str) -> List[Fraction]:
    """
    Parse 'p1,...,pN' where each coordinate is an integer or p/q

    Raises:
        ValueError: malformed coordinate or zero denominator
    """
    coords = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            raise ValueError(f"empty coordinate in '{text}'")
        try:
            coords.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"invalid coordinate '{part}'")
        if '.' in part or 'e' in part.lower():
            raise ValueError(f"coordinate '{part}' is not an exact rational")
    return coords
