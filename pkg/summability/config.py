"""
Configuration management for the summability CLI.
Handles environment variables and default run parameters.
"""

import os
from dataclasses import dataclass
from typing import Callable, TypeVar

from dotenv import load_dotenv

T = TypeVar("T")

OUTPUT_FORMATS = ("json", "csv")


def _env(name: str, default: T, parse: Callable[[str], T]) -> T:
    """Read and parse one environment variable, naming it on failure."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return parse(raw.strip())
    except ValueError as e:
        raise ValueError(f"{name} has an invalid value {raw!r}: {e}")


@dataclass
class DefaultsConfig:
    """Default matrix sizes and verification tolerance."""
    rows: int = 2000
    cols: int = 64
    display_rows: int = 32
    tolerance: float = 1e-9

    @classmethod
    def from_env(cls) -> "DefaultsConfig":
        """Load run defaults from environment variables."""
        rows = _env("SUMMABILITY_ROWS", cls.rows, int)
        cols = _env("SUMMABILITY_COLS", cls.cols, int)
        display_rows = _env("SUMMABILITY_DISPLAY_ROWS", cls.display_rows, int)
        tolerance = _env("SUMMABILITY_TOLERANCE", cls.tolerance, float)

        if rows < 1:
            raise ValueError("SUMMABILITY_ROWS must be >= 1")
        if cols < 1:
            raise ValueError("SUMMABILITY_COLS must be >= 1")
        if display_rows < 1:
            raise ValueError("SUMMABILITY_DISPLAY_ROWS must be >= 1")
        if not tolerance > 0:
            raise ValueError("SUMMABILITY_TOLERANCE must be positive")

        return cls(rows=rows, cols=cols, display_rows=display_rows, tolerance=tolerance)


@dataclass
class OutputConfig:
    """Output document formatting."""
    format: str = "json"
    indent: int = 2

    @classmethod
    def from_env(cls) -> "OutputConfig":
        """Load output configuration from environment variables."""
        fmt = _env("SUMMABILITY_FORMAT", cls.format, str.lower)
        indent = _env("SUMMABILITY_JSON_INDENT", cls.indent, int)

        if fmt not in OUTPUT_FORMATS:
            raise ValueError(f"SUMMABILITY_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}")

        return cls(format=fmt, indent=indent)


@dataclass
class Config:
    """Complete CLI configuration."""
    defaults: DefaultsConfig
    output: OutputConfig

    @classmethod
    def load(cls) -> "Config":
        """
        Load configuration from environment.

        Returns:
            Loaded configuration

        Raises:
            ValueError: If an environment variable holds an invalid value
        """
        # Load environment variables from .env file
        load_dotenv()

        return cls(defaults=DefaultsConfig.from_env(), output=OutputConfig.from_env())
