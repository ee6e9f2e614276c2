"""Core building blocks: operation base class, errors and configuration."""

from .base_op import AsyncOperation
from .config import dump_flat_config, load_flat_config, parse_flat_config, read_tool_section, tomllib
from .errors import (
    IllConditionedError,
    InvalidInputError,
    InvalidStateError,
    NumericalFailureError,
    SpectrumError,
    UnsupportedMethodError,
)

__all__ = [
    "AsyncOperation",
    "IllConditionedError",
    "InvalidInputError",
    "InvalidStateError",
    "NumericalFailureError",
    "SpectrumError",
    "UnsupportedMethodError",
    "dump_flat_config",
    "load_flat_config",
    "parse_flat_config",
    "read_tool_section",
    "tomllib",
]
