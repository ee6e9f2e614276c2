"""Flat ``key = value`` configuration files and pyproject tool sections."""

from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import toml
from fastmcp.utilities.logging import get_logger

from .errors import InvalidInputError

try:
    import tomllib
except ImportError:  # pragma: no cover
    import tomli as tomllib  # type: ignore # noqa

logger = get_logger(__name__)

# CLI flag spellings accepted in config files, mapped to dataclass field names.
FLAG_ALIASES: Dict[str, str] = {
    "K": "k_max",
    "B": "b_max",
    "Bwin": "b_win",
    "l": "horizon",
    "segment-length": "segment_length",
    "checkpoint-interval": "checkpoint_interval",
    "probe-bin": "probe_bin",
    "f-delta": "f_delta",
    "grid-points": "grid_points",
}


def normalize_keys(values: Mapping[str, Any]) -> Dict[str, Any]:
    """Translate flag spellings to field names.

    Args:
        values: Raw key/value pairs

    Returns:
        A new dictionary keyed by dataclass field names

    """
    return {FLAG_ALIASES.get(key, key.replace("-", "_")): value for key, value in values.items()}


def _quote_bare_words(text: str) -> str:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or "=" not in line:
            lines.append(raw)
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        try:
            tomllib.loads(f"v = {value}")
        except tomllib.TOMLDecodeError:
            value = f'"{value}"'
        lines.append(f'"{key}" = {value}')
    return "\n".join(lines)


def parse_flat_config(text: str) -> Dict[str, Any]:
    """Parse flat ``key = value`` text.

    Values follow TOML syntax; bare words such as ``noise = gaussian`` are read as strings.

    Args:
        text: Config file content

    Returns:
        The parsed pairs keyed by dataclass field names

    Raises:
        InvalidInputError: If the text is not valid or contains tables

    """
    try:
        data = tomllib.loads(_quote_bare_words(text))
    except tomllib.TOMLDecodeError as e:
        raise InvalidInputError(f"Malformed config: {e}") from e
    nested = [key for key, value in data.items() if isinstance(value, dict)]
    if nested:
        raise InvalidInputError(f"Config must be flat, found tables: {nested}")
    return normalize_keys(data)


def load_flat_config(path: str | Path) -> Dict[str, Any]:
    """Read a flat config file.

    Args:
        path: Location of the file

    Returns:
        The parsed pairs keyed by dataclass field names

    Raises:
        InvalidInputError: If the file is missing or malformed

    """
    file_path = Path(path)
    if not file_path.is_file():
        raise InvalidInputError(f"Config file does not exist: {path}")
    return parse_flat_config(file_path.read_text(encoding="utf-8"))


def _plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    return value


def dump_flat_config(values: Mapping[str, Any]) -> str:
    """Serialize pairs to flat TOML, dropping unset values.

    Args:
        values: Field name to value mapping

    Returns:
        TOML text with one ``key = value`` line per set field

    """
    return toml.dumps({key: _plain(value) for key, value in values.items() if value is not None})


def read_tool_section(root_dir: str, section: str, config_file: Optional[str] = None) -> Dict[str, Any]:
    """Read ``[tool.rdft.<section>]`` from a TOML file inside ``root_dir``.

    Args:
        root_dir: Directory holding the file
        section: Sub-table of ``tool.rdft`` to return
        config_file: File name relative to ``root_dir`` (defaults to pyproject.toml)

    Returns:
        The section content, or an empty dictionary when absent or unreadable

    """
    root_path = Path(root_dir)
    if config_file and (root_path / config_file).exists():
        path = root_path / config_file
    elif (root_path / "pyproject.toml").exists():
        path = root_path / "pyproject.toml"
    else:
        return {}

    try:
        with open(path, "rb") as f:
            toml_data = tomllib.load(f)
    except Exception as e:
        logger.warning(f"Failed to load configuration from {path}: {e}")
        return {}
    return toml_data.get("tool", {}).get("rdft", {}).get(section, {}) or {}
