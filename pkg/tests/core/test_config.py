"""Tests for the flat config parser and pyproject tool sections."""

from pathlib import Path

import pytest

from rdft_kit.core import InvalidInputError, dump_flat_config, load_flat_config, parse_flat_config, read_tool_section
from rdft_kit.harness import NoiseKind


def test_parse_bare_words_and_numbers():
    """Test that bare words are read as strings and TOML values keep their type."""
    values = parse_flat_config(
        """
        # run config
        K = 64
        B = 32
        sigma = -0.0039
        noise = gaussian
        methods = [1, 3, 12]
        quick = true
        """
    )
    assert values == {
        "k_max": 64,
        "b_max": 32,
        "sigma": -0.0039,
        "noise": "gaussian",
        "methods": [1, 3, 12],
        "quick": True,
    }


def test_parse_flag_spellings():
    """Test that dashed flag spellings map to field names."""
    values = parse_flat_config("segment-length = 1000\nprobe-bin = 3\nf-delta = 0.01\nBwin = 2\nl = -8")
    assert values == {"segment_length": 1000, "probe_bin": 3, "f_delta": 0.01, "b_win": 2, "horizon": -8}


def test_parse_rejects_tables():
    """Test that nested tables are rejected."""
    with pytest.raises(InvalidInputError, match="flat"):
        parse_flat_config("[section]\nK = 4")


def test_parse_rejects_malformed():
    """Test that malformed text is rejected."""
    with pytest.raises(InvalidInputError, match="Malformed"):
        parse_flat_config("K = 4\nK = 5")


def test_load_missing_file(temp_dir):
    """Test that a missing file raises."""
    with pytest.raises(InvalidInputError, match="does not exist"):
        load_flat_config(Path(temp_dir) / "absent.toml")


def test_dump_then_load(temp_dir):
    """Test that dumped configs load back with enums as their values."""
    path = Path(temp_dir) / "run.toml"
    path.write_text(dump_flat_config({"k_max": 8, "noise": NoiseKind.GAUSSIAN, "sigma": None, "methods": (1, 9)}))
    assert load_flat_config(path) == {"k_max": 8, "noise": "gaussian", "methods": [1, 9]}


def test_read_tool_section(temp_dir):
    """Test reading [tool.rdft.<section>] from pyproject.toml and a custom file."""
    root = Path(temp_dir)
    assert read_tool_section(temp_dir, "factory") == {}
    (root / "pyproject.toml").write_text('[tool.rdft.factory]\ninclude = ["table1"]\n')
    assert read_tool_section(temp_dir, "factory") == {"include": ["table1"]}
    assert read_tool_section(temp_dir, "other") == {}
    (root / "custom.toml").write_text('[tool.rdft.factory]\nexclude = ["detection"]\n')
    assert read_tool_section(temp_dir, "factory", "custom.toml") == {"exclude": ["detection"]}
    assert read_tool_section(temp_dir, "factory", "missing.toml") == {"include": ["table1"]}


def test_read_tool_section_invalid_toml(temp_dir):
    """Test that an unreadable file yields an empty section."""
    (Path(temp_dir) / "pyproject.toml").write_text("[tool.rdft.factory\n")
    assert read_tool_section(temp_dir, "factory") == {}
