"""Tests for the __main__ module."""

import runpy
from unittest.mock import patch


def test_main_module_runs_cli(capsys):
    """Test that ``python -m rdft_kit`` dispatches to the CLI."""
    with patch("sys.argv", ["rdft", "methods"]):
        runpy.run_module("rdft_kit", run_name="__main__")
    assert capsys.readouterr().out.startswith("method")
