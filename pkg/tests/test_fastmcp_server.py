"""Tests for the FastMCP server."""

import asyncio
import os
from unittest.mock import MagicMock, patch

import pytest

from rdft_kit import start_server
from rdft_kit.fastmcp_server import arun_server, run_server


@pytest.mark.parametrize(
    "root_dir_type,expected_error",
    [
        ("valid", None),
        ("nonexistent", "Root directory does not exist"),
        ("file", "Root directory is not a directory"),
    ],
    ids=["valid_dir", "nonexistent_dir", "file_as_dir"],
)
def test_start_server(root_dir_type, expected_error, temp_dir):
    """Test starting the server with different root directory configurations."""
    if root_dir_type == "valid":
        root_dir = temp_dir
    elif root_dir_type == "nonexistent":
        root_dir = "/nonexistent/directory"
    else:
        root_dir = os.path.join(temp_dir, "test_file.txt")
        with open(root_dir, "w") as f:
            f.write("Test content")

    with patch("sys.argv", ["rdft-mcp-server", "--root-dir", root_dir]):
        if expected_error:
            with pytest.raises(ValueError, match=expected_error):
                start_server()
        else:
            server = start_server()
            assert server.name == "RDFT Analysis Server"
            tools = asyncio.run(server.get_tools())
            tool_names = [tool.name for tool in tools.values()]
            assert all(name in tool_names for name in ["design_window", "table1", "list_methods"])


def test_start_server_with_factory_config(temp_dir):
    """Test that [tool.rdft.factory] limits the registered tools."""
    with open(os.path.join(temp_dir, "tools.toml"), "w") as f:
        f.write('[tool.rdft.factory]\ninclude = ["design_window", "design_mixing"]\nexclude = ["design_mixing"]\n')
    with patch("sys.argv", ["rdft-mcp-server", "--root-dir", temp_dir, "--config-toml", "tools.toml"]):
        server = start_server()
    tools = asyncio.run(server.get_tools())
    assert [tool.name for tool in tools.values()] == ["design_window"]


@pytest.mark.parametrize(
    "instance_provided,side_effect,exit_code",
    [(False, None, 0), (True, None, 0), (False, KeyboardInterrupt(), 0), (False, Exception("Test error"), 1)],
    ids=["normal", "with_instance", "keyboard_interrupt", "exception"],
)
@patch("rdft_kit.fastmcp_server.start_server")
@patch("sys.exit")
@patch("builtins.print")
def test_run_server(mock_print, mock_exit, mock_start_server, instance_provided, side_effect, exit_code):
    """Test running the server with different scenarios."""
    mock_fastmcp = MagicMock()
    if side_effect:
        mock_fastmcp.run.side_effect = side_effect
    mock_start_server.return_value = mock_fastmcp

    run_server(mock_fastmcp if instance_provided else None)
    assert mock_start_server.called != instance_provided
    mock_fastmcp.run.assert_called_once()
    if exit_code:
        mock_print.assert_called_once_with(f"Error: {side_effect}")
    mock_exit.assert_called_once_with(exit_code)


@pytest.mark.parametrize(
    "instance_provided,side_effect,exit_code",
    [(False, None, 0), (True, None, 0), (False, KeyboardInterrupt(), 0), (False, Exception("Test error"), 1)],
    ids=["normal", "with_instance", "keyboard_interrupt", "exception"],
)
@patch("rdft_kit.fastmcp_server.start_server")
@patch("asyncio.run")
@patch("sys.exit")
@patch("builtins.print")
def test_arun_server(
    mock_print, mock_exit, mock_asyncio_run, mock_start_server, instance_provided, side_effect, exit_code
):
    """Test running the server asynchronously with different scenarios."""
    mock_fastmcp = MagicMock()
    if side_effect:
        mock_asyncio_run.side_effect = side_effect
    mock_start_server.return_value = mock_fastmcp

    arun_server(mock_fastmcp if instance_provided else None)
    assert mock_start_server.called != instance_provided
    mock_fastmcp.run_async.assert_called_once()
    if exit_code:
        mock_print.assert_called_once_with(f"Error: {side_effect}")
    mock_exit.assert_called_once_with(exit_code)
