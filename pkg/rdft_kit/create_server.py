"""Creating the FastMCP server that exposes the analysis tools."""

import argparse
import os
from pathlib import Path
from typing import List, Optional

from .custom_fastmcp import AnalysisFastMCP as FastMCP
from .tool_factory import ToolFactory


def start_server(root_dir: Optional[str] = None, config_toml: Optional[str] = None) -> FastMCP:
    """Start the FastMCP server.

    Args:
        root_dir: Output directory for the tools (default: --root-dir or the working directory)
        config_toml: TOML file holding ``[tool.rdft.factory]`` (default: pyproject.toml)

    Returns:
        A FastMCP instance with the analysis tools registered

    """
    args = arg_parse()
    root_dir = root_dir or args.root_dir
    config_toml = config_toml or args.config_toml
    return server_init(root_dir, config_toml)


def server_init(root_dir: str, config_toml: Optional[str] = None) -> FastMCP:
    """Initialize the FastMCP server.

    Args:
        root_dir: Output directory for the tools
        config_toml: TOML file holding ``[tool.rdft.factory]``

    Returns:
        A configured FastMCP instance ready to be run

    """
    fastmcp: FastMCP = FastMCP(
        name="RDFT Analysis Server",
        instructions="This server designs spectral windows and mixing matrices, computes filter-bank responses"
        f" and runs rounding-error experiments. CSV results are written to: {root_dir}",
    )
    tool_factory = ToolFactory(fastmcp)
    tool_factory(["rdft_kit.tools"], root_dir=root_dir, config_toml=config_toml)
    return fastmcp


def arg_parse(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse and validate the server arguments.

    Args:
        argv: Argument list, defaults to ``sys.argv[1:]``

    Returns:
        Parsed arguments

    Raises:
        ValueError: If the root directory does not exist or is not a directory

    """
    parser = argparse.ArgumentParser(description="Start the RDFT analysis MCP server")
    parser.add_argument(
        "--root-dir",
        type=str,
        default=os.getcwd(),
        help="Directory the tools write their CSV files to (default: current working directory)",
    )
    parser.add_argument(
        "--config-toml",
        type=str,
        default=None,
        help="TOML file with a [tool.rdft.factory] section (default: pyproject.toml)",
    )
    args = parser.parse_args(argv)
    root_path = Path(args.root_dir)
    if not root_path.exists():
        raise ValueError(f"Root directory does not exist: {args.root_dir}")
    if not root_path.is_dir():
        raise ValueError(f"Root directory is not a directory: {args.root_dir}")
    return args
