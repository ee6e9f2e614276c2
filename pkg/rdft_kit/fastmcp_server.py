"""MCP server entry points."""

import asyncio
import sys
from typing import Callable, Optional

from .create_server import start_server
from .custom_fastmcp import AnalysisFastMCP as FastMCP


def _serve(serve: Callable[[], None]) -> None:
    # exit status: 0 on shutdown or Ctrl-C, 1 on any other failure
    code = 0
    try:
        serve()
    except KeyboardInterrupt:
        pass
    except Exception as e:
        print(f"Error: {e}")
        code = 1
    sys.exit(code)


def run_server(fastmcp: Optional[FastMCP] = None) -> None:
    """Run the FastMCP server.

    Args:
        fastmcp: Server to run; a new one is created when None

    """
    server = fastmcp or start_server()
    _serve(server.run)


def arun_server(fastmcp: Optional[FastMCP] = None) -> None:
    """Run the FastMCP server on an asyncio loop.

    Args:
        fastmcp: Server to run; a new one is created when None

    """
    server = fastmcp or start_server()
    _serve(lambda: asyncio.run(server.run_async()))
