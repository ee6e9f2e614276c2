"""Streaming recursive-DFT spectrum analysis with an experiment harness and MCP server."""

from importlib.metadata import version

from .dsp import FilterBank, Method, MethodConfig, Precision, SpectrumFrame, build
from .fastmcp_server import arun_server, run_server, start_server

__version__ = version("rdft-kit")

__all__ = [
    "FilterBank",
    "Method",
    "MethodConfig",
    "Precision",
    "SpectrumFrame",
    "arun_server",
    "build",
    "run_server",
    "start_server",
]
