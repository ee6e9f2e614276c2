"""Registers the analysis operations as MCP tools at runtime."""

from importlib import import_module
from typing import Any, List, Optional

from fastmcp.tools import Tool
from fastmcp.utilities.logging import get_logger
from mcp.types import ToolAnnotations

from .core import AsyncOperation, read_tool_section
from .custom_fastmcp import AnalysisFastMCP, AnalysisTool

logger = get_logger(__name__)


class ToolFactory:
    """Instantiate every operation exported by a module and register it with the server.

    Operations can be filtered with ``include`` / ``exclude`` lists of tool names read from
    ``[tool.rdft.factory]`` of the root directory's pyproject.toml (or a given TOML file).
    """

    factory_section = "factory"

    def __init__(self, mcp_instance: AnalysisFastMCP):
        """Initialize the tool factory with an MCP instance.

        Args:
            mcp_instance: The server that receives the tools

        """
        self.mcp = mcp_instance

    def __call__(self, obj: List[str], root_dir: str, config_toml: Optional[str] = None) -> None:
        """Register the operations of each module in ``obj``.

        Args:
            obj: Module paths whose ``__all__`` lists AsyncOperation classes
            root_dir: Output directory handed to every operation
            config_toml: TOML file relative to ``root_dir`` holding the factory section

        """
        conf = self.get_configuration(root_dir, config_toml)
        include = conf.get("include", [])
        exclude = conf.get("exclude", [])

        for module_str in obj:
            module = import_module(module_str)
            for op_name in module.__all__:
                op = getattr(module, op_name)
                if include and op.name not in include:
                    continue
                if exclude and op.name in exclude:
                    continue
                self.mcp.add_fast_tool(tool=self.create_tool(op(root_dir=root_dir)))
        logger.info(f"Staged analysis server writing to: {root_dir}")

    def create_tool(self, func: AsyncOperation) -> Tool:
        """Create a Tool instance from an AsyncOperation.

        Args:
            func: The operation to expose

        Returns:
            A Tool carrying the operation's name and docstring

        """
        return AnalysisTool.from_function(
            fn=func.__call__,
            name=func.name,
            description=func.docstring,
            annotations=ToolAnnotations(destructiveHint=False, idempotentHint=True),
        )

    def get_configuration(self, root_dir: str, config_toml: Optional[str] = None) -> dict[str, Any]:
        """Read the factory section.

        Args:
            root_dir: Directory holding the TOML file
            config_toml: File name relative to ``root_dir``; pyproject.toml when absent

        Returns:
            The ``include`` / ``exclude`` options, empty when unset

        """
        return read_tool_section(root_dir, self.factory_section, config_toml)
