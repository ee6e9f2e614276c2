"""Analysis operations exposed as MCP tools and CLI subcommands."""

from .design import DesignMixingOperation, DesignWindowOperation
from .experiments import DetectionOperation, Table1Operation
from .methods import ListMethodsOperation
from .response import FreqResponseOperation, ImpulseResponseOperation

__all__ = [
    "DesignWindowOperation",
    "DesignMixingOperation",
    "FreqResponseOperation",
    "ImpulseResponseOperation",
    "Table1Operation",
    "DetectionOperation",
    "ListMethodsOperation",
]
