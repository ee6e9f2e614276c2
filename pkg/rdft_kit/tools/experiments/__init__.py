"""Experiment tools."""

from .detection import DetectionOperation
from .table1 import Table1Operation

__all__ = ["DetectionOperation", "Table1Operation"]
