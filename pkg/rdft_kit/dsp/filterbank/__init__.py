"""Filter-bank runtime: configuration, design and the streaming state machine."""

from .bank import FilterBank, SpectrumFrame, build, quality, write_frames_csv
from .config import Method, MethodConfig, MethodSummary, method_summary
from .design import AnalyzerKind, BankDesign, PreFilterKind, design_bank

__all__ = [
    "AnalyzerKind",
    "BankDesign",
    "FilterBank",
    "Method",
    "MethodConfig",
    "MethodSummary",
    "PreFilterKind",
    "SpectrumFrame",
    "build",
    "design_bank",
    "method_summary",
    "quality",
    "write_frames_csv",
]
