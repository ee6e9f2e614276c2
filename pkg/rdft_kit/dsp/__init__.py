"""Signal-processing library: numerics, window and mixing design, filter banks and responses."""

from .filterbank import FilterBank, Method, MethodConfig, SpectrumFrame, build, method_summary, quality
from .mixing import MixingMatrix, design_mixing, fuse_window, gram_matrix, orthonormality_check
from .numerics import condition_estimate, eig_sym, solve_linear
from .precision import Precision
from .response import ResponseCurve, analytic_response, dirichlet, empirical_response, impulse_response
from .windows import (
    FreqWindow,
    TimeWindow,
    WindowKind,
    concentration,
    freq_to_time,
    slepian_freq,
    slepian_time,
    sum_of_cosine,
)

__all__ = [
    "FilterBank",
    "FreqWindow",
    "Method",
    "MethodConfig",
    "MixingMatrix",
    "Precision",
    "ResponseCurve",
    "SpectrumFrame",
    "TimeWindow",
    "WindowKind",
    "analytic_response",
    "build",
    "concentration",
    "condition_estimate",
    "design_mixing",
    "dirichlet",
    "eig_sym",
    "empirical_response",
    "freq_to_time",
    "fuse_window",
    "gram_matrix",
    "impulse_response",
    "method_summary",
    "orthonormality_check",
    "quality",
    "slepian_freq",
    "slepian_time",
    "solve_linear",
    "sum_of_cosine",
]
