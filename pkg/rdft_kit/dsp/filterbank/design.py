"""Double-precision design of a filter bank from its MethodConfig.

The design is shared by the streaming bank (which rounds it to the runtime precision)
and by the analytic response evaluation (which uses it as is).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from ..mixing import MixingMatrix, design_mixing, fuse_window
from ..windows import FreqWindow, TimeWindow, WindowKind, slepian_freq, slepian_time, sum_of_cosine, window_matrix
from .config import Method, MethodConfig


class PreFilterKind(str, Enum):
    """Pre-filter realizations."""

    GAIN = "gain"
    COMB = "comb"
    FADING_COMB = "fading_comb"


class AnalyzerKind(str, Enum):
    """Analyzer bank realizations."""

    DIRECT = "direct"
    RESONATOR = "resonator"
    RECURSIVE_MODULATOR = "recursive_modulator"
    TABLE_MODULATOR = "table_modulator"


_ANALYZERS = {
    Method.FIR_DFT: AnalyzerKind.DIRECT,
    Method.FIR_DFT_SLEPIAN: AnalyzerKind.DIRECT,
    Method.FIR_SDFT: AnalyzerKind.RESONATOR,
    Method.MSDFT_RECURSIVE: AnalyzerKind.RECURSIVE_MODULATOR,
    Method.MSDFT_TABLE: AnalyzerKind.TABLE_MODULATOR,
    Method.MSDFT_SLEPIAN: AnalyzerKind.TABLE_MODULATOR,
    Method.DEADBEAT_OBSERVER: AnalyzerKind.RESONATOR,
    Method.OBSERVER: AnalyzerKind.RESONATOR,
    Method.IIR_SDFT: AnalyzerKind.RESONATOR,
    Method.IIR_MSDFT: AnalyzerKind.TABLE_MODULATOR,
    Method.IIR_MSDFT_HANN: AnalyzerKind.TABLE_MODULATOR,
    Method.STABILIZED_IIR_SDFT: AnalyzerKind.RESONATOR,
    Method.BANDPASS: AnalyzerKind.RESONATOR,
}


@dataclass(frozen=True)
class BankDesign:
    """Every coefficient a bank needs, in double precision."""

    config: MethodConfig
    prefilter: PreFilterKind
    gain: float
    analyzer: AnalyzerKind
    omegas: NDArray[np.float64]
    poles: NDArray[np.complex128]
    comb_radius: Optional[float] = None
    time_window: Optional[TimeWindow] = None
    taps: Optional[NDArray[np.complex128]] = None
    freq_window: Optional[FreqWindow] = None
    window_matrix: Optional[NDArray[np.complex128]] = None
    mixing: Optional[MixingMatrix] = None
    synthesis: Optional[NDArray[np.complex128]] = None

    @property
    def feedback(self) -> bool:
        """Outer feedback loop enabled."""
        return self.config.method.is_observer


def _freq_window(config: MethodConfig) -> Optional[FreqWindow]:
    length = config.length
    if config.window is WindowKind.NONE:
        return None
    if config.window is WindowKind.SLEPIAN_FREQ:
        return slepian_freq(length, config.b_win, config.f_delta)
    return sum_of_cosine(config.window, length, config.window_coeffs)


def design_bank(config: MethodConfig) -> BankDesign:
    """Choose blocks and coefficients for ``config``.

    Args:
        config: Validated method configuration

    Returns:
        The double-precision design

    """
    method, length = config.method, config.length
    bins = np.arange(-config.b_max, config.b_max + 1)
    omegas = 2.0 * np.pi * bins / length
    unit_poles = np.exp(1j * omegas)

    prefilter = PreFilterKind.COMB
    gain = 1.0 / length
    comb_radius = None
    poles = unit_poles
    time_window = None
    taps = None
    mixing = None

    if method.is_direct:
        prefilter = PreFilterKind.GAIN
        if method is Method.FIR_DFT_SLEPIAN:
            time_window = slepian_time(length, config.f_delta)
            w = time_window.coeffs
        else:
            w = np.ones(length)
        gain = 1.0 / float(np.sum(w))
        taps = w[None, :] * np.exp(1j * np.outer(omegas, np.arange(length)))
    elif method.is_observer:
        prefilter = PreFilterKind.GAIN
    elif method in (Method.IIR_SDFT, Method.IIR_MSDFT, Method.IIR_MSDFT_HANN):
        prefilter = PreFilterKind.FADING_COMB
        comb_radius = math.exp(config.sigma * length)
        gain = (1.0 - comb_radius) / length
    elif method is Method.STABILIZED_IIR_SDFT:
        prefilter = PreFilterKind.GAIN
        gain = 1.0
        poles = math.exp(config.sigma) * unit_poles
        mixing = design_mixing(config.b_max, length, config.sigma, bound=config.condition_bound)
    elif method is Method.BANDPASS:
        prefilter = PreFilterKind.GAIN
        radius = math.exp(config.sigma)
        gain = 1.0 - radius
        poles = radius * unit_poles

    freq_window = _freq_window(config)
    h_win = None
    if freq_window is not None:
        if mixing is not None:
            mixing = fuse_window(mixing, freq_window)
        else:
            h_win = window_matrix(freq_window, config.b_max, config.k_max)

    synthesis = None
    if config.synthesis_enabled:
        synthesis = np.exp(1j * omegas * config.horizon)

    return BankDesign(
        config=config,
        prefilter=prefilter,
        gain=gain,
        analyzer=_ANALYZERS[method],
        omegas=omegas,
        poles=poles,
        comb_radius=comb_radius,
        time_window=time_window,
        taps=taps,
        freq_window=freq_window,
        window_matrix=h_win,
        mixing=mixing,
        synthesis=synthesis,
    )
