"""Frequency and impulse responses of the filter-bank methods.

Responses refer to the windowed output ``X̂(n, k)``, which equals the raw output for
unwindowed methods.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..core.csvio import write_csv
from ..core.errors import InvalidInputError, UnsupportedMethodError
from .filterbank import AnalyzerKind, BankDesign, FilterBank, MethodConfig, PreFilterKind, design_bank

DIRICHLET_LIMIT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ResponseCurve:
    """Complex response of bin ``k`` over a frequency grid in cycles/sample."""

    f_grid: NDArray[np.float64]
    values: NDArray[np.complex128]
    k: int
    config: MethodConfig

    @property
    def magnitude(self) -> NDArray[np.float64]:
        """``|H(f)|``."""
        return np.abs(self.values)

    @property
    def magnitude_db(self) -> NDArray[np.float64]:
        """``20·log10 |H(f)|``, floored at the smallest positive double."""
        return 20.0 * np.log10(np.maximum(self.magnitude, np.finfo(np.float64).tiny))

    @property
    def phase(self) -> NDArray[np.float64]:
        """``arg H(f)`` in radians."""
        return np.angle(self.values)


def dirichlet(length: int, f: "float | ArrayLike", k: int) -> Any:
    """Normalized Dirichlet kernel of a length-M rectangular DFT bin.

    Args:
        length: Odd length M
        f: Frequency in cycles/sample, scalar or array
        k: Bin number

    Returns:
        ``sin(Mπx) / (M sin(πx))`` with ``x = f - k/M``; 1 at the removable singularities

    Raises:
        InvalidInputError: If M is not a positive odd integer

    """
    if int(length) != length or length < 1 or length % 2 == 0:
        raise InvalidInputError(f"M must be a positive odd integer, got {length}")
    x = np.asarray(f, dtype=np.float64) - k / length
    near = np.abs(x - np.round(x)) < DIRICHLET_LIMIT_TOLERANCE
    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.sin(length * np.pi * x) / (length * np.sin(np.pi * x))
    value = np.where(near, 1.0, value)
    return float(value) if value.ndim == 0 else value


def _raw_responses(design: BankDesign, f_grid: NDArray[np.float64]) -> NDArray[np.complex128]:
    config = design.config
    length = config.length
    theta = 2.0 * np.pi * f_grid
    if design.analyzer is AnalyzerKind.DIRECT or design.prefilter is not PreFilterKind.GAIN:
        m = np.arange(length)
        if design.taps is not None:
            taps = design.taps
        else:
            taps = np.exp(1j * np.outer(design.omegas, m))
        raw = design.gain * (np.exp(-1j * np.outer(theta, m)) @ taps.T)
        if design.prefilter is PreFilterKind.FADING_COMB:
            raw = raw / (1.0 - design.comb_radius * np.exp(-1j * theta * length))[:, None]
        return raw
    raw = design.gain / (1.0 - design.poles[None, :] * np.exp(-1j * theta)[:, None])
    if design.mixing is not None:
        raw = raw @ design.mixing.entries.T
    return raw


def analytic_response(config: MethodConfig, k: int, f_grid: ArrayLike) -> ResponseCurve:
    """Closed-form response of bin ``k`` for open-loop methods.

    Args:
        config: Method configuration (non-observer)
        k: Bin number
        f_grid: Frequencies in cycles/sample

    Returns:
        The response curve

    Raises:
        UnsupportedMethodError: For observer methods

    """
    if config.method.is_observer:
        raise UnsupportedMethodError(
            f"method {config.method.label} is closed-loop; use empirical_response for observer methods"
        )
    index = config.bin_index(k)
    grid = np.asarray(f_grid, dtype=np.float64)
    design = design_bank(config)
    responses = _raw_responses(design, grid)
    if design.window_matrix is not None:
        responses = responses @ design.window_matrix.T
    return ResponseCurve(f_grid=grid, values=responses[:, index], k=k, config=config)


def empirical_response(config: MethodConfig, k: int, f_grid: ArrayLike, settle: Optional[int] = None) -> ResponseCurve:
    """Measured steady-state response of bin ``k``.

    Each frequency drives a fresh bank with ``exp(j2πfn)`` for ``settle`` samples and
    averages ``X̂(n, k) / exp(j2πfn)`` over the following M samples.

    Args:
        config: Method configuration, observers included
        k: Bin number
        f_grid: Frequencies in cycles/sample
        settle: Samples discarded before measuring, default 50·M

    Returns:
        The response curve

    Raises:
        InvalidInputError: If ``settle`` is negative

    """
    index = config.bin_index(k)
    length = config.length
    settle = 50 * length if settle is None else int(settle)
    if settle < 0:
        raise InvalidInputError(f"settle must be non-negative, got {settle}")
    grid = np.asarray(f_grid, dtype=np.float64)
    n = np.arange(settle + length)
    bank = FilterBank.build(config)
    values = np.empty(grid.shape[0], dtype=np.complex128)
    for i, f in enumerate(grid):
        bank.reset()
        probe = np.exp(2j * np.pi * f * n)
        measured = np.fromiter(
            (frame.windowed[index] for frame in bank.iter_frames(probe)), dtype=np.complex128, count=n.shape[0]
        )
        values[i] = np.mean(measured[settle:] / probe[settle:])
    return ResponseCurve(f_grid=grid, values=values, k=k, config=config)


def impulse_response(config: MethodConfig, k: int, n_samples: int) -> NDArray[np.complex128]:
    """Response of bin ``k`` to a unit impulse at ``n = 0``.

    Args:
        config: Method configuration
        k: Bin number
        n_samples: Number of samples N to record

    Returns:
        ``X̂(n, k)`` for ``n = 0 … N-1``

    Raises:
        InvalidInputError: If ``n_samples < 1``

    """
    if n_samples < 1:
        raise InvalidInputError(f"N must be at least 1, got {n_samples}")
    index = config.bin_index(k)
    impulse = np.zeros(n_samples)
    impulse[0] = 1.0
    bank = FilterBank.build(config)
    return np.fromiter(
        (frame.windowed[index] for frame in bank.iter_frames(impulse)), dtype=np.complex128, count=n_samples
    )


def half_power_width(curve: ResponseCurve) -> float:
    """Width of the main lobe where the power is at least half its peak.

    Edges are linearly interpolated on the (uniform) grid.

    Args:
        curve: Response on a grid that brackets the main lobe

    Returns:
        Width in cycles/sample

    """
    power = curve.magnitude**2
    f = curve.f_grid
    peak = int(np.argmax(power))
    level = 0.5 * power[peak]
    left = peak
    while left > 0 and power[left - 1] >= level:
        left -= 1
    right = peak
    while right < power.shape[0] - 1 and power[right + 1] >= level:
        right += 1

    def crossing(inside: int, outside: int) -> float:
        p_in, p_out = power[inside], power[outside]
        t = (p_in - level) / (p_in - p_out)
        return float(f[inside] + t * (f[outside] - f[inside]))

    f_left = crossing(left, left - 1) if left > 0 else float(f[0])
    f_right = crossing(right, right + 1) if right < power.shape[0] - 1 else float(f[-1])
    return f_right - f_left


def peak_sidelobe_db(curve: ResponseCurve) -> float:
    """Highest response outside the main lobe, relative to the peak.

    The main lobe extends from the peak down to the first local minimum on each side.

    Args:
        curve: Response on a dense grid

    Returns:
        Level in dB (negative); ``-inf`` when nothing lies outside the main lobe

    """
    mag = curve.magnitude
    peak = int(np.argmax(mag))
    left = peak
    while left > 0 and mag[left - 1] <= mag[left]:
        left -= 1
    right = peak
    while right < mag.shape[0] - 1 and mag[right + 1] <= mag[right]:
        right += 1
    outside = np.concatenate((mag[:left], mag[right + 1 :]))
    if outside.size == 0:
        return float("-inf")
    return float(20.0 * np.log10(np.max(outside) / mag[peak]))


def write_response_csv(path: str | Path, curve: ResponseCurve) -> Path:
    """Export ``f, mag_db, phase_rad`` rows.

    Args:
        path: Destination file
        curve: Response to export

    Returns:
        The path written

    """
    rows = zip(curve.f_grid.tolist(), curve.magnitude_db.tolist(), curve.phase.tolist())
    comment = f"method={curve.config.method.label}, K={curve.config.k_max}, B={curve.config.b_max}, k={curve.k}"
    return write_csv(path, ("f", "mag_db", "phase_rad"), rows, comment=comment)


def write_impulse_csv(path: str | Path, h: Sequence[complex], comment: Optional[str] = None) -> Path:
    """Export ``n, re, im, mag`` rows.

    Args:
        path: Destination file
        h: Impulse response samples
        comment: Optional metadata line

    Returns:
        The path written

    """
    values = np.asarray(h, dtype=np.complex128)
    rows = ((n, float(v.real), float(v.imag), float(abs(v))) for n, v in enumerate(values))
    return write_csv(path, ("n", "re", "im", "mag"), rows, comment=comment)
