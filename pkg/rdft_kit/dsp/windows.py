"""Window design: time-domain Slepian, frequency-domain Slepian and sum-of-cosine windows.

Time windows are causal, length ``M = 2K + 1``, centred on ``m = K``. Frequency windows hold
``2·b_win + 1`` coefficients for bin offsets ``-b_win … +b_win``; ``coeffs`` already carry the
``exp(-j2πkK/M)`` factor that delays the implied time window by ``K`` samples.
"""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from fastmcp.utilities.logging import get_logger
from numpy.typing import NDArray
from scipy.linalg import toeplitz

from ..core.csvio import write_csv
from ..core.errors import InvalidInputError
from .numerics import eig_sym

logger = get_logger(__name__)

HANN_COEFFS = (0.5, 1.0, 0.5)


class WindowKind(str, Enum):
    """Frequency-domain window applied to the bin outputs."""

    NONE = "none"
    HANN = "hann"
    SLEPIAN_FREQ = "slepian_freq"
    CUSTOM = "custom"

    @classmethod
    def parse(cls, value: "str | WindowKind | None") -> "WindowKind":
        """Accept a member, its value or None (no window).

        Args:
            value: Window name

        Returns:
            The matching member

        Raises:
            InvalidInputError: For unknown names

        """
        if value is None:
            return cls.NONE
        if isinstance(value, WindowKind):
            return value
        try:
            return cls(str(value).lower())
        except ValueError as e:
            names = ", ".join(kind.value for kind in cls)
            raise InvalidInputError(f"window must be one of {names}; got {value!r}") from e


@dataclass(frozen=True)
class TimeWindow:
    """Causal time-domain window ``w(m)``, ``m = 0 … M-1``."""

    coeffs: NDArray[np.float64]
    f_delta: Optional[float] = None
    alpha: Optional[float] = None

    @property
    def length(self) -> int:
        """Window length M."""
        return int(self.coeffs.shape[0])

    @property
    def half_length(self) -> int:
        """K = (M - 1) / 2."""
        return (self.length - 1) // 2


@dataclass(frozen=True)
class FreqWindow:
    """Frequency-domain window convolved across bins."""

    coeffs: NDArray[np.complex128]
    raw_coeffs: NDArray[np.float64]
    b_win: int
    length: int
    kind: WindowKind
    f_delta: Optional[float] = None
    alpha: Optional[float] = None

    @property
    def offsets(self) -> NDArray[np.int64]:
        """Bin offsets ``-b_win … +b_win`` matching ``coeffs``."""
        return np.arange(-self.b_win, self.b_win + 1)

    @property
    def is_identity(self) -> bool:
        """True for the single-coefficient unit window."""
        return self.b_win == 0


def _check_length(length: int) -> int:
    if int(length) != length or length < 1 or length % 2 == 0:
        raise InvalidInputError(f"Window length M must be a positive odd integer, got {length}")
    return int(length)


def _check_f_delta(f_delta: float) -> float:
    if not 0.0 < f_delta <= 0.5:
        raise InvalidInputError(f"f_delta must satisfy 0 < f_delta <= 0.5, got {f_delta}")
    return float(f_delta)


def concentration_matrix(length: int, f_delta: float) -> NDArray[np.float64]:
    """Band-limited power matrix Q for a length-M window.

    Entries are ``sin(2π d f_delta) / (π d)`` for lag ``d`` and exactly ``2·f_delta`` on the diagonal.

    Args:
        length: Window length M
        f_delta: Half-bandwidth in cycles/sample

    Returns:
        Real symmetric Toeplitz M×M matrix

    """
    length = _check_length(length)
    f_delta = _check_f_delta(f_delta)
    lags = np.arange(length)
    return toeplitz(2.0 * f_delta * np.sinc(2.0 * f_delta * lags))


def _phase_factors(b_win: int, length: int) -> NDArray[np.complex128]:
    k_half = (length - 1) // 2
    offsets = np.arange(-b_win, b_win + 1)
    return np.exp(-2j * np.pi * offsets * k_half / length)


def _freq_window(
    raw: NDArray[np.float64],
    length: int,
    kind: WindowKind,
    f_delta: Optional[float] = None,
    alpha: Optional[float] = None,
) -> FreqWindow:
    b_win = (raw.shape[0] - 1) // 2
    return FreqWindow(
        coeffs=raw * _phase_factors(b_win, length),
        raw_coeffs=raw,
        b_win=b_win,
        length=length,
        kind=kind,
        f_delta=f_delta,
        alpha=alpha,
    )


def slepian_time(length: int, f_delta: float) -> TimeWindow:
    """Time-domain Slepian window of maximal power concentration in ``|f| <= f_delta``.

    Args:
        length: Odd window length M
        f_delta: Half-bandwidth in cycles/sample, ``0 < f_delta <= 0.5``

    Returns:
        Unit-norm window with positive sum; ``alpha`` is the top eigenvalue of Q

    """
    q = concentration_matrix(length, f_delta)
    values, vectors = eig_sym(q)
    w = np.real(vectors[:, 0])
    if w.sum() < 0:
        w = -w
    logger.info(f"Time Slepian M={length} f_delta={f_delta:.6g}: alpha={values[0]:.12g}")
    return TimeWindow(coeffs=w, f_delta=f_delta, alpha=float(values[0]))


def freq_concentration_matrix(length: int, b_win: int, f_delta: float) -> NDArray[np.complex128]:
    """Concentration matrix restricted to the span of ``2·b_win + 1`` bin sinusoids.

    Args:
        length: Odd window length M
        b_win: Window half-width in bins
        f_delta: Half-bandwidth in cycles/sample

    Returns:
        ``F^H Q F / M`` with ``F(m, k) = exp(j2πmk/M)`` over non-causal ``m = -K … K``

    """
    q = concentration_matrix(length, f_delta)
    k_half = (length - 1) // 2
    m = np.arange(-k_half, k_half + 1)
    k = np.arange(-b_win, b_win + 1)
    f = np.exp(2j * np.pi * np.outer(m, k) / length)
    return f.conj().T @ q @ f / length


def slepian_freq(length: int, b_win: int, f_delta: float) -> FreqWindow:
    """Frequency-domain Slepian window with ``2·b_win + 1`` coefficients.

    Args:
        length: Odd window length M
        b_win: Half-width in bins, ``1 <= b_win <= K``
        f_delta: Half-bandwidth in cycles/sample

    Returns:
        Window normalized so the centre raw coefficient is 1

    Raises:
        InvalidInputError: If ``b_win`` is out of range

    """
    length = _check_length(length)
    k_half = (length - 1) // 2
    if not 1 <= b_win <= k_half:
        raise InvalidInputError(f"b_win must satisfy 1 <= b_win <= K={k_half}, got {b_win}")
    g = freq_concentration_matrix(length, b_win, f_delta)
    values, vectors = eig_sym(np.real(g))
    raw = np.real(vectors[:, 0])
    raw = raw / raw[b_win]
    logger.info(f"Frequency Slepian M={length} b_win={b_win} f_delta={f_delta:.6g}: alpha={values[0]:.12g}")
    return _freq_window(raw, length, WindowKind.SLEPIAN_FREQ, f_delta=f_delta, alpha=float(values[0]))


def sum_of_cosine(kind: "str | WindowKind", length: int, coefficients: Optional[Sequence[float]] = None) -> FreqWindow:
    """Sum-of-cosine frequency window.

    Args:
        kind: ``hann`` or ``custom``
        length: Odd window length M
        coefficients: Raw coefficients for ``custom``, odd count, centre equal to 1

    Returns:
        The phase-corrected window

    Raises:
        InvalidInputError: If the kind or coefficients are not acceptable

    """
    length = _check_length(length)
    window_kind = WindowKind.parse(kind)
    if window_kind is WindowKind.HANN:
        raw = np.asarray(HANN_COEFFS, dtype=np.float64)
    elif window_kind is WindowKind.CUSTOM:
        if coefficients is None:
            raise InvalidInputError("custom window requires coefficients")
        raw = np.asarray(coefficients, dtype=np.float64)
        if raw.ndim != 1 or raw.shape[0] % 2 == 0:
            raise InvalidInputError(f"custom window needs an odd number of coefficients, got {raw.shape}")
        if raw.shape[0] > length:
            raise InvalidInputError(f"custom window has {raw.shape[0]} coefficients, more than M={length}")
        if not np.all(np.isfinite(raw)):
            raise InvalidInputError("custom window coefficients must be finite")
        if abs(raw[raw.shape[0] // 2] - 1.0) > 1e-12:
            raise InvalidInputError("custom window centre coefficient must equal 1")
    else:
        raise InvalidInputError(f"sum_of_cosine supports hann and custom, got {window_kind.value}")
    return _freq_window(raw, length, window_kind)


def identity_window(length: int) -> FreqWindow:
    """Single unit coefficient; convolution leaves spectra unchanged.

    Args:
        length: Odd window length M

    Returns:
        The identity window

    """
    return sum_of_cosine(WindowKind.CUSTOM, length, (1.0,))


def concentration(window: TimeWindow, f_delta: float) -> float:
    """Fraction of window power inside ``|f| <= f_delta``.

    Args:
        window: Time window
        f_delta: Half-bandwidth in cycles/sample

    Returns:
        Rayleigh quotient ``w^H Q w / w^H w`` in [0, 1]

    Raises:
        InvalidInputError: For an all-zero window

    """
    w = np.asarray(window.coeffs)
    power = float(np.real(np.vdot(w, w)))
    if power == 0.0:
        raise InvalidInputError("concentration of an all-zero window is undefined")
    q = concentration_matrix(w.shape[0], f_delta)
    return float(np.real(np.vdot(w, q @ w)) / power)


def freq_to_time(window: FreqWindow, length: Optional[int] = None) -> TimeWindow:
    """Causal time-domain equivalent of a frequency window.

    Args:
        window: Frequency window
        length: Window length M, defaults to the length the window was designed for

    Returns:
        ``w(m) = Σ_k coeffs(k)·exp(j2πmk/M)`` for ``m = 0 … M-1``; real for symmetric raw coefficients

    Raises:
        InvalidInputError: If ``b_win`` exceeds ``K``

    """
    length = _check_length(length or window.length)
    if window.b_win > (length - 1) // 2:
        raise InvalidInputError(f"b_win={window.b_win} exceeds K for M={length}")
    coeffs = window.coeffs
    if length != window.length:
        coeffs = window.raw_coeffs * _phase_factors(window.b_win, length)
    m = np.arange(length)
    w = np.exp(2j * np.pi * np.outer(m, window.offsets) / length) @ coeffs
    if np.max(np.abs(w.imag)) <= 1e-12 * max(np.max(np.abs(w)), 1.0):
        w = w.real
    alpha = concentration(TimeWindow(coeffs=w), window.f_delta) if window.f_delta else None
    return TimeWindow(coeffs=w, f_delta=window.f_delta, alpha=alpha)


def window_matrix(window: FreqWindow, b_max: int, k_max: int) -> NDArray[np.complex128]:
    """Banded matrix that applies ``window`` to a vector of bins ``-b_max … b_max``.

    Output bin ``k`` is ``Σ_k' coeffs(k')·X(k + k')``. With a full bank (``b_max == k_max``) bin
    indices wrap modulo M; otherwise the ``b_win`` outermost bins on each side pass through.

    Args:
        window: Frequency window
        b_max: Highest bin of the bank
        k_max: Highest measurable bin (M = 2K + 1)

    Returns:
        ``(2B+1)×(2B+1)`` complex matrix

    Raises:
        InvalidInputError: If the window does not fit the bank

    """
    if window.b_win > b_max:
        raise InvalidInputError(f"b_win={window.b_win} must not exceed b_max={b_max}")
    length = 2 * k_max + 1
    coeffs = window.coeffs if length == window.length else window.raw_coeffs * _phase_factors(window.b_win, length)
    size = 2 * b_max + 1
    h = np.zeros((size, size), dtype=np.complex128)
    for row, k in enumerate(range(-b_max, b_max + 1)):
        if b_max == k_max:
            for c, offset in zip(coeffs, window.offsets):
                h[row, (k + offset + k_max) % length] += c
        elif abs(k) <= b_max - window.b_win:
            h[row, row - window.b_win : row + window.b_win + 1] = coeffs
        else:
            h[row, row] = 1.0
    return h


def write_window_csv(path: str | Path, window: "TimeWindow | FreqWindow") -> Path:
    """Export window coefficients as ``index, real, imag`` rows.

    Frequency windows are indexed by bin offset, time windows by sample.

    Args:
        path: Destination file
        window: Window to export

    Returns:
        The path written

    """
    if isinstance(window, FreqWindow):
        index = window.offsets
        values = np.asarray(window.coeffs, dtype=np.complex128)
        comment = f"kind={window.kind.value}, M={window.length}, b_win={window.b_win}, alpha={window.alpha}"
    else:
        index = np.arange(window.length)
        values = np.asarray(window.coeffs, dtype=np.complex128)
        comment = f"kind=time, M={window.length}, f_delta={window.f_delta}, alpha={window.alpha}"
    rows = ((int(i), float(v.real), float(v.imag)) for i, v in zip(index, values))
    return write_csv(path, ("index", "real", "imag"), rows, comment=comment)
