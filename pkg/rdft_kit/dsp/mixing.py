"""Mixing matrix that orthonormalizes a bank of damped resonators.

Analyzer ``k`` of the damped bank has impulse response ``(r·exp(jω_k))^m`` with ``r = exp(σ)``.
The Gram matrix of these responses is inverted once, in double precision, to give ``H_mix``.
"""

import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np
from fastmcp.utilities.logging import get_logger
from numpy.typing import NDArray

from ..core.csvio import read_csv, write_csv
from ..core.errors import InvalidInputError
from .numerics import DEFAULT_CONDITION_BOUND, condition_estimate, is_hermitian, solve_linear
from .windows import FreqWindow, window_matrix

logger = get_logger(__name__)

TRUNCATION_LEVEL = 1e-16


@dataclass(frozen=True)
class MixingMatrix:
    """Design result of :func:`design_mixing`."""

    entries: NDArray[np.complex128]
    sigma: float
    b_max: int
    k_max: int
    condition: float
    fused_window: bool = False

    @property
    def length(self) -> int:
        """M = 2K + 1."""
        return 2 * self.k_max + 1

    @property
    def is_hermitian(self) -> bool:
        """Whether the entries are Hermitian within 1e-9 relative."""
        return is_hermitian(self.entries, tol=1e-9)


@dataclass(frozen=True)
class OrthonormalityReport:
    """Deviations of a mixed bank from orthonormality and bin interpolation."""

    gram_deviation: float
    diagonal_deviation: float
    interpolation_deviation: float
    own_bin_deviation: float
    terms: int
    tolerance: float

    @property
    def passed(self) -> bool:
        """True when every deviation is within tolerance."""
        worst = max(self.gram_deviation, self.diagonal_deviation, self.interpolation_deviation, self.own_bin_deviation)
        return worst <= self.tolerance


def _check_design_args(b_max: int, length: int, sigma: float) -> int:
    if int(length) != length or length < 1 or length % 2 == 0:
        raise InvalidInputError(f"M must be a positive odd integer, got {length}")
    k_max = (int(length) - 1) // 2
    if not 0 <= b_max <= k_max:
        raise InvalidInputError(f"B must satisfy 0 <= B <= K={k_max}, got {b_max}")
    if not math.isfinite(sigma) or sigma >= 0:
        raise InvalidInputError(f"sigma must be finite and negative, got {sigma}")
    return k_max


def gram_matrix(b_max: int, length: int, sigma: float) -> NDArray[np.complex128]:
    """Gram matrix of the damped resonator bank.

    Args:
        b_max: Highest bin B
        length: M = 2K + 1
        sigma: Log pole radius, negative

    Returns:
        Hermitian ``(2B+1)×(2B+1)`` matrix with entries ``1 / (1 - exp(σ + j(ω_k2 - ω_k1)))``

    """
    _check_design_args(b_max, length, sigma)
    bins = np.arange(-b_max, b_max + 1)
    lag = bins[:, None] - bins[None, :]
    g = 1.0 / (1.0 - np.exp(sigma + 2j * np.pi * lag / length))
    upper = np.triu(g, 1)
    return np.triu(g) + upper.conj().T


def design_mixing(
    b_max: int,
    length: int,
    sigma: float,
    bound: float = DEFAULT_CONDITION_BOUND,
) -> MixingMatrix:
    """Invert the Gram matrix of the damped bank.

    Args:
        b_max: Highest bin B
        length: M = 2K + 1
        sigma: Log pole radius, negative
        bound: Largest acceptable condition estimate of the Gram matrix

    Returns:
        The mixing matrix with its condition estimate

    """
    k_max = _check_design_args(b_max, length, sigma)
    g = gram_matrix(b_max, length, sigma)
    entries = solve_linear(g, np.eye(g.shape[0], dtype=np.complex128), bound=bound)
    cond = condition_estimate(g)
    if cond > bound / 1e3:
        logger.warning(f"Mixing design B={b_max} M={length} sigma={sigma:.6g} is near the condition bound: {cond:.3e}")
    else:
        logger.info(f"Mixing design B={b_max} M={length} sigma={sigma:.6g}: condition {cond:.3e}")
    return MixingMatrix(entries=entries, sigma=float(sigma), b_max=b_max, k_max=k_max, condition=cond)


def fuse_window(mix: MixingMatrix, win: FreqWindow) -> MixingMatrix:
    """Pre-multiply the mixing matrix by the window matrix.

    Args:
        mix: Unfused mixing matrix
        win: Frequency window, ``b_win <= B``

    Returns:
        ``H_win·H_mix`` flagged as fused

    Raises:
        InvalidInputError: If the matrix is already fused or the window does not fit

    """
    if mix.fused_window:
        raise InvalidInputError("mixing matrix already carries a window")
    h_win = window_matrix(win, mix.b_max, mix.k_max)
    if h_win.shape[1] != mix.entries.shape[0]:
        raise InvalidInputError(f"window matrix {h_win.shape} does not match mixing matrix {mix.entries.shape}")
    return replace(mix, entries=h_win @ mix.entries, fused_window=True)


def orthonormality_check(mix: MixingMatrix, tolerance: float = 1e-7) -> OrthonormalityReport:
    """Verify the mixed bank against its design conditions.

    The mixed responses ``h_k(m) = Σ_k1 H[k, k1]·(r·exp(jω_k1))^m`` are summed until ``r^m`` falls
    below 1e-16. Their cross-Gram against the bin sinusoids must be the identity, and the
    closed-form transfer function evaluated on the unit circle must interpolate the bins.

    Args:
        mix: Unfused mixing matrix
        tolerance: Threshold used by :attr:`OrthonormalityReport.passed`

    Returns:
        The deviation report

    Raises:
        InvalidInputError: For a fused matrix

    """
    if mix.fused_window:
        raise InvalidInputError("orthonormality_check needs an unfused mixing matrix")
    length, sigma = mix.length, mix.sigma
    omegas = 2 * np.pi * np.arange(-mix.b_max, mix.b_max + 1) / length
    terms = int(math.ceil(math.log(TRUNCATION_LEVEL) / sigma)) + 1
    m = np.arange(terms)
    basis = np.exp(np.outer(sigma + 1j * omegas, m))
    responses = mix.entries @ basis
    cross = responses @ np.exp(-1j * np.outer(omegas, m)).T
    eye = np.eye(cross.shape[0])
    gram_deviation = float(np.max(np.abs(cross - eye)))
    diagonal_deviation = float(np.max(np.abs(np.diag(cross) - 1.0)))

    r = math.exp(sigma)
    theta = omegas
    transfer = 1.0 / (1.0 - r * np.exp(1j * (omegas[:, None] - theta[None, :])))
    at_bins = mix.entries @ transfer
    off = at_bins - np.diag(np.diag(at_bins))
    interpolation_deviation = float(np.max(np.abs(off), initial=0.0))
    own_bin_deviation = float(np.max(np.abs(np.diag(at_bins) - 1.0)))
    return OrthonormalityReport(
        gram_deviation=gram_deviation,
        diagonal_deviation=diagonal_deviation,
        interpolation_deviation=interpolation_deviation,
        own_bin_deviation=own_bin_deviation,
        terms=terms,
        tolerance=tolerance,
    )


def write_mixing_csv(path: str | Path, mix: MixingMatrix) -> Path:
    """Export the matrix as ``row, col, real, imag`` with a metadata line.

    Args:
        path: Destination file
        mix: Matrix to export

    Returns:
        The path written

    """
    size = mix.entries.shape[0]
    rows = (
        (i, j, float(mix.entries[i, j].real), float(mix.entries[i, j].imag)) for i in range(size) for j in range(size)
    )
    comment = (
        f"B={mix.b_max}, M={mix.length}, sigma={mix.sigma!r}, condition={mix.condition!r}, fused={mix.fused_window}"
    )
    return write_csv(path, ("row", "col", "real", "imag"), rows, comment=comment)


def load_mixing_csv(path: str | Path) -> MixingMatrix:
    """Import a matrix written by :func:`write_mixing_csv`.

    Args:
        path: Source file

    Returns:
        The matrix with its metadata

    Raises:
        InvalidInputError: If the metadata line or entries are malformed

    """
    comment, header, rows = read_csv(path)
    if comment is None or header != ["row", "col", "real", "imag"]:
        raise InvalidInputError(f"{path} is not a mixing-matrix export")
    try:
        meta = dict(item.strip().split("=", 1) for item in comment.split(","))
        b_max, length = int(meta["B"]), int(meta["M"])
        sigma, cond = float(meta["sigma"]), float(meta["condition"])
        fused = meta.get("fused", "False") == "True"
    except (KeyError, ValueError) as e:
        raise InvalidInputError(f"Malformed mixing-matrix metadata in {path}: {comment}") from e
    size = 2 * b_max + 1
    entries = np.zeros((size, size), dtype=np.complex128)
    if len(rows) != size * size:
        raise InvalidInputError(f"{path} holds {len(rows)} entries, expected {size * size}")
    for row, col, re, im in rows:
        entries[int(row), int(col)] = complex(float(re), float(im))
    return MixingMatrix(
        entries=entries, sigma=sigma, b_max=b_max, k_max=(length - 1) // 2, condition=cond, fused_window=fused
    )
