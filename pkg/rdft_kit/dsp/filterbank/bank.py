"""Per-sample filter-bank state machine.

Each step runs, in order: feedback subtraction (observers), pre-filter, analyzer bank,
mixing, frequency window, synthesis, and the one-sample delay of the synthesized estimate.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Iterator, List, Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from ...core.csvio import write_csv
from ...core.errors import InvalidStateError
from .blocks import (
    AnalyzerBank,
    Comb,
    DirectFIR,
    FadingComb,
    PreFilter,
    RecursiveModulator,
    Resonators,
    ScalarGain,
    TableModulator,
)
from .config import MethodConfig
from .design import AnalyzerKind, BankDesign, PreFilterKind, design_bank


@dataclass(frozen=True)
class SpectrumFrame:
    """Output of one step.

    ``raw`` and ``windowed`` hold bins ``-B … +B``. ``x_hat`` is the estimate of ``x(n + l)`` and
    ``err`` the prediction error ``x(n) - x_hat`` from the previous step. Both are None when
    synthesis is disabled; ``err`` is also None unless ``l = 1``, the only horizon where the
    previous estimate targets the current sample.
    """

    n: int
    raw: NDArray[Any]
    windowed: NDArray[Any]
    x_hat: Optional[complex] = None
    err: Optional[complex] = None


class FilterBank:
    """Streaming spectrum estimator for one MethodConfig.

    Instances are sequential state machines; distinct instances share no state.
    """

    def __init__(self, design: BankDesign) -> None:
        """Round the design to the runtime precision and allocate state.

        Args:
            design: Double-precision design from :func:`design_bank`

        """
        self.design = design
        self.config = design.config
        dtype = self.config.precision.complex_dtype
        self._dtype = dtype
        self._prefilter = self._make_prefilter(design, dtype)
        self._analyzers = self._make_analyzers(design, dtype)
        self._mixing = None if design.mixing is None else design.mixing.entries.astype(dtype)
        self._window = None if design.window_matrix is None else design.window_matrix.astype(dtype)
        self._synthesis = None if design.synthesis is None else design.synthesis.astype(dtype)
        self._feedback = design.feedback
        self._one_step = self.config.horizon == 1
        self._x_hat_delayed = dtype(0)
        self.n = 0

    @classmethod
    def build(cls, config: MethodConfig) -> "FilterBank":
        """Design and instantiate a zero-state bank.

        Args:
            config: Validated method configuration

        Returns:
            The bank

        """
        return cls(design_bank(config))

    @staticmethod
    def _make_prefilter(design: BankDesign, dtype: Any) -> PreFilter:
        length = design.config.length
        if design.prefilter is PreFilterKind.COMB:
            return Comb(length, design.gain, dtype)
        if design.prefilter is PreFilterKind.FADING_COMB:
            return FadingComb(length, design.gain, design.comb_radius, dtype)
        return ScalarGain(design.gain, dtype)

    @staticmethod
    def _make_analyzers(design: BankDesign, dtype: Any) -> AnalyzerBank:
        if design.analyzer is AnalyzerKind.DIRECT:
            return DirectFIR(design.taps, dtype)
        if design.analyzer is AnalyzerKind.RECURSIVE_MODULATOR:
            return RecursiveModulator(design.omegas, dtype)
        if design.analyzer is AnalyzerKind.TABLE_MODULATOR:
            return TableModulator(design.omegas, design.config.length, dtype)
        return Resonators(design.poles, dtype)

    def step(self, x: complex) -> SpectrumFrame:
        """Consume one sample.

        Args:
            x: Input sample, rounded to the runtime precision on entry

        Returns:
            The frame for sample ``n``

        """
        x = self._dtype(x)
        drive = x - self._x_hat_delayed if self._feedback else x
        y = self._analyzers(self._prefilter(drive))
        raw = self._mixing @ y if self._mixing is not None else y.copy()
        windowed = self._window @ raw if self._window is not None else raw
        x_hat = err = None
        if self._synthesis is not None:
            if self._one_step:
                err = x - self._x_hat_delayed
            x_hat = self._synthesis @ raw
            self._x_hat_delayed = x_hat
        frame = SpectrumFrame(n=self.n, raw=raw, windowed=windowed, x_hat=x_hat, err=err)
        self.n += 1
        return frame

    def iter_frames(self, xs: Iterable[complex]) -> Iterator[SpectrumFrame]:
        """Lazily step over a stream.

        Args:
            xs: Input samples

        Yields:
            One frame per sample

        """
        step = self.step
        for x in xs:
            yield step(x)

    def process(self, xs: Iterable[complex]) -> List[SpectrumFrame]:
        """Step over every sample and keep every frame.

        Args:
            xs: Input samples

        Returns:
            The frames, in order

        """
        return list(self.iter_frames(xs))

    def reset(self) -> None:
        """Return to the zero state with ``n = 0``."""
        self._prefilter.reset()
        self._analyzers.reset()
        self._x_hat_delayed = self._dtype(0)
        self.n = 0


def build(config: MethodConfig) -> FilterBank:
    """Design and instantiate a zero-state bank.

    Args:
        config: Validated method configuration

    Returns:
        The bank

    """
    return FilterBank.build(config)


def quality(frames: Sequence[SpectrumFrame]) -> float:
    """Mean prediction-error magnitude over ``frames``.

    Args:
        frames: Frames from a bank with one-step synthesis (``l = 1``)

    Returns:
        ``mean |err|``

    Raises:
        InvalidStateError: If no frame carries a one-step error or no frames are given

    """
    if not frames:
        raise InvalidStateError("quality needs at least one frame")
    errors = [frame.err for frame in frames]
    if any(e is None for e in errors):
        raise InvalidStateError("quality needs one-step synthesis (observer method or horizon 1)")
    return float(np.mean(np.abs(np.asarray(errors, dtype=np.complex128))))


def write_frames_csv(path: str | Path, frames: Iterable[SpectrumFrame], b_max: int) -> Path:
    """Export frames as ``n, k, raw_re, raw_im, win_re, win_im`` rows.

    Args:
        path: Destination file
        frames: Frames to export
        b_max: Highest bin B of the bank

    Returns:
        The path written

    """
    rows = (
        (frame.n, k, float(r.real), float(r.imag), float(w.real), float(w.imag))
        for frame in frames
        for k, r, w in zip(range(-b_max, b_max + 1), frame.raw, frame.windowed)
    )
    return write_csv(path, ("n", "k", "raw_re", "raw_im", "win_re", "win_im"), rows)
