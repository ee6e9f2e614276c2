"""Streaming building blocks: pre-filters and analyzer banks.

Every block holds its state in the runtime dtype and performs its arithmetic there.
Coefficients arrive in double precision and are rounded once, at construction.
"""

import abc
from typing import Any, Type

import numpy as np
from numpy.typing import NDArray

ComplexScalar = Any


class PreFilter(abc.ABC):
    """Scalar stage in front of the analyzer bank."""

    def __init__(self, dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Bind the block to a complex dtype.

        Args:
            dtype: Runtime complex scalar type

        """
        self.dtype = dtype

    @abc.abstractmethod
    def __call__(self, x: ComplexScalar) -> ComplexScalar:
        """Consume one sample and return the pre-filter output."""

    @abc.abstractmethod
    def reset(self) -> None:
        """Return to the zero state."""


class ScalarGain(PreFilter):
    """Memoryless gain ``v = c·x``."""

    def __init__(self, gain: float, dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Store the gain.

        Args:
            gain: Gain c
            dtype: Runtime complex scalar type

        """
        super().__init__(dtype)
        self.gain = dtype(gain).real

    def __call__(self, x: ComplexScalar) -> ComplexScalar:
        """Apply the gain."""
        return x * self.gain

    def reset(self) -> None:
        """Stateless."""


class _RingBuffer:
    def __init__(self, length: int, dtype: Type[np.complexfloating[Any, Any]]) -> None:
        self.data = np.zeros(length, dtype=dtype)
        self.pos = 0

    def swap(self, value: ComplexScalar) -> ComplexScalar:
        """Store ``value`` and return the sample written ``length`` calls ago."""
        old = self.data[self.pos]
        self.data[self.pos] = value
        self.pos = (self.pos + 1) % self.data.shape[0]
        return old

    def reset(self) -> None:
        self.data[:] = 0
        self.pos = 0


class Comb(PreFilter):
    """``v(n) = c·(x(n) - x(n-M))``; the subtraction is left uncompensated."""

    def __init__(self, length: int, gain: float, dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Allocate the delay line.

        Args:
            length: Delay M
            gain: Gain c, usually 1/M
            dtype: Runtime complex scalar type

        """
        super().__init__(dtype)
        self.gain = dtype(gain).real
        self._line = _RingBuffer(length, dtype)

    def __call__(self, x: ComplexScalar) -> ComplexScalar:
        """Push one sample."""
        old = self._line.swap(x)
        return (x - old) * self.gain

    def reset(self) -> None:
        """Clear the delay line."""
        self._line.reset()


class FadingComb(PreFilter):
    """``v(n) = c·(x(n) - x(n-M)) + r_M·v(n-M)`` with ``r_M = exp(σM)``."""

    def __init__(self, length: int, gain: float, radius: float, dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Allocate input and output delay lines.

        Args:
            length: Delay M
            gain: Gain c, usually ``(1 - r_M)/M``
            radius: Comb feedback coefficient r_M
            dtype: Runtime complex scalar type

        """
        super().__init__(dtype)
        self.gain = dtype(gain).real
        self.radius = dtype(radius).real
        self._inputs = _RingBuffer(length, dtype)
        self._outputs = _RingBuffer(length, dtype)

    def __call__(self, x: ComplexScalar) -> ComplexScalar:
        """Push one sample."""
        old_x = self._inputs.swap(x)
        v = (x - old_x) * self.gain + self.radius * self._outputs.data[self._outputs.pos]
        self._outputs.swap(v)
        return v

    def reset(self) -> None:
        """Clear both delay lines."""
        self._inputs.reset()
        self._outputs.reset()


class AnalyzerBank(abc.ABC):
    """Vector of per-bin analyzers driven by the same scalar."""

    def __init__(self, n_bins: int, dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Bind the bank to a size and dtype.

        Args:
            n_bins: Number of analyzers 2B + 1
            dtype: Runtime complex scalar type

        """
        self.n_bins = n_bins
        self.dtype = dtype

    @abc.abstractmethod
    def __call__(self, v: ComplexScalar) -> NDArray[Any]:
        """Advance one sample; the returned array must not be mutated by the caller."""

    @abc.abstractmethod
    def reset(self) -> None:
        """Return to the zero state."""


class DirectFIR(AnalyzerBank):
    """Non-recursive evaluation ``Σ_m taps[k, m]·u(n - m)`` over the last M inputs."""

    def __init__(self, taps: NDArray[np.complex128], dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Store time-reversed taps and a doubled ring buffer.

        Args:
            taps: ``(2B+1)×M`` matrix, ``taps[k, m]`` weights ``u(n - m)``
            dtype: Runtime complex scalar type

        """
        super().__init__(taps.shape[0], dtype)
        self.length = taps.shape[1]
        # oldest sample first, to match the chronological window of the buffer
        self._taps = np.ascontiguousarray(taps[:, ::-1]).astype(dtype)
        self._buf = np.zeros(2 * self.length, dtype=dtype)
        self._pos = 0

    def __call__(self, v: ComplexScalar) -> NDArray[Any]:
        """Push one sample and evaluate every bin."""
        i = self._pos
        self._buf[i] = v
        self._buf[i + self.length] = v
        self._pos = (i + 1) % self.length
        return self._taps @ self._buf[i + 1 : i + 1 + self.length]

    def reset(self) -> None:
        """Clear the delay line."""
        self._buf[:] = 0
        self._pos = 0


class Resonators(AnalyzerBank):
    """First-order complex resonators ``y_k(n) = v(n) + p_k·y_k(n-1)``."""

    def __init__(self, poles: NDArray[np.complex128], dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Store the poles.

        Args:
            poles: One pole per bin
            dtype: Runtime complex scalar type

        """
        super().__init__(poles.shape[0], dtype)
        self.poles = poles.astype(dtype)
        self._state = np.zeros(poles.shape[0], dtype=dtype)

    def __call__(self, v: ComplexScalar) -> NDArray[Any]:
        """Advance every resonator."""
        np.multiply(self._state, self.poles, out=self._state)
        self._state += v
        return self._state

    def reset(self) -> None:
        """Zero the accumulators."""
        self._state[:] = 0


class TableModulator(AnalyzerBank):
    """Demodulate, integrate, remodulate with phasors read from length-M tables."""

    def __init__(self, omegas: NDArray[np.float64], length: int, dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Pre-generate the phasor tables.

        Args:
            omegas: Bin frequencies ``2πk/M`` in radians/sample
            length: Table period M
            dtype: Runtime complex scalar type

        """
        super().__init__(omegas.shape[0], dtype)
        phase = np.outer(np.arange(length), omegas)
        self._down = np.exp(-1j * phase).astype(dtype)
        self._up = np.exp(1j * phase).astype(dtype)
        self._acc = np.zeros(omegas.shape[0], dtype=dtype)
        self._index = 0

    def __call__(self, v: ComplexScalar) -> NDArray[Any]:
        """Accumulate one demodulated sample."""
        i = self._index
        self._acc += self._down[i] * v
        self._index = (i + 1) % self._down.shape[0]
        return self._up[i] * self._acc

    def reset(self) -> None:
        """Zero the accumulators and rewind the table index."""
        self._acc[:] = 0
        self._index = 0


class RecursiveModulator(AnalyzerBank):
    """Modulator whose phasors are advanced by repeated complex multiplication.

    The phasors are rescaled to unit magnitude after every step.
    """

    def __init__(self, omegas: NDArray[np.float64], dtype: Type[np.complexfloating[Any, Any]]) -> None:
        """Seed every phasor at 1.

        Args:
            omegas: Bin frequencies ``2πk/M`` in radians/sample
            dtype: Runtime complex scalar type

        """
        super().__init__(omegas.shape[0], dtype)
        self._rotation = np.exp(-1j * omegas).astype(dtype)
        self._phase = np.ones(omegas.shape[0], dtype=dtype)
        self._acc = np.zeros(omegas.shape[0], dtype=dtype)

    def __call__(self, v: ComplexScalar) -> NDArray[Any]:
        """Accumulate one demodulated sample and rotate the phasors."""
        self._acc += self._phase * v
        out = np.conj(self._phase) * self._acc
        self._phase *= self._rotation
        self._phase /= np.abs(self._phase)
        return out

    def reset(self) -> None:
        """Zero the accumulators and reseed the phasors."""
        self._acc[:] = 0
        self._phase[:] = 1
