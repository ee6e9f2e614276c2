"""Method catalogue and the immutable configuration of one filter bank."""

import math
from dataclasses import asdict, dataclass, fields
from enum import IntEnum
from typing import Any, Dict, Mapping, Optional, Tuple

from fastmcp.utilities.logging import get_logger

from ...core.config import dump_flat_config, normalize_keys, parse_flat_config
from ...core.errors import InvalidInputError
from ..numerics import DEFAULT_CONDITION_BOUND
from ..precision import Precision
from ..windows import HANN_COEFFS, WindowKind

logger = get_logger(__name__)


class Method(IntEnum):
    """The twelve filter-bank methods plus the band-pass diagnostic bank."""

    BANDPASS = 0
    FIR_DFT = 1
    FIR_DFT_SLEPIAN = 2
    FIR_SDFT = 3
    MSDFT_RECURSIVE = 4
    MSDFT_TABLE = 5
    MSDFT_SLEPIAN = 6
    DEADBEAT_OBSERVER = 7
    OBSERVER = 8
    IIR_SDFT = 9
    IIR_MSDFT = 10
    IIR_MSDFT_HANN = 11
    STABILIZED_IIR_SDFT = 12

    @classmethod
    def parse(cls, value: "int | str | Method") -> "Method":
        """Accept a member, its number, its name or ``"bandpass"``.

        Args:
            value: Method identifier

        Returns:
            The matching member

        Raises:
            InvalidInputError: For unknown identifiers

        """
        if isinstance(value, Method):
            return value
        text = str(value).strip()
        try:
            return cls(int(text))
        except ValueError:
            pass
        try:
            return cls[text.upper().replace("-", "_")]
        except KeyError as e:
            raise InvalidInputError(f"Unknown method {value!r}; use 1-12 or 'bandpass'") from e

    @property
    def label(self) -> str:
        """Short name used in file names."""
        return "bandpass" if self is Method.BANDPASS else str(int(self))

    @property
    def is_observer(self) -> bool:
        """Uses the outer feedback loop."""
        return self in (Method.DEADBEAT_OBSERVER, Method.OBSERVER)

    @property
    def is_iir(self) -> bool:
        """Needs a negative forgetting factor sigma."""
        return self in (
            Method.IIR_SDFT,
            Method.IIR_MSDFT,
            Method.IIR_MSDFT_HANN,
            Method.STABILIZED_IIR_SDFT,
            Method.BANDPASS,
        )

    @property
    def is_direct(self) -> bool:
        """Non-recursive FIR evaluation."""
        return self in (Method.FIR_DFT, Method.FIR_DFT_SLEPIAN)


@dataclass(frozen=True)
class MethodSummary:
    """Structure and output characteristics of one method."""

    method: Method
    family: str
    impulse_response: str
    recursion: str
    window: str
    outer_feedback: bool
    main_lobe: str
    side_lobes: str
    rounding_accumulation: str


_SUMMARIES: Dict[Method, Tuple[str, str, str, str, bool, str, str, str]] = {
    Method.FIR_DFT: ("DFT", "FIR", "No", "Rectangular Time", False, "Narrow", "High", "No"),
    Method.FIR_DFT_SLEPIAN: ("DFT", "FIR", "No", "Slepian Time", False, "Wide", "Low", "No"),
    Method.FIR_SDFT: ("SDFT", "FIR", "Yes", "Rectangular Time", False, "Narrow", "High", "Yes"),
    Method.MSDFT_RECURSIVE: (
        "mSDFT", "FIR", "Yes (Modulated)", "Rectangular Time", False, "Narrow", "High", "Yes (In Some Cases)",
    ),
    Method.MSDFT_TABLE: (
        "mSDFT", "FIR", "Yes (Pre-Gen. Modulator)", "Rectangular Time", False, "Narrow", "High", "Yes (In Some Cases)",
    ),
    Method.MSDFT_SLEPIAN: ("mSDFT", "FIR", "Yes", "Slepian Frequency", False, "Wide", "Low", "Yes (In Some Cases)"),
    Method.DEADBEAT_OBSERVER: ("Deadbeat Observer", "FIR", "Yes", "Rectangular Time", True, "Narrow", "High", "No"),
    Method.OBSERVER: ("Non-Deadbeat Observer", "IIR", "Yes", "Fading Time", True, "Sharp", "Flat", "No"),
    Method.IIR_SDFT: ("mSDFT", "IIR", "Yes", "Fading Time", False, "Sharp", "Flat", "Yes"),
    Method.IIR_MSDFT: (
        "mSDFT", "IIR", "Yes (Pre-Gen. Modulator)", "Fading Time", False, "Sharp", "Flat", "Yes (In Some Cases)",
    ),
    Method.IIR_MSDFT_HANN: (
        "mSDFT", "IIR", "Yes (Pre-Gen. Modulator)", "Fading Time & Hann Freq.", False,
        "Wide & Non-Monotonic", "Low", "Yes (In Some Cases)",
    ),
    Method.STABILIZED_IIR_SDFT: ("SDFT", "IIR", "Yes (Freq. Mixing)", "Fading Time", False, "Sharp", "Flat", "No"),
    Method.BANDPASS: ("Band-Pass Bank", "IIR", "Yes", "Fading Time", False, "Wide", "High", "No"),
}  # fmt: skip


def method_summary(method: "int | str | Method") -> MethodSummary:
    """Structure and output summary of a method.

    Args:
        method: Method identifier

    Returns:
        The summary row

    """
    member = Method.parse(method)
    return MethodSummary(member, *_SUMMARIES[member])


_DEFAULT_WINDOWS = {
    Method.MSDFT_SLEPIAN: WindowKind.SLEPIAN_FREQ,
    Method.IIR_MSDFT_HANN: WindowKind.HANN,
}
_DEFAULT_B_WIN = {WindowKind.NONE: 0, WindowKind.HANN: 1, WindowKind.SLEPIAN_FREQ: 2}


@dataclass(frozen=True)
class MethodConfig:
    """Complete, validated description of one filter bank.

    Unset (None) fields are resolved to the method defaults on construction:
    ``b_max`` to ``k_max``; the window to Slepian (method 6), Hann (method 11) or none;
    ``b_win`` to the window's natural half-width; ``f_delta`` to ``2/M`` for the time Slepian of
    method 2 and ``3/M`` for frequency Slepians; ``sigma`` to ``-1/M`` for IIR methods;
    ``horizon`` to 1 for observers. Synthesis is disabled when ``horizon`` stays None.
    """

    method: Method
    k_max: int
    b_max: Optional[int] = None
    b_win: Optional[int] = None
    sigma: Optional[float] = None
    horizon: Optional[int] = None
    precision: Precision = Precision.DOUBLE
    window: Optional[WindowKind] = None
    f_delta: Optional[float] = None
    window_coeffs: Optional[Tuple[float, ...]] = None
    condition_bound: float = DEFAULT_CONDITION_BOUND

    def __post_init__(self) -> None:
        """Resolve defaults and validate.

        Raises:
            InvalidInputError: Naming the first violated constraint

        """
        method = Method.parse(self.method)
        _set = object.__setattr__
        _set(self, "method", method)
        _set(self, "precision", Precision.parse(self.precision))
        if isinstance(self.k_max, bool) or int(self.k_max) != self.k_max or self.k_max < 0:
            raise InvalidInputError(f"k_max must be a non-negative integer, got {self.k_max}")
        _set(self, "k_max", int(self.k_max))
        length = 2 * self.k_max + 1

        b_max = self.k_max if self.b_max is None else int(self.b_max)
        if not 0 <= b_max <= self.k_max:
            raise InvalidInputError(f"b_max must satisfy 0 <= b_max <= k_max={self.k_max}, got {b_max}")
        _set(self, "b_max", b_max)

        if self.window is None:
            window = _DEFAULT_WINDOWS.get(method, WindowKind.NONE)
        else:
            window = WindowKind.parse(self.window)
        _set(self, "window", window)
        if self.window_coeffs is not None:
            _set(self, "window_coeffs", tuple(float(c) for c in self.window_coeffs))
        if window is WindowKind.HANN:
            _set(self, "window_coeffs", HANN_COEFFS)
        if window is WindowKind.CUSTOM:
            if not self.window_coeffs:
                raise InvalidInputError("window=custom requires window_coeffs")
            natural_b_win = (len(self.window_coeffs) - 1) // 2
        else:
            natural_b_win = _DEFAULT_B_WIN[window]
        b_win = natural_b_win if self.b_win is None else int(self.b_win)
        if not 0 <= b_win <= b_max:
            raise InvalidInputError(f"b_win must satisfy 0 <= b_win <= b_max={b_max}, got {b_win}")
        if window in (WindowKind.HANN, WindowKind.CUSTOM) and b_win != natural_b_win:
            raise InvalidInputError(f"b_win={b_win} does not match the {natural_b_win} of the {window.value} window")
        if window is WindowKind.SLEPIAN_FREQ and b_win < 1:
            raise InvalidInputError("slepian_freq window needs b_win >= 1")
        _set(self, "b_win", b_win)

        f_delta = self.f_delta
        if f_delta is None:
            if method is Method.FIR_DFT_SLEPIAN:
                f_delta = 2.0 / length
            elif window is WindowKind.SLEPIAN_FREQ:
                f_delta = 3.0 / length
        if f_delta is not None:
            f_delta = float(f_delta)
            if not 0.0 < f_delta <= 0.5:
                raise InvalidInputError(f"f_delta must satisfy 0 < f_delta <= 0.5, got {f_delta}")
        _set(self, "f_delta", f_delta)

        if method is Method.DEADBEAT_OBSERVER and b_max != self.k_max:
            raise InvalidInputError("method 7 (deadbeat observer) requires b_max == k_max; use method 8 otherwise")
        if method is Method.OBSERVER and b_max >= self.k_max:
            raise InvalidInputError("method 8 (observer) requires b_max < k_max; use method 7 for a full bank")

        sigma = self.sigma
        if method.is_iir:
            sigma = -1.0 / length if sigma is None else float(sigma)
            if not math.isfinite(sigma) or sigma >= 0:
                raise InvalidInputError(f"sigma must be finite and negative for method {method.label}, got {sigma}")
        elif sigma is not None:
            logger.warning(f"sigma={sigma} is ignored by method {method.label}")
            sigma = None
        _set(self, "sigma", sigma)

        horizon = self.horizon
        if method.is_observer:
            horizon = 1 if horizon is None else int(horizon)
            if horizon < 1:
                raise InvalidInputError(f"observer methods require horizon l >= 1, got {horizon}")
        elif horizon is not None:
            horizon = int(horizon)
        _set(self, "horizon", horizon)

        if not self.condition_bound > 1:
            raise InvalidInputError(f"condition_bound must exceed 1, got {self.condition_bound}")

    @property
    def length(self) -> int:
        """M = 2K + 1."""
        return 2 * self.k_max + 1

    @property
    def n_bins(self) -> int:
        """Number of analyzers, 2B + 1."""
        return 2 * self.b_max + 1

    @property
    def synthesis_enabled(self) -> bool:
        """Whether frames carry ``x_hat`` (and ``err`` when ``horizon == 1``)."""
        return self.horizon is not None

    def bin_index(self, k: int) -> int:
        """Position of bin ``k`` in the frame arrays.

        Args:
            k: Bin number, ``-B <= k <= B``

        Returns:
            ``k + B``

        Raises:
            InvalidInputError: If ``k`` is outside the bank

        """
        if not -self.b_max <= k <= self.b_max:
            raise InvalidInputError(f"bin k={k} outside -{self.b_max}..{self.b_max}")
        return k + self.b_max

    def to_dict(self) -> Dict[str, Any]:
        """Field values with enums kept as members.

        Returns:
            Field name to value mapping

        """
        return asdict(self)

    def dumps(self) -> str:
        """Serialize to flat ``key = value`` text.

        Returns:
            TOML text

        """
        return dump_flat_config(self.to_dict())

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> "MethodConfig":
        """Build from a mapping keyed by field names or CLI flag spellings.

        Args:
            values: Config values; unknown keys are ignored with a warning

        Returns:
            The validated config

        Raises:
            InvalidInputError: If ``method`` or ``k_max`` is missing

        """
        known = {f.name for f in fields(cls)}
        normalized = normalize_keys(values)
        unknown = sorted(set(normalized) - known)
        if unknown:
            logger.warning(f"Ignoring config keys not used by MethodConfig: {unknown}")
        kwargs = {key: value for key, value in normalized.items() if key in known}
        if "method" not in kwargs or "k_max" not in kwargs:
            raise InvalidInputError("config needs at least 'method' and 'K' (k_max)")
        if kwargs.get("window_coeffs") is not None:
            kwargs["window_coeffs"] = tuple(kwargs["window_coeffs"])
        return cls(**kwargs)

    @classmethod
    def loads(cls, text: str) -> "MethodConfig":
        """Parse flat ``key = value`` text.

        Args:
            text: Config text as written by :meth:`dumps`

        Returns:
            The validated config

        """
        return cls.from_mapping(parse_flat_config(text))
