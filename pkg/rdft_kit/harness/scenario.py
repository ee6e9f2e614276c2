"""Experiment scenarios: parameters, test signals and noise."""

from dataclasses import asdict, dataclass, fields
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np
from fastmcp.utilities.logging import get_logger
from numpy.typing import ArrayLike, NDArray

from ..core.config import dump_flat_config, normalize_keys, parse_flat_config
from ..core.errors import InvalidInputError
from ..dsp.filterbank import Method, MethodConfig
from ..dsp.precision import Precision

logger = get_logger(__name__)

IMPULSE_RANGE = 1e6
QUICK_SEGMENT_LENGTH = 100_000
FULL_SEGMENT_LENGTH = 1_000_000
LONG_SEGMENTS = 100

# stream identifiers mixed into the seed so signal phases and noise never share a generator
_PHASE_STREAM = 0
_GAUSSIAN_STREAM = 1
_IMPULSE_STREAM = 2


class ScenarioKind(str, Enum):
    """Experiment families."""

    TABLE1 = "table1"
    DETECTION = "detection"
    RESPONSE_DUMP = "freq-response"
    IMPULSE_DUMP = "impulse-response"


class NoiseKind(str, Enum):
    """Additive noise models."""

    NONE = "none"
    GAUSSIAN = "gaussian"
    IMPULSIVE = "impulsive"


_DEFAULTS: Dict[ScenarioKind, Dict[str, Any]] = {
    ScenarioKind.TABLE1: {"k_max": 64, "half_band": True, "probe_bin": 16, "methods": (1, 3, 4, 5, 8, 9, 10, 12)},
    ScenarioKind.DETECTION: {"k_max": 64, "half_band": True, "probe_bin": 0, "methods": (1, 2, 5, 6, 8, 10, 11, 12)},
    ScenarioKind.RESPONSE_DUMP: {
        "k_max": 8,
        "half_band": True,
        "probe_bin": 2,
        "methods": (1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12),
    },
    ScenarioKind.IMPULSE_DUMP: {"k_max": 64, "half_band": False, "probe_bin": 2, "methods": (9, 11, 12)},
}


def _generator(seed: int, stream: int, segment: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream, segment])))


@dataclass(frozen=True)
class Scenario:
    """Parameters of one experiment run.

    Unset fields take the defaults of ``kind``. ``quick`` shortens segments to 1e5 samples with
    checkpoints every 2e4; ``long_run`` extends the run to 100 segments.
    """

    kind: ScenarioKind = ScenarioKind.TABLE1
    k_max: Optional[int] = None
    b_max: Optional[int] = None
    sigma: Optional[float] = None
    horizon: Optional[int] = None
    b_win: Optional[int] = None
    methods: Tuple[Method, ...] = ()
    precision: Precision = Precision.DOUBLE
    segments: Optional[int] = None
    segment_length: Optional[int] = None
    noise: NoiseKind = NoiseKind.NONE
    seed: int = 0
    probe_bin: Optional[int] = None
    checkpoint_interval: Optional[int] = None
    grid_points: int = 512
    impulse_length: Optional[int] = None
    settle: Optional[int] = None
    quick: bool = False
    long_run: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        """Resolve kind defaults and validate.

        Raises:
            InvalidInputError: Naming the first violated constraint

        """
        _set = object.__setattr__
        try:
            kind = ScenarioKind(self.kind)
            noise = NoiseKind(self.noise)
        except ValueError as e:
            raise InvalidInputError(str(e)) from e
        _set(self, "kind", kind)
        _set(self, "noise", noise)
        _set(self, "precision", Precision.parse(self.precision))
        defaults = _DEFAULTS[kind]

        k_max = int(defaults["k_max"] if self.k_max is None else self.k_max)
        if k_max < 0:
            raise InvalidInputError(f"k_max must be non-negative, got {k_max}")
        _set(self, "k_max", k_max)
        if self.b_max is not None:
            b_max = int(self.b_max)
        else:
            b_max = k_max // 2 if defaults["half_band"] else k_max
        if not 0 <= b_max <= k_max:
            raise InvalidInputError(f"b_max must satisfy 0 <= b_max <= k_max={k_max}, got {b_max}")
        _set(self, "b_max", int(b_max))
        if self.b_win is not None and not 1 <= int(self.b_win) <= b_max:
            raise InvalidInputError(f"b_win must satisfy 1 <= b_win <= b_max={b_max}, got {self.b_win}")
        _set(self, "b_win", None if self.b_win is None else int(self.b_win))

        methods = self.methods if self.methods else defaults["methods"]
        if isinstance(methods, (str, int)):
            methods = (methods,)
        _set(self, "methods", tuple(Method.parse(m) for m in methods))

        sigma = self.sigma
        if sigma is None and kind is ScenarioKind.TABLE1:
            sigma = -1.0 / (2 * self.length)
        _set(self, "sigma", sigma)

        probe = min(defaults["probe_bin"], b_max) if self.probe_bin is None else int(self.probe_bin)
        if not -b_max <= probe <= b_max:
            raise InvalidInputError(f"probe_bin must lie in -{b_max}..{b_max}, got {probe}")
        _set(self, "probe_bin", probe)

        segment_length = self.segment_length
        if segment_length is None:
            segment_length = QUICK_SEGMENT_LENGTH if self.quick else FULL_SEGMENT_LENGTH
        if segment_length < self.length:
            raise InvalidInputError(f"segment_length must be at least M={self.length}, got {segment_length}")
        _set(self, "segment_length", int(segment_length))
        segments = self.segments if self.segments is not None else (LONG_SEGMENTS if self.long_run else 2)
        if segments < 1:
            raise InvalidInputError(f"segments must be at least 1, got {segments}")
        _set(self, "segments", int(segments))

        interval = self.checkpoint_interval
        if interval is None:
            interval = segment_length // 5 if self.quick else segment_length
        if interval < 1:
            raise InvalidInputError(f"checkpoint_interval must be positive, got {interval}")
        _set(self, "checkpoint_interval", int(interval))

        if kind is ScenarioKind.DETECTION and self.precision is not Precision.DOUBLE:
            raise InvalidInputError("the detection scenario runs in double precision only")
        if self.grid_points < 1:
            raise InvalidInputError(f"grid_points must be positive, got {self.grid_points}")
        if self.impulse_length is None:
            _set(self, "impulse_length", 5 * self.length)
        if self.impulse_length < 1:
            raise InvalidInputError(f"impulse_length must be positive, got {self.impulse_length}")
        if self.settle is None:
            _set(self, "settle", 50 * self.length)
        if self.workers < 1:
            raise InvalidInputError(f"workers must be positive, got {self.workers}")

    @property
    def length(self) -> int:
        """M = 2K + 1."""
        return 2 * self.k_max + 1

    @property
    def total_samples(self) -> int:
        """Samples across every segment."""
        return self.segments * self.segment_length

    def method_config(self, method: "Method | int", precision: Optional[Precision] = None) -> MethodConfig:
        """MethodConfig for one method of this scenario.

        ``sigma`` reaches only IIR methods, ``horizon`` only observers and ``b_win`` only the
        frequency-domain Slepian window of method 6.

        Args:
            method: Method to configure
            precision: Override of the scenario precision

        Returns:
            The validated config

        """
        member = Method.parse(method)
        return MethodConfig(
            method=member,
            k_max=self.k_max,
            b_max=self.b_max,
            sigma=self.sigma if member.is_iir else None,
            horizon=self.horizon if member.is_observer else None,
            b_win=self.b_win if member is Method.MSDFT_SLEPIAN else None,
            precision=precision or self.precision,
        )

    def dumps(self) -> str:
        """Serialize to flat ``key = value`` text.

        Returns:
            TOML text

        """
        return dump_flat_config(asdict(self))

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> "Scenario":
        """Build from a mapping keyed by field names or CLI flag spellings.

        Args:
            values: Scenario values; unknown keys are ignored with a warning

        Returns:
            The validated scenario

        """
        known = {f.name for f in fields(cls)}
        normalized = normalize_keys(values)
        if "long" in normalized:
            normalized["long_run"] = normalized.pop("long")
        if "method" in normalized and "methods" not in normalized:
            normalized["methods"] = normalized.pop("method")
        unknown = sorted(set(normalized) - known)
        if unknown:
            logger.warning(f"Ignoring config keys not used by Scenario: {unknown}")
        kwargs = {key: value for key, value in normalized.items() if key in known and value is not None}
        if "methods" in kwargs and not isinstance(kwargs["methods"], (str, int)):
            kwargs["methods"] = tuple(kwargs["methods"])
        return cls(**kwargs)

    @classmethod
    def loads(cls, text: str) -> "Scenario":
        """Parse flat ``key = value`` text.

        Args:
            text: Scenario config text

        Returns:
            The validated scenario

        """
        return cls.from_mapping(parse_flat_config(text))


def signal_phases(scenario: Scenario) -> NDArray[np.float64]:
    """Random phases of the ``B + 1`` test tones, drawn from the scenario seed.

    Args:
        scenario: Scenario providing ``seed`` and ``b_max``

    Returns:
        Phases in ``[0, 2π)`` for bins ``0 … B``

    """
    return _generator(scenario.seed, _PHASE_STREAM).uniform(0.0, 2.0 * np.pi, scenario.b_max + 1)


def gen_signal(scenario: Scenario, n_range: range) -> NDArray[np.float64]:
    """Sum of unit-amplitude cosines at every bin ``0 … B``, in double precision.

    The stream is exactly M-periodic: one period is computed and indexed by ``n mod M``.

    Args:
        scenario: Scenario providing ``seed``, ``k_max`` and ``b_max``
        n_range: Sample indices to generate

    Returns:
        ``x(n) = Σ_k cos(2πkn/M + φ_k)`` for ``n`` in ``n_range``

    """
    length = scenario.length
    phases = signal_phases(scenario)
    m = np.arange(length)
    k = np.arange(scenario.b_max + 1)
    period = np.cos(2.0 * np.pi * np.outer(m, k) / length + phases).sum(axis=1)
    n = np.arange(n_range.start, n_range.stop, n_range.step)
    return period[n % length]


def add_noise(xs: ArrayLike, scenario: Scenario, start: int = 0) -> NDArray[np.float64]:
    """Add the scenario's noise to samples ``start … start + len(xs) - 1``.

    Gaussian noise has unit standard deviation. Impulsive noise adds one value drawn uniformly
    from ``±1e6`` to the first sample of each segment. Noise depends only on the seed and the
    absolute sample index, never on how the stream is chunked.

    Args:
        xs: Clean samples
        scenario: Scenario providing ``noise``, ``seed`` and ``segment_length``
        start: Absolute index of ``xs[0]``

    Returns:
        Noisy samples, double precision

    """
    out = np.array(xs, dtype=np.float64)
    if scenario.noise is NoiseKind.NONE or out.size == 0:
        return out
    seg_len = scenario.segment_length
    stop = start + out.shape[0]
    for segment in range(start // seg_len, (stop - 1) // seg_len + 1):
        seg_start = segment * seg_len
        lo, hi = max(start, seg_start), min(stop, seg_start + seg_len)
        if scenario.noise is NoiseKind.GAUSSIAN:
            noise = _generator(scenario.seed, _GAUSSIAN_STREAM, segment).standard_normal(seg_len)
            out[lo - start : hi - start] += noise[lo - seg_start : hi - seg_start]
        elif lo == seg_start:
            rng = _generator(scenario.seed, _IMPULSE_STREAM, segment)
            out[lo - start] += rng.uniform(-IMPULSE_RANGE, IMPULSE_RANGE)
    return out
