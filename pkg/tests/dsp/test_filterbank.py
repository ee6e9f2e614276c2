"""Tests for the streaming filter bank."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdft_kit.core import InvalidInputError, InvalidStateError
from rdft_kit.dsp import FilterBank, Method, MethodConfig, Precision, build, method_summary, quality
from rdft_kit.dsp.filterbank import write_frames_csv
from rdft_kit.dsp.response import impulse_response
from rdft_kit.dsp.windows import slepian_freq, slepian_time, sum_of_cosine, window_matrix


def _raw(config: MethodConfig, xs: np.ndarray) -> np.ndarray:
    return np.array([frame.raw for frame in build(config).iter_frames(xs)])


def _windowed(config: MethodConfig, xs: np.ndarray) -> np.ndarray:
    return np.array([frame.windowed for frame in build(config).iter_frames(xs)])


def _direct_dft(xs: np.ndarray, weights: np.ndarray, b_max: int) -> np.ndarray:
    """X(n, k) = Σ_m w(m)·exp(jω_k m)·x(n - m) / Σ w, with zeros before n = 0."""
    length = weights.shape[0]
    padded = np.concatenate((np.zeros(length - 1), xs))
    bins = np.arange(-b_max, b_max + 1)
    taps = weights[None, :] * np.exp(2j * np.pi * np.outer(bins, np.arange(length)) / length) / weights.sum()
    out = np.empty((xs.shape[0], bins.shape[0]), dtype=np.complex128)
    for n in range(xs.shape[0]):
        recent = padded[n : n + length][::-1]
        out[n] = taps @ recent
    return out


def _tones(length: int, bins, n_samples: int, seed: int = 3) -> np.ndarray:
    phases = np.random.default_rng(seed).uniform(0, 2 * np.pi, len(bins))
    n = np.arange(n_samples)
    return sum(np.cos(2 * np.pi * k * n / length + p) for k, p in zip(bins, phases))


class TestFirEquivalence:
    """Methods 1, 3, 4 and 5 compute the same sliding DFT."""

    @pytest.mark.parametrize("seed", range(10))
    def test_fir_methods_agree(self, seed):
        k_max = (8, 16, 32, 64)[seed % 4]
        length = 2 * k_max + 1
        xs = np.random.default_rng(seed).standard_normal(3 * length)
        reference = _raw(MethodConfig(Method.FIR_DFT, k_max), xs)
        for method in (Method.FIR_SDFT, Method.MSDFT_RECURSIVE, Method.MSDFT_TABLE):
            np.testing.assert_allclose(_raw(MethodConfig(method, k_max), xs), reference, atol=1e-10, rtol=0)

    def test_method_1_is_direct_dft(self, rng):
        xs = rng.standard_normal(40)
        expected = _direct_dft(xs, np.ones(17), 8)
        np.testing.assert_allclose(_raw(MethodConfig(1, 8), xs), expected, atol=1e-12)

    def test_partial_bank(self, rng):
        xs = rng.standard_normal(60)
        full = _raw(MethodConfig(Method.FIR_DFT, 8), xs)
        partial = _raw(MethodConfig(Method.FIR_SDFT, 8, b_max=3), xs)
        np.testing.assert_allclose(partial, full[:, 5:12], atol=1e-12)


class TestWindowedMethods:
    """Window equivalences."""

    def test_method_2_is_slepian_weighted_dft(self, rng):
        length = 17
        xs = rng.standard_normal(3 * length)
        expected = _direct_dft(xs, slepian_time(length, 2 / length).coeffs, 8)
        np.testing.assert_allclose(_raw(MethodConfig(Method.FIR_DFT_SLEPIAN, 8), xs), expected, atol=1e-9)

    def test_method_6_is_method_5_plus_convolution(self, rng):
        k_max, b_max = 16, 8
        length = 2 * k_max + 1
        xs = rng.standard_normal(3 * length)
        raw5 = _raw(MethodConfig(Method.MSDFT_TABLE, k_max, b_max=b_max), xs)
        h_win = window_matrix(slepian_freq(length, 2, 3 / length), b_max, k_max)
        config6 = MethodConfig(Method.MSDFT_SLEPIAN, k_max, b_max=b_max)
        np.testing.assert_allclose(_raw(config6, xs), raw5, atol=1e-12)
        np.testing.assert_allclose(_windowed(config6, xs), raw5 @ h_win.T, atol=1e-9)

    @pytest.mark.parametrize(
        "method,k_max,b_max",
        [(6, 16, 8), (6, 8, 8), (11, 16, 8), (11, 8, 8)],
    )
    def test_window_convolution_on_random_stream(self, rng, method, k_max, b_max):
        length = 2 * k_max + 1
        xs = rng.standard_normal(3 * length)
        frames = build(MethodConfig(method, k_max, b_max=b_max)).process(xs)
        raw = np.array([frame.raw for frame in frames])
        windowed = np.array([frame.windowed for frame in frames])
        window = slepian_freq(length, 2, 3 / length) if method == 6 else sum_of_cosine("hann", length)
        expected = raw.copy()
        for row, k in enumerate(range(-b_max, b_max + 1)):
            if b_max == k_max:
                cols = [(k + off + k_max) % length for off in window.offsets]
            elif abs(k) <= b_max - window.b_win:
                cols = [row + off for off in window.offsets]
            else:
                continue
            expected[:, row] = sum(c * raw[:, col] for c, col in zip(window.coeffs, cols))
        np.testing.assert_allclose(windowed, expected, atol=1e-9, rtol=0)
        if b_max < k_max:
            edges = [*range(window.b_win), *range(2 * b_max + 1 - window.b_win, 2 * b_max + 1)]
            np.testing.assert_allclose(windowed[:, edges], raw[:, edges], atol=1e-14, rtol=0)

    def test_method_12_with_window_fuses(self, rng):
        xs = rng.standard_normal(30)
        frames = build(MethodConfig(Method.STABILIZED_IIR_SDFT, 4, window="hann")).process(xs)
        assert all(np.array_equal(frame.raw, frame.windowed) for frame in frames)


class TestObservers:
    """Closed-loop methods."""

    def test_deadbeat_matches_method_1_after_one_window(self, rng):
        k_max = 8
        length = 2 * k_max + 1
        xs = rng.standard_normal(4 * length)
        deadbeat = _raw(MethodConfig(Method.DEADBEAT_OBSERVER, k_max), xs)
        reference = _raw(MethodConfig(Method.FIR_DFT, k_max), xs)
        np.testing.assert_allclose(deadbeat[length:], reference[length:], atol=1e-9, rtol=0)

    def test_deadbeat_predicts_periodic_signal(self):
        length = 17
        xs = _tones(length, range(9), 4 * length)
        frames = build(MethodConfig(Method.DEADBEAT_OBSERVER, 8)).process(xs)
        assert quality(frames[2 * length :]) < 1e-9

    def test_observer_partial_bank(self):
        length = 17
        xs = _tones(length, range(5), 200 * length)
        frames = build(MethodConfig(Method.OBSERVER, 8, b_max=4)).process(xs)
        assert quality(frames[-length:]) < 1e-6


class TestIirMethods:
    """Fading-memory methods."""

    def test_terrace_impulse_response(self):
        k_max = 64
        length = 2 * k_max + 1
        sigma = -1 / length
        h = impulse_response(MethodConfig(Method.IIR_SDFT, k_max, sigma=sigma), 2, 5 * length)
        r_m = math.exp(sigma * length)
        for block in range(5):
            expected = (1 - r_m) / length * math.exp(sigma * length * block)
            np.testing.assert_allclose(np.abs(h[block * length : (block + 1) * length]), expected, atol=1e-10)

    def test_methods_9_and_10_agree(self, rng):
        xs = rng.standard_normal(200)
        sdft = _raw(MethodConfig(Method.IIR_SDFT, 8, sigma=-0.05), xs)
        msdft = _raw(MethodConfig(Method.IIR_MSDFT, 8, sigma=-0.05), xs)
        np.testing.assert_allclose(msdft, sdft, atol=1e-10)

    def test_method_12_tracks_method_9_over_long_stream(self, rng):
        length = 17
        xs = rng.standard_normal(200 * length)
        sdft = _raw(MethodConfig(Method.IIR_SDFT, 8), xs)
        stabilized = _raw(MethodConfig(Method.STABILIZED_IIR_SDFT, 8), xs)
        np.testing.assert_allclose(stabilized, sdft, atol=1e-9, rtol=0)
        np.testing.assert_allclose(stabilized[-length:], sdft[-length:], atol=1e-9, rtol=0)

    def test_bandpass_unit_gain_at_bin(self):
        length = 17
        n = np.arange(3000)
        xs = np.exp(2j * np.pi * 3 * n / length)
        frames = build(MethodConfig(Method.BANDPASS, 8, sigma=-0.05)).process(xs)
        assert abs(frames[-1].raw[8 + 3]) == pytest.approx(1.0, abs=1e-6)


class TestStreaming:
    """State-machine properties shared by every method."""

    @settings(max_examples=25, deadline=None)
    @given(
        method=st.sampled_from([1, 3, 5, 8, 10, 12]),
        split=st.integers(min_value=0, max_value=50),
    )
    def test_split_stream_matches_single_pass(self, method, split):
        config = MethodConfig(method, 4, b_max=3 if method == 8 else None)
        xs = np.random.default_rng(method).standard_normal(50)
        whole = [frame.raw for frame in build(config).process(xs)]
        bank = build(config)
        parts = [frame.raw for frame in bank.process(xs[:split])] + [frame.raw for frame in bank.process(xs[split:])]
        np.testing.assert_array_equal(np.array(parts), np.array(whole))
        assert bank.n == 50

    def test_linearity(self, rng):
        config = MethodConfig(Method.FIR_SDFT, 8)
        x, y = rng.standard_normal(60), rng.standard_normal(60)
        combined = _raw(config, 2.0 * x - 0.5 * y)
        np.testing.assert_allclose(combined, 2.0 * _raw(config, x) - 0.5 * _raw(config, y), atol=1e-12)

    def test_reset_reproduces_output(self, rng):
        bank = build(MethodConfig(Method.IIR_MSDFT_HANN, 8))
        xs = rng.standard_normal(40)
        first = [frame.windowed for frame in bank.process(xs)]
        bank.reset()
        assert bank.n == 0
        second = [frame.windowed for frame in bank.process(xs)]
        np.testing.assert_array_equal(np.array(first), np.array(second))

    @pytest.mark.parametrize("method", range(1, 13))
    def test_reset_after_long_stream_matches_fresh_bank(self, rng, method):
        config = MethodConfig(method, 4, b_max=3 if method == 8 else None)
        warmup, xs = rng.standard_normal(50 * 9), rng.standard_normal(40)
        bank = build(config)
        for _ in bank.iter_frames(warmup):
            pass
        bank.reset()
        reused = bank.process(xs)
        fresh = build(config).process(xs)
        np.testing.assert_array_equal(np.array([f.raw for f in reused]), np.array([f.raw for f in fresh]))
        np.testing.assert_array_equal(np.array([f.windowed for f in reused]), np.array([f.windowed for f in fresh]))
        assert [f.x_hat for f in reused] == [f.x_hat for f in fresh]

    @pytest.mark.parametrize(
        "config",
        [
            MethodConfig(Method.DEADBEAT_OBSERVER, 8),
            MethodConfig(Method.OBSERVER, 8, b_max=4),
            MethodConfig(Method.MSDFT_TABLE, 8, horizon=1),
        ],
    )
    def test_quality_invariant_under_period_shift(self, rng, config):
        length = config.length
        xs = rng.standard_normal(6 * length)
        frames = build(config).process(xs)
        shifted = build(config).process(np.concatenate((np.zeros(length), xs)))
        assert quality(shifted[length:]) == pytest.approx(quality(frames), rel=1e-12)
        assert quality(frames) > 0.1

    def test_error_is_one_step_prediction(self, rng):
        length = 17
        xs = rng.standard_normal(4 * length)
        frames = build(MethodConfig(Method.FIR_DFT, 8, horizon=1)).process(xs)
        errors = np.array([frame.err for frame in frames])
        # x_hat(n + 1) repeats x(n + 1 - M)
        np.testing.assert_allclose(errors[length:], xs[length:] - xs[:-length], atol=1e-9)

    def test_error_absent_for_other_horizons(self):
        frames = build(MethodConfig(Method.FIR_DFT, 8, horizon=-8)).process(np.ones(20))
        assert all(frame.x_hat is not None and frame.err is None for frame in frames)
        with pytest.raises(InvalidStateError, match="one-step"):
            quality(frames)

    def test_single_precision_dtype(self):
        frames = build(MethodConfig(Method.MSDFT_TABLE, 4, precision="single")).process([1.0, 0.5])
        assert frames[0].raw.dtype == np.complex64
        assert frames[1].n == 1

    def test_quality_requires_synthesis(self):
        frames = build(MethodConfig(Method.FIR_DFT, 2)).process([1.0])
        with pytest.raises(InvalidStateError, match="synthesis"):
            quality(frames)
        with pytest.raises(InvalidStateError, match="at least one frame"):
            quality([])

    def test_linear_phase_synthesis(self):
        config = MethodConfig(Method.FIR_DFT, 8, horizon=-8)
        length = 17
        xs = _tones(length, range(9), 3 * length)
        frames = FilterBank.build(config).process(xs)
        # x_hat at step n estimates x(n - K)
        estimates = np.array([frame.x_hat for frame in frames])
        np.testing.assert_allclose(estimates[length:].real, xs[length - 8 : -8], atol=1e-9)

    def test_write_frames_csv(self, temp_dir):
        frames = build(MethodConfig(Method.FIR_DFT, 1)).process([1.0, 2.0])
        path = write_frames_csv(f"{temp_dir}/frames.csv", frames, 1)
        lines = path.read_text().splitlines()
        assert lines[0] == "n,k,raw_re,raw_im,win_re,win_im"
        assert len(lines) == 1 + 2 * 3


class TestMethodConfig:
    """Validation and serialization of MethodConfig."""

    def test_defaults(self):
        config = MethodConfig(Method.IIR_MSDFT_HANN, 8)
        assert config.b_max == 8
        assert config.sigma == pytest.approx(-1 / 17)
        assert config.window.value == "hann" and config.b_win == 1
        assert config.horizon is None and not config.synthesis_enabled
        assert MethodConfig(Method.OBSERVER, 8, b_max=4).horizon == 1
        assert MethodConfig(Method.FIR_DFT_SLEPIAN, 8).f_delta == pytest.approx(2 / 17)
        assert MethodConfig(Method.MSDFT_SLEPIAN, 8).f_delta == pytest.approx(3 / 17)

    @pytest.mark.parametrize(
        "kwargs,match",
        [
            ({"method": 1, "k_max": -1}, "k_max"),
            ({"method": 1, "k_max": 4, "b_max": 5}, "b_max"),
            ({"method": 7, "k_max": 4, "b_max": 3}, "b_max == k_max"),
            ({"method": 8, "k_max": 4}, "b_max < k_max"),
            ({"method": 9, "k_max": 4, "sigma": 0.1}, "sigma"),
            ({"method": 7, "k_max": 4, "horizon": 0}, "horizon"),
            ({"method": 11, "k_max": 4, "b_win": 2}, "b_win"),
            ({"method": 6, "k_max": 4, "b_max": 1}, "b_win"),
            ({"method": 1, "k_max": 4, "window": "custom"}, "window_coeffs"),
            ({"method": 2, "k_max": 4, "f_delta": 0.7}, "f_delta"),
            ({"method": 1, "k_max": 4, "precision": "half"}, "precision"),
        ],
    )
    def test_invalid(self, kwargs, match):
        with pytest.raises(InvalidInputError, match=match):
            MethodConfig(**kwargs)

    def test_parse_method(self):
        assert Method.parse("12") is Method.STABILIZED_IIR_SDFT
        assert Method.parse("bandpass") is Method.BANDPASS
        assert Method.parse("iir-sdft") is Method.IIR_SDFT
        with pytest.raises(InvalidInputError, match="Unknown method"):
            Method.parse("13")

    def test_round_trip_text(self):
        config = MethodConfig(Method.STABILIZED_IIR_SDFT, 16, b_max=8, sigma=-0.01, precision=Precision.SINGLE)
        assert MethodConfig.loads(config.dumps()) == config

    def test_loads_flag_spellings(self):
        config = MethodConfig.loads("method = 8\nK = 8\nB = 4\nl = 2\nprecision = single\n")
        assert (config.k_max, config.b_max, config.horizon) == (8, 4, 2)
        assert config.precision is Precision.SINGLE

    def test_loads_requires_method(self):
        with pytest.raises(InvalidInputError, match="at least"):
            MethodConfig.loads("K = 8\n")

    def test_method_summary(self):
        assert method_summary(7).outer_feedback
        assert method_summary(12).impulse_response == "IIR"
        assert method_summary("1").side_lobes == "High"
