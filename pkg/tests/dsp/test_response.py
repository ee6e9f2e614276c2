"""Tests for frequency and impulse responses."""

import numpy as np
import pytest

from rdft_kit.core import InvalidInputError, UnsupportedMethodError
from rdft_kit.dsp import Method, MethodConfig
from rdft_kit.dsp.response import (
    analytic_response,
    dirichlet,
    empirical_response,
    half_power_width,
    impulse_response,
    peak_sidelobe_db,
    write_impulse_csv,
    write_response_csv,
)

K, LENGTH = 8, 17
DENSE = -0.5 + np.arange(4096) / 4096


class TestDirichlet:
    """Tests for the Dirichlet kernel."""

    def test_own_bin_and_nulls(self):
        assert dirichlet(LENGTH, 2 / LENGTH, 2) == pytest.approx(1.0)
        assert dirichlet(LENGTH, 3 / LENGTH, 2) == pytest.approx(0.0, abs=1e-12)
        assert dirichlet(LENGTH, 2 / LENGTH + 1.0, 2) == pytest.approx(1.0)

    def test_vectorized(self):
        values = dirichlet(LENGTH, np.array([0.0, 0.5 / LENGTH]), 0)
        assert values.shape == (2,)
        assert values[0] == 1.0

    def test_rejects_even_length(self):
        with pytest.raises(InvalidInputError):
            dirichlet(16, 0.1, 0)


class TestAnalyticResponse:
    """Closed-form responses."""

    def test_method_1_is_dirichlet(self):
        curve = analytic_response(MethodConfig(Method.FIR_DFT, K), 2, DENSE)
        np.testing.assert_allclose(curve.magnitude, np.abs(dirichlet(LENGTH, DENSE, 2)), atol=1e-9)

    def test_fir_methods_share_response(self):
        reference = analytic_response(MethodConfig(Method.FIR_DFT, K, b_max=4), 2, DENSE).values
        for method in (Method.FIR_SDFT, Method.MSDFT_RECURSIVE, Method.MSDFT_TABLE):
            curve = analytic_response(MethodConfig(method, K, b_max=4), 2, DENSE)
            np.testing.assert_allclose(curve.values, reference, atol=1e-9)

    def test_stabilized_matches_fading_sdft(self):
        sigma = -1 / LENGTH
        iir = analytic_response(MethodConfig(Method.IIR_SDFT, K, sigma=sigma), 2, DENSE)
        stabilized = analytic_response(MethodConfig(Method.STABILIZED_IIR_SDFT, K, sigma=sigma), 2, DENSE)
        np.testing.assert_allclose(stabilized.values, iir.values, atol=1e-6)

    def test_matches_measurement(self):
        grid = np.array([-0.31, 0.0, 2 / LENGTH, 0.123])
        for method in (Method.FIR_SDFT, Method.IIR_MSDFT_HANN, Method.STABILIZED_IIR_SDFT):
            config = MethodConfig(method, K)
            analytic = analytic_response(config, 2, grid)
            measured = empirical_response(config, 2, grid)
            np.testing.assert_allclose(measured.values, analytic.values, atol=1e-6)

    @pytest.mark.parametrize(
        "method", [Method.FIR_DFT, Method.FIR_DFT_SLEPIAN, Method.IIR_MSDFT_HANN, Method.STABILIZED_IIR_SDFT]
    )
    def test_energy_matches_impulse_response(self, method):
        config = MethodConfig(method, K, b_max=4)
        curve = analytic_response(config, 2, DENSE)
        h = impulse_response(config, 2, DENSE.shape[0])
        assert np.mean(np.abs(curve.values) ** 2) == pytest.approx(np.sum(np.abs(h) ** 2), rel=1e-9)

    def test_observers_are_rejected(self):
        with pytest.raises(UnsupportedMethodError, match="empirical_response"):
            analytic_response(MethodConfig(Method.OBSERVER, K, b_max=4), 2, DENSE)

    def test_bin_outside_bank(self):
        with pytest.raises(InvalidInputError, match="outside"):
            analytic_response(MethodConfig(Method.FIR_DFT, K, b_max=2), 3, DENSE)


class TestEmpiricalResponse:
    """Measured responses of closed-loop methods."""

    def test_observer_passes_own_bin(self):
        config = MethodConfig(Method.OBSERVER, K, b_max=4)
        curve = empirical_response(config, 2, np.array([2 / LENGTH, 3 / LENGTH]), settle=200 * LENGTH)
        assert curve.magnitude[0] == pytest.approx(1.0, abs=1e-6)
        assert curve.magnitude[1] == pytest.approx(0.0, abs=1e-6)

    def test_negative_settle(self):
        with pytest.raises(InvalidInputError, match="settle"):
            empirical_response(MethodConfig(Method.FIR_DFT, K), 0, [0.0], settle=-1)


class TestLobes:
    """Main-lobe and side-lobe metrics."""

    def test_rectangular_window(self):
        curve = analytic_response(MethodConfig(Method.FIR_DFT, K), 0, DENSE)
        assert 0.8 / LENGTH < half_power_width(curve) < 0.95 / LENGTH
        assert -14.0 < peak_sidelobe_db(curve) < -12.5

    def test_slepian_lowers_side_lobes(self):
        rectangular = analytic_response(MethodConfig(Method.FIR_DFT, K), 0, DENSE)
        slepian = analytic_response(MethodConfig(Method.FIR_DFT_SLEPIAN, K), 0, DENSE)
        assert peak_sidelobe_db(slepian) < peak_sidelobe_db(rectangular) - 10.0
        assert half_power_width(slepian) > half_power_width(rectangular)

    def test_hann_widens_main_lobe(self):
        plain = analytic_response(MethodConfig(Method.IIR_MSDFT, K), 0, DENSE)
        hann = analytic_response(MethodConfig(Method.IIR_MSDFT_HANN, K), 0, DENSE)
        assert half_power_width(hann) > half_power_width(plain)


class TestImpulseResponse:
    """Impulse responses."""

    def test_fir_length(self):
        h = impulse_response(MethodConfig(Method.FIR_SDFT, K), 2, 3 * LENGTH)
        np.testing.assert_allclose(np.abs(h[:LENGTH]), 1 / LENGTH, atol=1e-12)
        np.testing.assert_allclose(h[LENGTH:], 0.0, atol=1e-12)

    def test_requires_samples(self):
        with pytest.raises(InvalidInputError, match="at least 1"):
            impulse_response(MethodConfig(Method.FIR_DFT, K), 0, 0)


def test_csv_exports(temp_dir):
    config = MethodConfig(Method.FIR_DFT, 2)
    curve = analytic_response(config, 1, np.linspace(-0.5, 0.5, 7, endpoint=False))
    lines = write_response_csv(f"{temp_dir}/r.csv", curve).read_text().splitlines()
    assert lines[1] == "f,mag_db,phase_rad"
    assert len(lines) == 2 + 7
    lines = write_impulse_csv(f"{temp_dir}/h.csv", impulse_response(config, 1, 4)).read_text().splitlines()
    assert lines[0] == "n,re,im,mag"
    assert len(lines) == 1 + 4
