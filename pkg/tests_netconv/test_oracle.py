import logging

import numpy as np
import pytest
from numpy.testing import assert_allclose

from core.errors import NonPositiveRealPart, RankDeficient, SingularConversion
from core.types import NetworkPoint, PortNormalization, Representation, WaveConvention
from core.waves import vi_to_waves, wave_k
from oracle.closed_form import SUPPORTED_PAIRS, closed_form_convert
from oracle.fitting import fit_representation
from oracle.sampling import sample_network
from transform.engine import convert
from utils.linalg import relative_deviation

logger = logging.getLogger(__name__)

Z, Y, H, A, S, T = (Representation(r) for r in "ZYHAST")

Z_SYMMETRIC = np.array([[100, 50], [50, 100]])
SERIES_S = np.array([[1, 2], [2, 1]]) / 3


class TestSampling:
    """Consistent port-signal records drawn from a representation."""

    @pytest.mark.smoke
    def test_z_samples_obey_ohms_law(self, norm_50, kurokawa) -> None:
        samples = sample_network(Z, Z_SYMMETRIC, norm_50, kurokawa, seed=1)
        assert len(samples) == 4
        for sample in samples:
            assert_allclose(np.array(sample.v), Z_SYMMETRIC @ np.array(sample.i), rtol=1e-12)

    def test_waves_match_voltages_and_currents(self, norm_50, traveling) -> None:
        k = wave_k(traveling, 50)
        for sample in sample_network(S, SERIES_S, norm_50, traveling, seed=2):
            for port in range(2):
                a, b = vi_to_waves(sample.v[port], sample.i[port], 50, k)
                assert a == pytest.approx(sample.a[port], rel=1e-12)
                assert b == pytest.approx(sample.b[port], rel=1e-12)

    def test_s_samples_obey_scattering(self, norm_50, kurokawa) -> None:
        for sample in sample_network(S, SERIES_S, norm_50, kurokawa, seed=3):
            assert_allclose(np.array(sample.b), SERIES_S @ np.array(sample.a), rtol=1e-12)

    def test_t_samples_follow_descriptor(self, norm_50, kurokawa) -> None:
        t = np.array([[1.5, -0.5], [0.5, 0.5]])
        for sample in sample_network(T, t, norm_50, kurokawa, seed=4):
            outputs = np.array([sample.a[0], sample.b[0]])
            inputs = np.array([sample.b[1], sample.a[1]])
            assert_allclose(outputs, t @ inputs, rtol=1e-12)

    def test_seed_is_deterministic(self, norm_50, kurokawa) -> None:
        first = sample_network(Y, np.eye(2) * 0.01, norm_50, kurokawa, seed=9)
        second = sample_network(Y, np.eye(2) * 0.01, norm_50, kurokawa, seed=9)
        assert first == second

    def test_wrong_shape(self, norm_50, kurokawa) -> None:
        with pytest.raises(ValueError):
            sample_network(Z, np.eye(3), norm_50, kurokawa, seed=0)


class TestFitting:
    """Least-squares recovery of a target representation from samples."""

    @pytest.mark.smoke
    def test_z_to_y_is_inverse(self, norm_50, kurokawa) -> None:
        samples = sample_network(Z, Z_SYMMETRIC, norm_50, kurokawa, seed=1)
        fit = fit_representation(samples, Y, norm_50, kurokawa)
        assert_allclose(fit.matrix, np.linalg.inv(Z_SYMMETRIC), rtol=1e-10)
        assert fit.residual < 1e-12

    @pytest.mark.regression
    def test_series_s_to_t(self, norm_50, kurokawa) -> None:
        logger.info("📋 Step 1: Sample the series element in S")
        samples = sample_network(S, SERIES_S, norm_50, kurokawa, seed=5)

        logger.info("📋 Step 2: Fit T")
        fit = fit_representation(samples, T, norm_50, kurokawa)
        assert_allclose(fit.matrix, [[1.5, -0.5], [0.5, 0.5]], rtol=1e-10, atol=1e-12)

    def test_through_has_no_z(self, norm_50, kurokawa) -> None:
        samples = sample_network(S, [[0, 1], [1, 0]], norm_50, kurokawa, seed=6)
        with pytest.raises(RankDeficient):
            fit_representation(samples, Z, norm_50, kurokawa)

    def test_too_few_samples(self, norm_50, kurokawa) -> None:
        samples = sample_network(Z, Z_SYMMETRIC, norm_50, kurokawa, seed=1)
        with pytest.raises(RankDeficient):
            fit_representation(samples[:1], Y, norm_50, kurokawa)

    @pytest.mark.parametrize("n_ports", [1, 3, 4])
    def test_wider_networks(self, n_ports, kurokawa) -> None:
        norm = PortNormalization.uniform(50, n_ports)
        rng = np.random.default_rng(n_ports)
        z = 50 * (rng.standard_normal((n_ports, n_ports)) + 1j * rng.standard_normal((n_ports, n_ports)))
        samples = sample_network(Z, z, norm, kurokawa, seed=n_ports)
        fit = fit_representation(samples, S, norm, kurokawa)
        expected = convert(NetworkPoint(frequency=1, rep=Z, matrix=z, norm=norm), S).matrix
        assert relative_deviation(fit.matrix, expected) < 1e-9


class TestClosedForms:
    """Textbook formulas for a real uniform z0."""

    @pytest.mark.smoke
    def test_matched_load(self) -> None:
        assert_allclose(closed_form_convert((Z, S), 50 * np.eye(2), 50), np.zeros((2, 2)), atol=1e-15)

    def test_series_s_to_t(self) -> None:
        assert_allclose(closed_form_convert((S, T), SERIES_S, 50), [[1.5, -0.5], [0.5, 0.5]], rtol=1e-12)

    def test_series_z_free_forms(self) -> None:
        a = closed_form_convert((Z, A), [[70, 20], [20, 70]], 50)
        assert_allclose(a, [[3.5, 225], [0.05, 3.5]], rtol=1e-12)

    def test_z_h_round_trip(self) -> None:
        z = np.array([[30 + 5j, 10], [12, 40 - 3j]])
        h = closed_form_convert((Z, H), z, 50)
        assert_allclose(closed_form_convert((H, Z), h, 50), z, rtol=1e-12)

    def test_unsupported_pair(self) -> None:
        assert (Representation.G, Representation.B) not in SUPPORTED_PAIRS
        with pytest.raises(ValueError, match="no closed form"):
            closed_form_convert((Representation.G, Representation.B), np.eye(2), 50)

    def test_non_positive_z0_rejected(self) -> None:
        with pytest.raises(NonPositiveRealPart):
            closed_form_convert((Z, S), np.eye(2), -50)

    def test_zero_pivot(self) -> None:
        with pytest.raises(SingularConversion):
            closed_form_convert((S, T), np.eye(2), 50)

    def test_two_port_only_shape(self) -> None:
        with pytest.raises(ValueError):
            closed_form_convert((S, T), np.eye(3), 50)


class TestTriangulation:
    """Generated conversion, fitted oracle and closed form agree."""

    @pytest.mark.regression
    @pytest.mark.parametrize("pair", SUPPORTED_PAIRS, ids=lambda pair: f"{pair[0].value}-{pair[1].value}")
    def test_three_ways(self, pair, norm_50, kurokawa) -> None:
        source, target = pair
        rng = np.random.default_rng(101)
        scale = {Z: 50.0, Y: 0.02}.get(source, 1.0)
        m = scale * (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        if source is A:
            m = np.array([[1, 50], [0.02, 1]]) * m
        if source is H:
            m = np.array([[50, 1], [1, 0.02]]) * m

        logger.info(f"📋 Step 1: Generated {source.value} -> {target.value}")
        generated = convert(NetworkPoint(frequency=1, rep=source, matrix=m, norm=norm_50), target).matrix

        logger.info("📋 Step 2: Definitional fit")
        fitted = fit_representation(sample_network(source, m, norm_50, kurokawa, seed=7), target, norm_50, kurokawa)

        logger.info("📋 Step 3: Closed form")
        closed = closed_form_convert(pair, m, 50)

        assert relative_deviation(generated, fitted.matrix) < 1e-9
        assert relative_deviation(generated, closed) < 1e-10

    def test_traveling_with_complex_z0(self) -> None:
        norm = PortNormalization.uniform(40 + 30j, 2)
        convention = WaveConvention.traveling(1j)
        point = NetworkPoint(frequency=1, rep=Z, matrix=Z_SYMMETRIC, norm=norm, convention=convention)
        fitted = fit_representation(sample_network(Z, Z_SYMMETRIC, norm, convention, seed=8), S, norm, convention)
        assert relative_deviation(convert(point, S).matrix, fitted.matrix) < 1e-9
