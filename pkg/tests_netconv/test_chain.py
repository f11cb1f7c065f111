import logging

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from core.errors import IncompatiblePoints, SingularConversion
from core.types import NetworkPoint, NetworkSweep, PortNormalization, Representation
from transform.chain import a_to_b, b_to_a, cascade, cascade_sweeps
from transform.engine import convert

logger = logging.getLogger(__name__)

A = Representation.A

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


def _a_point(matrix, norm, frequency=1e9) -> NetworkPoint:
    return NetworkPoint(frequency=frequency, rep=A, matrix=matrix, norm=norm)


class TestChainInversion:
    """B = A^-1."""

    @pytest.mark.smoke
    def test_identity(self) -> None:
        assert_allclose(a_to_b(np.eye(2)), np.eye(2))

    def test_series(self) -> None:
        assert_allclose(a_to_b([[1, 50], [0, 1]]), [[1, -50], [0, 1]])

    def test_impedance_inverter_is_self_inverse(self) -> None:
        assert_allclose(a_to_b([[0, 50], [0.02, 0]]), [[0, 50], [0.02, 0]], rtol=1e-12, atol=1e-15)

    def test_singular(self) -> None:
        with pytest.raises(SingularConversion):
            a_to_b([[1, 2], [2, 4]])

    def test_not_two_by_two(self) -> None:
        with pytest.raises(ValueError):
            a_to_b(np.eye(3))

    def test_agrees_with_convert(self, series_50) -> None:
        a = convert(series_50, A).matrix
        assert_allclose(a_to_b(a), convert(series_50, Representation.B).matrix, rtol=1e-10, atol=1e-10)

    @pytest.mark.property
    @hypothesis_settings(max_examples=200)
    @given(finite, finite, finite, finite, finite, finite, finite, finite)
    def test_double_inversion(self, a, b, c, d, e, f, g, h) -> None:
        m = np.array([[a + 1j * b, c + 1j * d], [e + 1j * f, g + 1j * h]])
        singular_values = np.linalg.svd(m, compute_uv=False)
        if singular_values[-1] <= 1e-6 * singular_values[0]:
            return
        assert_allclose(b_to_a(a_to_b(m)), m, rtol=1e-9, atol=1e-9 * singular_values[0])


class TestCascade:
    """Chain products of two-ports."""

    @pytest.mark.smoke
    def test_two_series(self, series_50) -> None:
        result = cascade(series_50, series_50)
        assert result.rep is A
        assert_allclose(result.matrix, [[1, 100], [0, 1]], rtol=1e-10, atol=1e-10)

    def test_through_is_neutral(self, shunt_005, through) -> None:
        expected = convert(shunt_005, A).matrix
        assert_allclose(cascade(shunt_005, through).matrix, expected, rtol=1e-10, atol=1e-10)
        assert_allclose(cascade(through, shunt_005).matrix, expected, rtol=1e-10, atol=1e-10)

    def test_series_then_shunt(self, norm_50) -> None:
        series = _a_point([[1, 50], [0, 1]], norm_50)
        shunt = _a_point([[1, 0], [0.02, 1]], norm_50)
        assert_allclose(cascade(series, shunt).matrix, [[2, 50], [0.02, 1]], rtol=1e-12)

    def test_frequency_mismatch(self, series_50) -> None:
        with pytest.raises(IncompatiblePoints):
            cascade(series_50, series_50.model_copy(update={"frequency": 2e9}))

    def test_normalization_mismatch(self, series_50) -> None:
        other = series_50.model_copy(update={"norm": PortNormalization.uniform(75, 2)})
        with pytest.raises(IncompatiblePoints):
            cascade(series_50, other)

    def test_leg_without_chain_matrix(self, norm_50) -> None:
        # Two isolated shunt loads: Y exists, A does not.
        point = NetworkPoint(frequency=1e9, rep=Representation.Y, matrix=[[0.01, 0], [0, 0.01]], norm=norm_50)
        with pytest.raises(SingularConversion):
            cascade(point, point)


class TestCascadeSweeps:
    """Cascading whole sweeps on a shared grid."""

    @staticmethod
    def _sweep(point: NetworkPoint, frequencies) -> NetworkSweep:
        return NetworkSweep(points=tuple(point.model_copy(update={"frequency": f}) for f in frequencies))

    @pytest.mark.regression
    def test_three_networks(self, series_50) -> None:
        logger.info("📋 Step 1: Three series 50 ohm sweeps on one grid")
        sweep = self._sweep(series_50, (1e9, 2e9))
        result = cascade_sweeps([sweep, sweep, sweep])

        logger.info("📋 Step 2: Check the composite chain matrix")
        assert len(result) == 2
        for point in result.points:
            assert_allclose(point.matrix, [[1, 150], [0, 1]], rtol=1e-10, atol=1e-10)

    def test_grid_mismatch(self, series_50) -> None:
        with pytest.raises(IncompatiblePoints):
            cascade_sweeps([self._sweep(series_50, (1e9, 2e9)), self._sweep(series_50, (1e9, 3e9))])

    def test_length_mismatch(self, series_50) -> None:
        with pytest.raises(IncompatiblePoints):
            cascade_sweeps([self._sweep(series_50, (1e9, 2e9)), self._sweep(series_50, (1e9,))])

    def test_needs_two(self, series_50) -> None:
        with pytest.raises(ValueError):
            cascade_sweeps([self._sweep(series_50, (1e9,))])
