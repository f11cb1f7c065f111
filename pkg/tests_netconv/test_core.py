import cmath
import logging
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from core.descriptors import descriptor
from core.errors import NonFiniteValue, NonPositiveRealPart, PortCountMismatch, ZeroK
from core.types import (
    NetworkPoint,
    NetworkSweep,
    PortNormalization,
    Representation,
    SignalKind,
    SignalRef,
    WaveConvention,
    WaveKind,
)
from core.waves import vi_to_waves, wave_k, waves_to_vi

logger = logging.getLogger(__name__)

K50 = 1 / (2 * math.sqrt(50))


class TestWaveConstant:
    """Both printed k formulas."""

    @pytest.mark.smoke
    def test_kurokawa_at_50_ohm(self, kurokawa: WaveConvention) -> None:
        logger.info("📋 Step 1: Evaluate k for 50 ohm")
        assert wave_k(kurokawa, 50) == pytest.approx(0.0707106781, rel=1e-9)

    def test_traveling_equals_kurokawa_for_real_z0(self, kurokawa, traveling) -> None:
        for z0 in (0.1, 1.0, 50.0, 75.0, 1e4):
            assert wave_k(traveling, z0) == pytest.approx(wave_k(kurokawa, z0), rel=1e-15)

    def test_traveling_complex_z0(self, traveling: WaveConvention) -> None:
        assert wave_k(traveling, 50 + 50j) == pytest.approx(0.05, rel=1e-12)

    def test_traveling_carries_alpha(self) -> None:
        alpha = cmath.exp(0.7j)
        k = wave_k(WaveConvention.traveling(alpha), 50 + 50j)
        assert k == pytest.approx(0.05 * alpha, rel=1e-12)

    @pytest.mark.parametrize("z0", [0, -50, -1 + 10j, 0 + 50j])
    def test_non_positive_real_part_rejected(self, kurokawa, z0) -> None:
        with pytest.raises(NonPositiveRealPart):
            wave_k(kurokawa, z0)


class TestWaveTransforms:
    """V/I to incident/reflected waves and back."""

    @pytest.mark.smoke
    def test_open_port_gives_equal_waves(self) -> None:
        a, b = vi_to_waves(1, 0, 50, K50)
        assert a == pytest.approx(K50)
        assert b == pytest.approx(K50)

    def test_matched_port_reflects_nothing(self) -> None:
        _, b = vi_to_waves(1, 0.02, 50, 0.3 + 0.1j)
        assert abs(b) < 1e-15

    def test_worked_values(self) -> None:
        logger.info("📋 Step 1: Forward transform")
        a, b = vi_to_waves(1, 1, 50, K50)
        assert a == pytest.approx(3.6062, abs=1e-4)
        assert b == pytest.approx(-3.4648, abs=1e-4)

        logger.info("📋 Step 2: Back to V and I")
        v, i = waves_to_vi(a, b, 50, K50)
        assert v == pytest.approx(1, rel=1e-12)
        assert i == pytest.approx(1, rel=1e-12)

    def test_symmetric_waves_carry_no_current(self) -> None:
        v, i = waves_to_vi(0.3 + 0.2j, 0.3 + 0.2j, 75, K50)
        assert v == pytest.approx((0.3 + 0.2j) / K50)
        assert i == 0

    def test_incident_only(self) -> None:
        v, i = waves_to_vi(1, 0, 50, K50)
        assert v == pytest.approx(7.0711, abs=1e-4)
        assert i == pytest.approx(0.1414, abs=1e-4)

    def test_no_conjugation_of_z0(self) -> None:
        z0, k, v, i = 30 - 40j, 0.1 + 0.05j, 2 - 1j, 0.01 + 0.03j
        a, b = vi_to_waves(v, i, z0, k)
        assert a - b == pytest.approx(2 * k * z0 * i, rel=1e-14)

    def test_zero_k_rejected(self) -> None:
        with pytest.raises(ZeroK):
            waves_to_vi(1, 1, 50, 0)

    def test_non_finite_rejected(self) -> None:
        with pytest.raises(NonFiniteValue):
            vi_to_waves(float("nan"), 0, 50, K50)

    @pytest.mark.property
    def test_round_trip_random(self) -> None:
        logger.info("📋 Step 1: 1000 seeded random (v, i, z0, k) tuples")
        rng = np.random.default_rng(1234)
        for _ in range(1000):
            z0 = complex(rng.uniform(1, 200), rng.uniform(-100, 100))
            v = complex(*rng.standard_normal(2))
            i = complex(*rng.standard_normal(2)) / abs(z0)
            k = complex(*rng.standard_normal(2))
            v2, i2 = waves_to_vi(*vi_to_waves(v, i, z0, k), z0, k)
            scale = abs(v) + abs(z0 * i)
            assert abs(v2 - v) <= 1e-12 * scale
            assert abs(z0 * (i2 - i)) <= 1e-12 * scale


class TestValueTypes:
    """Construction-time invariants of the pydantic value types."""

    def test_alpha_must_be_unit_modulus(self) -> None:
        with pytest.raises(ValidationError):
            WaveConvention(kind=WaveKind.TRAVELING, alpha=1.5)

    def test_convention_from_name(self) -> None:
        assert WaveConvention.from_name("Traveling").kind is WaveKind.TRAVELING

    def test_normalization_rejects_non_positive(self) -> None:
        with pytest.raises(NonPositiveRealPart):
            PortNormalization(z0=(50, -1 + 0j))

    def test_normalization_properties(self) -> None:
        norm = PortNormalization(z0=(50, 25 + 5j))
        assert norm.n_ports == 2
        assert not norm.is_uniform
        assert not norm.is_real
        assert norm.y0[0] == pytest.approx(0.02)

    def test_signal_ref_str(self) -> None:
        assert str(SignalRef(kind=SignalKind.I, port=2, sign=-1)) == "-I2"

    def test_signal_ref_sign(self) -> None:
        with pytest.raises(ValidationError):
            SignalRef(kind=SignalKind.V, port=1, sign=2)

    def test_signal_kind_families(self) -> None:
        assert [kind for kind in SignalKind if kind.is_wave] == [SignalKind.A, SignalKind.B]

    def test_point_rejects_nan(self, norm_50) -> None:
        with pytest.raises(NonFiniteValue):
            NetworkPoint(frequency=1.0, rep="S", matrix=[[np.nan, 0], [0, 0]], norm=norm_50)

    def test_point_rejects_three_port_t(self) -> None:
        with pytest.raises(PortCountMismatch):
            NetworkPoint(
                frequency=1.0, rep="T", matrix=np.eye(3), norm=PortNormalization.uniform(50, 3)
            )

    def test_point_matrix_is_read_only(self, series_50) -> None:
        with pytest.raises(ValueError):
            series_50.matrix[0, 0] = 0

    def test_sweep_requires_increasing_frequency(self, series_50) -> None:
        later = series_50.model_copy(update={"frequency": 2e9})
        NetworkSweep(points=(series_50, later))
        with pytest.raises(ValidationError):
            NetworkSweep(points=(later, series_50))

    def test_sweep_requires_one_representation(self, series_50) -> None:
        other = series_50.with_matrix(Representation.T, np.eye(2)).model_copy(update={"frequency": 2e9})
        with pytest.raises(ValidationError):
            NetworkSweep(points=(series_50, other))

    def test_empty_sweep(self) -> None:
        sweep = NetworkSweep()
        assert len(sweep) == 0
        assert sweep.rep is None

    @pytest.mark.parametrize("text,expected", [("s", "S"), (" z ", "Z"), ("T", "T")])
    def test_representation_parse(self, text, expected) -> None:
        assert Representation.parse(text) is Representation(expected)

    def test_representation_parse_unknown(self) -> None:
        with pytest.raises(ValueError):
            Representation.parse("Q")


class TestDescriptors:
    """Signal lists per representation."""

    @pytest.mark.smoke
    def test_g(self) -> None:
        desc = descriptor(Representation.G, 2)
        assert [str(s) for s in desc.outputs] == ["I1", "V2"]
        assert [str(s) for s in desc.inputs] == ["V1", "I2"]

    def test_t(self) -> None:
        desc = descriptor(Representation.T, 2)
        assert [str(s) for s in desc.outputs] == ["A1", "B1"]
        assert [str(s) for s in desc.inputs] == ["B2", "A2"]

    def test_a_has_negated_current(self) -> None:
        desc = descriptor(Representation.A, 2)
        assert [str(s) for s in desc.inputs] == ["V2", "-I2"]

    def test_b_swaps_a(self) -> None:
        desc = descriptor(Representation.B, 2)
        assert [str(s) for s in desc.outputs] == ["V2", "-I2"]
        assert [str(s) for s in desc.inputs] == ["V1", "I1"]

    @pytest.mark.parametrize("n_ports", [1, 3, 4])
    def test_per_port_representations(self, n_ports) -> None:
        desc = descriptor(Representation.S, n_ports)
        assert [str(s) for s in desc.outputs] == [f"B{p}" for p in range(1, n_ports + 1)]
        assert [str(s) for s in desc.inputs] == [f"A{p}" for p in range(1, n_ports + 1)]

    def test_s_with_zero_ports(self) -> None:
        with pytest.raises(PortCountMismatch):
            descriptor(Representation.S, 0)

    @pytest.mark.parametrize("rep", ["G", "H", "A", "B", "T"])
    def test_two_port_only(self, rep) -> None:
        with pytest.raises(PortCountMismatch):
            descriptor(Representation(rep), 3)

    @pytest.mark.property
    @given(st.sampled_from(list(Representation)))
    def test_every_port_fully_described(self, rep) -> None:
        desc = descriptor(rep, 2)
        for port in (1, 2):
            kinds = {s.kind for s in desc.stacked if s.port == port}
            assert kinds in ({SignalKind.V, SignalKind.I}, {SignalKind.A, SignalKind.B})
