"""
Per-port conversion between voltage/current and incident/reflected waves.

    A = k (V + Z0 I)        V = (A + B) / (2k)
    B = k (V - Z0 I)        I = (Y0 A - Y0 B) / (2k),  Y0 = 1/Z0

Z0 is never conjugated.
"""

from __future__ import annotations

import cmath
import logging

from core.errors import NonPositiveRealPart, ZeroK
from core.types import WaveConvention, WaveKind, as_complex_scalar

logger = logging.getLogger(__name__)


def wave_k(convention: WaveConvention, z0: complex) -> complex:
    """Wave scaling constant k for one port.

    KUROKAWA:  k = 1 / (2 sqrt(Re Z0))
    TRAVELING: k = alpha sqrt(Re Z0) / (2 |Z0|)
    """
    z0 = as_complex_scalar(z0)
    if z0.real <= 0:
        raise NonPositiveRealPart(f"Re{{z0}} must be > 0, got {z0}")
    root = cmath.sqrt(z0.real)
    if convention.kind is WaveKind.KUROKAWA:
        return 1 / (2 * root)
    return convention.alpha * root / (2 * abs(z0))


def vi_to_waves(v: complex, i: complex, z0: complex, k: complex) -> tuple[complex, complex]:
    """Incident and reflected wave (a, b) from port voltage and inward current."""
    v, i, z0, k = (as_complex_scalar(x) for x in (v, i, z0, k))
    return k * (v + z0 * i), k * (v - z0 * i)


def waves_to_vi(a: complex, b: complex, z0: complex, k: complex) -> tuple[complex, complex]:
    """Port voltage and inward current (v, i) from incident and reflected waves."""
    a, b, z0, k = (as_complex_scalar(x) for x in (a, b, z0, k))
    if k == 0:
        raise ZeroK("k must be nonzero to recover V and I from waves")
    if z0 == 0:
        raise NonPositiveRealPart("z0 must be nonzero to recover I from waves")
    y0 = 1 / z0
    return (a + b) / (2 * k), (y0 * a - y0 * b) / (2 * k)
