"""
Definitional sampling: draw consistent port signals for a network given in
any representation, using only the descriptor lists and the per-port wave
relations. Nothing here touches P or the linear fractional transform.
"""

from __future__ import annotations

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from core.descriptors import descriptor
from core.types import (
    ComplexScalar,
    PortNormalization,
    Representation,
    SignalKind,
    SignalRef,
    WaveConvention,
    as_complex_matrix,
)
from core.waves import vi_to_waves, wave_k, waves_to_vi
from utils.constants import TOLERANCES

logger = logging.getLogger(__name__)


class PortSignalSample(BaseModel):
    """One consistent assignment of V, I, A and B at every port."""

    model_config = ConfigDict(frozen=True)

    v: tuple[ComplexScalar, ...]
    i: tuple[ComplexScalar, ...]
    a: tuple[ComplexScalar, ...]
    b: tuple[ComplexScalar, ...]

    def signal(self, ref: SignalRef) -> complex:
        """Value of a signed signal reference in this sample."""
        values = {
            SignalKind.V: self.v,
            SignalKind.I: self.i,
            SignalKind.A: self.a,
            SignalKind.B: self.b,
        }[ref.kind]
        return ref.sign * values[ref.port - 1]


def _expand(
    known: dict[SignalRef, complex], norm: PortNormalization, convention: WaveConvention
) -> PortSignalSample:
    """Fill in the missing pair (V, I) or (A, B) at every port from the known pair."""
    n = norm.n_ports
    by_port: dict[int, dict[SignalKind, complex]] = {p: {} for p in range(1, n + 1)}
    for ref, value in known.items():
        by_port[ref.port][ref.kind] = ref.sign * value

    v, i, a, b = [], [], [], []
    for port in range(1, n + 1):
        z0 = norm.z0[port - 1]
        k = wave_k(convention, z0)
        signals = by_port[port]
        if any(kind.is_wave for kind in signals):
            ap, bp = signals[SignalKind.A], signals[SignalKind.B]
            vp, ip = waves_to_vi(ap, bp, z0, k)
            a_check, b_check = vi_to_waves(vp, ip, z0, k)
            scale = max(abs(ap), abs(bp))
            assert abs(a_check - ap) <= TOLERANCES.SAMPLE_CONSISTENCY * scale + 1e-300
            assert abs(b_check - bp) <= TOLERANCES.SAMPLE_CONSISTENCY * scale + 1e-300
        else:
            vp, ip = signals[SignalKind.V], signals[SignalKind.I]
            ap, bp = vi_to_waves(vp, ip, z0, k)
        v.append(vp)
        i.append(ip)
        a.append(ap)
        b.append(bp)
    return PortSignalSample(v=tuple(v), i=tuple(i), a=tuple(a), b=tuple(b))


def sample_network(
    rep: Representation,
    r: np.ndarray,
    norm: PortNormalization,
    convention: WaveConvention,
    seed: int,
) -> list[PortSignalSample]:
    """Draw 2N consistent port-signal records of the network O = R U.

    Each record picks a random input vector U with unit-magnitude entries,
    sets O = R U and expands both into V, I, A, B at every port.
    """
    r = as_complex_matrix(r)
    desc = descriptor(Representation(rep), norm.n_ports)
    n = desc.n_ports
    if r.shape != (n, n):
        raise ValueError(f"{rep} matrix must be {n}x{n}, got {r.shape}")

    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(2 * n):
        u = np.exp(2j * np.pi * rng.random(n))
        o = r @ u
        known = dict(zip(desc.outputs, o))
        known.update(zip(desc.inputs, u))
        samples.append(_expand(known, norm, convention))
    return samples
