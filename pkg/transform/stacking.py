"""
Stacking matrices and the transformation matrix P.

Every representation's stacked vector [O; U] is a linear image of the
canonical port vector [V1..VN, I1..IN]:

    [O; U] = M_rep [V; I]

so the map between two representations is P = M_to M_from^-1. P is never
transcribed from a table.
"""

from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from core.descriptors import descriptor
from core.types import (
    ComplexMatrix,
    PortNormalization,
    Representation,
    SignalKind,
    WaveConvention,
)
from core.waves import wave_k
from utils.decorators import log_method

logger = logging.getLogger(__name__)


class TransformMatrix(BaseModel):
    """2N x 2N matrix P with quadrants P11, P12 / P21, P22 (each N x N)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    p: ComplexMatrix

    @model_validator(mode="after")
    def _even_square(self) -> TransformMatrix:
        rows, cols = self.p.shape
        if rows != cols or rows % 2:
            raise ValueError(f"P must be 2N x 2N, got {rows}x{cols}")
        return self

    @property
    def n_ports(self) -> int:
        return self.p.shape[0] // 2

    @property
    def p11(self) -> np.ndarray:
        n = self.n_ports
        return self.p[:n, :n]

    @property
    def p12(self) -> np.ndarray:
        n = self.n_ports
        return self.p[:n, n:]

    @property
    def p21(self) -> np.ndarray:
        n = self.n_ports
        return self.p[n:, :n]

    @property
    def p22(self) -> np.ndarray:
        n = self.n_ports
        return self.p[n:, n:]

    def scaled(self, factor: complex) -> TransformMatrix:
        return TransformMatrix(p=factor * self.p)


def stacking_matrix(
    rep: Representation, norm: PortNormalization, convention: WaveConvention
) -> np.ndarray:
    """Rows of [outputs; inputs] of ``rep`` over the canonical basis [V1..VN, I1..IN]."""
    n = norm.n_ports
    desc = descriptor(Representation(rep), n)
    m = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    for row, signal in enumerate(desc.stacked):
        col_v = signal.port - 1
        col_i = n + signal.port - 1
        if signal.kind.is_wave:
            z0 = norm.z0[signal.port - 1]
            k = wave_k(convention, z0)
            direction = 1 if signal.kind is SignalKind.A else -1
            m[row, col_v] = signal.sign * k
            m[row, col_i] = signal.sign * k * direction * z0
        elif signal.kind is SignalKind.V:
            m[row, col_v] = signal.sign
        else:
            m[row, col_i] = signal.sign
    m.setflags(write=False)
    return m


@lru_cache(maxsize=256)
def _build_p_cached(
    source: Representation,
    target: Representation,
    norm: PortNormalization,
    convention: WaveConvention,
) -> TransformMatrix:
    n = norm.n_ports
    if source == target:
        return TransformMatrix(p=np.eye(2 * n, dtype=np.complex128))
    m_from = stacking_matrix(source, norm, convention)
    m_to = stacking_matrix(target, norm, convention)
    # P = M_to M_from^-1, via P^T = M_from^-T M_to^T
    p = np.linalg.solve(m_from.T, m_to.T).T
    return TransformMatrix(p=p)


@log_method
def build_p(
    source: Representation,
    target: Representation,
    norm: PortNormalization,
    convention: WaveConvention,
) -> TransformMatrix:
    """Transformation matrix with [O'; U'] = P [O; U] from ``source`` to ``target``."""
    source, target = Representation(source), Representation(target)
    source.require_ports(norm.n_ports)
    target.require_ports(norm.n_ports)
    return _build_p_cached(source, target, norm, convention)
