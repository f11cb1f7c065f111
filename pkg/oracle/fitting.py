"""Least-squares recovery of a representation from sampled port signals."""

from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np

from config import settings
from core.descriptors import descriptor
from core.errors import RankDeficient
from core.types import PortNormalization, Representation, WaveConvention, as_complex_matrix
from oracle.sampling import PortSignalSample
from utils.linalg import reciprocal_condition

logger = logging.getLogger(__name__)


class FitResult(NamedTuple):
    matrix: np.ndarray
    residual: float


def fit_representation(
    samples: list[PortSignalSample],
    target: Representation,
    norm: PortNormalization,
    convention: WaveConvention,
) -> FitResult:
    """Solve O' = R' U' over all samples for R' in the least-squares sense.

    ``norm`` and ``convention`` are the ones the samples were drawn with; they
    only fix the port count here since every sample already carries all of
    V, I, A and B.

    Raises RankDeficient when the sampled U' is numerically rank deficient or
    when the best fit leaves a residual above ``settings.fit_residual_limit``.
    """
    target = Representation(target)
    desc = descriptor(target, norm.n_ports)
    n = desc.n_ports
    if len(samples) < n:
        raise RankDeficient(f"need at least {n} samples to fit {target.value}, got {len(samples)}")

    outputs = np.array([[s.signal(ref) for s in samples] for ref in desc.outputs])
    inputs = np.array([[s.signal(ref) for s in samples] for ref in desc.inputs])

    rcond = reciprocal_condition(inputs)
    if rcond < settings.rank_rcond:
        raise RankDeficient(
            f"sampled {target.value} inputs have reciprocal condition {rcond:.3e}; "
            f"{target.value} does not exist for this network"
        )

    # O = R U  <=>  U^T R^T = O^T
    solution, *_ = np.linalg.lstsq(inputs.T, outputs.T, rcond=None)
    matrix = solution.T
    scale = np.linalg.norm(outputs)
    misfit = np.linalg.norm(outputs - matrix @ inputs)
    residual = float(misfit / scale) if scale > 0 else float(misfit)

    if residual > settings.fit_residual_limit:
        raise RankDeficient(
            f"samples are inconsistent with any {target.value} matrix (residual {residual:.3e})"
        )
    return FitResult(matrix=as_complex_matrix(matrix), residual=residual)
