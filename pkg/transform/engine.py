"""
Representation conversion via the linear fractional transform

    R' = (P11 R + P12) (P21 R + P22)^-1
"""

from __future__ import annotations

import logging

import numpy as np

from config import settings
from core.errors import SingularConversion
from core.types import (
    NetworkPoint,
    NetworkSweep,
    PortNormalization,
    Representation,
    as_complex_matrix,
)
from transform.stacking import TransformMatrix, build_p
from utils.decorators import log_method
from utils.linalg import reciprocal_condition

logger = logging.getLogger(__name__)

# Normalization-independent representations tried in order when re-referencing wave data.
_PIVOTS = (
    Representation.Z,
    Representation.Y,
    Representation.A,
    Representation.G,
    Representation.H,
)


def moebius(p: TransformMatrix, r: np.ndarray) -> np.ndarray:
    """Apply P to the representation matrix ``r``.

    Raises SingularConversion when P21 R + P22 is singular or its reciprocal
    condition number is below ``settings.singular_rcond``.
    """
    r = as_complex_matrix(r)
    n = p.n_ports
    if r.shape != (n, n):
        raise ValueError(f"R must be {n}x{n} for a {2 * n}x{2 * n} P, got {r.shape}")

    numerator = p.p11 @ r + p.p12
    denominator = p.p21 @ r + p.p22

    rcond = reciprocal_condition(denominator)
    if rcond < settings.singular_rcond:
        raise SingularConversion(
            f"P21 R + P22 is singular (reciprocal condition {rcond:.3e}); "
            "the target representation does not exist for this network"
        )

    # R' D = N  <=>  D^T R'^T = N^T
    result = np.linalg.solve(denominator.T, numerator.T).T
    return as_complex_matrix(result)


@log_method
def convert(point: NetworkPoint, target: Representation) -> NetworkPoint:
    """Express ``point`` in the ``target`` representation."""
    target = Representation(target)
    target.require_ports(point.n_ports)
    if target is point.rep:
        return point

    p = build_p(point.rep, target, point.norm, point.convention)
    try:
        matrix = moebius(p, point.matrix)
    except SingularConversion as e:
        logger.debug(f"⚠️ {point.rep.value} -> {target.value} singular at {point.frequency} Hz")
        raise e.at_frequency(point.frequency) from e
    return point.with_matrix(target, matrix)


@log_method
def convert_sweep(sweep: NetworkSweep, target: Representation) -> NetworkSweep:
    """Convert every point of ``sweep``, keeping frequency order."""
    target = Representation(target)
    logger.info(f"🔄 Converting {len(sweep)} point(s) {sweep.rep and sweep.rep.value} -> {target.value}")
    return NetworkSweep(points=tuple(convert(point, target) for point in sweep.points))


@log_method
def renormalize(point: NetworkPoint, norm: PortNormalization) -> NetworkPoint:
    """Re-reference ``point`` to new port impedances.

    Voltage/current data do not depend on the reference, so only metadata
    changes. Wave data pass through the first pivot representation that
    exists for the network.
    """
    if norm == point.norm:
        return point
    if norm.n_ports != point.n_ports:
        raise ValueError(f"normalization has {norm.n_ports} ports, network has {point.n_ports}")

    if not point.rep.is_wave_based:
        return point.model_copy(update={"norm": norm})

    last_error: SingularConversion | None = None
    for pivot in _PIVOTS:
        if not pivot.supports(point.n_ports):
            continue
        try:
            pivoted = convert(point, pivot)
        except SingularConversion as e:
            last_error = e
            continue
        rereferenced = pivoted.model_copy(update={"norm": norm})
        return convert(rereferenced, point.rep)

    assert last_error is not None
    raise SingularConversion(
        "no normalization-independent representation exists to re-reference this network",
        frequency=point.frequency,
    ) from last_error
