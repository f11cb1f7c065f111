"""Chain-matrix utilities: A <-> B inversion and cascading of two-ports."""

from __future__ import annotations

import logging
import math

import numpy as np

from config import settings
from core.errors import IncompatiblePoints, SingularConversion
from core.types import NetworkPoint, NetworkSweep, Representation, as_complex_matrix
from transform.engine import convert
from utils.constants import TOLERANCES
from utils.decorators import log_method
from utils.linalg import reciprocal_condition

logger = logging.getLogger(__name__)


def a_to_b(a: np.ndarray) -> np.ndarray:
    """B = A^-1 for a 2x2 chain matrix."""
    a = as_complex_matrix(a)
    if a.shape != (2, 2):
        raise ValueError(f"chain matrices are 2x2, got {a.shape}")
    if reciprocal_condition(a) < settings.singular_rcond:
        raise SingularConversion(f"chain matrix is singular (det = {np.linalg.det(a):.3e})")
    return as_complex_matrix(np.linalg.inv(a))


# A is the inverse of B exactly as B is the inverse of A.
b_to_a = a_to_b


def _require_compatible(first: NetworkPoint, second: NetworkPoint) -> None:
    if first.n_ports != 2 or second.n_ports != 2:
        raise IncompatiblePoints("only two-ports can be cascaded")
    if not math.isclose(first.frequency, second.frequency, rel_tol=TOLERANCES.FREQUENCY_MATCH):
        raise IncompatiblePoints(
            f"frequencies differ: {first.frequency} Hz vs {second.frequency} Hz"
        )
    if first.norm != second.norm or first.convention != second.convention:
        raise IncompatiblePoints("normalization or wave convention differ between operands")


@log_method
def cascade(first: NetworkPoint, second: NetworkPoint) -> NetworkPoint:
    """Composite of ``first`` followed by ``second``: A = A_first A_second."""
    _require_compatible(first, second)
    a_first = convert(first, Representation.A).matrix
    a_second = convert(second, Representation.A).matrix
    return first.with_matrix(Representation.A, a_first @ a_second)


@log_method
def cascade_sweeps(sweeps: list[NetworkSweep]) -> NetworkSweep:
    """Cascade two or more two-port sweeps left to right on a shared frequency grid."""
    if len(sweeps) < 2:
        raise ValueError("cascading needs at least two networks")
    grid = sweeps[0].frequencies
    for index, sweep in enumerate(sweeps[1:], start=2):
        if len(sweep) != len(grid) or not np.allclose(
            sweep.frequencies, grid, rtol=TOLERANCES.FREQUENCY_MATCH, atol=0
        ):
            raise IncompatiblePoints(f"network {index} is on a different frequency grid")

    logger.info(f"🔗 Cascading {len(sweeps)} networks over {len(grid)} frequencies")
    points = []
    for column in zip(*(s.points for s in sweeps)):
        composite = column[0]
        for following in column[1:]:
            composite = cascade(composite, following)
        points.append(composite)
    return NetworkSweep(points=tuple(points))
