"""
Textbook conversion formulas for a real, uniform reference impedance.

Used only to triangulate the generated conversions in tests; each formula is
written out independently of the stacking construction.
"""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from config import settings
from core.errors import NonPositiveRealPart, SingularConversion
from core.types import Representation, as_complex_matrix
from utils.linalg import reciprocal_condition

logger = logging.getLogger(__name__)

Z, Y, H, A, S, T = (
    Representation.Z,
    Representation.Y,
    Representation.H,
    Representation.A,
    Representation.S,
    Representation.T,
)


def _inverse(m: np.ndarray) -> np.ndarray:
    if reciprocal_condition(m) < settings.singular_rcond:
        raise SingularConversion("matrix to invert is singular")
    return np.linalg.inv(m)


def _pivot(value: complex, what: str) -> complex:
    if abs(value) == 0:
        raise SingularConversion(f"{what} is zero")
    return value


def _z_to_y(z: np.ndarray, z0: float) -> np.ndarray:
    return _inverse(z)


def _z_to_s(z: np.ndarray, z0: float) -> np.ndarray:
    eye = np.eye(len(z))
    return (z - z0 * eye) @ _inverse(z + z0 * eye)


def _s_to_z(s: np.ndarray, z0: float) -> np.ndarray:
    eye = np.eye(len(s))
    return z0 * (eye + s) @ _inverse(eye - s)


def _s_to_t(s: np.ndarray, z0: float) -> np.ndarray:
    s21 = _pivot(s[1, 0], "S21")
    return np.array([
        [1, -s[1, 1]],
        [s[0, 0], s[0, 1] * s[1, 0] - s[0, 0] * s[1, 1]],
    ]) / s21


def _t_to_s(t: np.ndarray, z0: float) -> np.ndarray:
    t11 = _pivot(t[0, 0], "T11")
    return np.array([
        [t[1, 0], t[0, 0] * t[1, 1] - t[0, 1] * t[1, 0]],
        [1, -t[0, 1]],
    ]) / t11


def _z_to_h(z: np.ndarray, z0: float) -> np.ndarray:
    z22 = _pivot(z[1, 1], "Z22")
    return np.array([
        [np.linalg.det(z), z[0, 1]],
        [-z[1, 0], 1],
    ]) / z22


def _h_to_z(h: np.ndarray, z0: float) -> np.ndarray:
    h22 = _pivot(h[1, 1], "H22")
    return np.array([
        [np.linalg.det(h), h[0, 1]],
        [-h[1, 0], 1],
    ]) / h22


def _z_to_a(z: np.ndarray, z0: float) -> np.ndarray:
    z21 = _pivot(z[1, 0], "Z21")
    return np.array([
        [z[0, 0], np.linalg.det(z)],
        [1, z[1, 1]],
    ]) / z21


def _a_to_z(a: np.ndarray, z0: float) -> np.ndarray:
    a21 = _pivot(a[1, 0], "C")
    return np.array([
        [a[0, 0], np.linalg.det(a)],
        [1, a[1, 1]],
    ]) / a21


_FORMULAS: dict[tuple[Representation, Representation], Callable[[np.ndarray, float], np.ndarray]] = {
    (Z, Y): _z_to_y,
    (Y, Z): _z_to_y,
    (Z, S): _z_to_s,
    (S, Z): _s_to_z,
    (S, T): _s_to_t,
    (T, S): _t_to_s,
    (Z, H): _z_to_h,
    (H, Z): _h_to_z,
    (Z, A): _z_to_a,
    (A, Z): _a_to_z,
}

SUPPORTED_PAIRS = tuple(_FORMULAS)


def closed_form_convert(
    rep_pair: tuple[Representation, Representation], m: np.ndarray, z0: float
) -> np.ndarray:
    """Textbook conversion of ``m`` for the ordered pair ``rep_pair``."""
    pair = (Representation(rep_pair[0]), Representation(rep_pair[1]))
    if pair not in _FORMULAS:
        supported = ", ".join(f"{a.value}->{b.value}" for a, b in SUPPORTED_PAIRS)
        raise ValueError(f"no closed form for {pair[0].value}->{pair[1].value} (have {supported})")
    if z0 <= 0:
        raise NonPositiveRealPart(f"closed forms need a real positive z0, got {z0}")
    m = as_complex_matrix(m)
    if pair[0].two_port_only or pair[1].two_port_only:
        if m.shape != (2, 2):
            raise ValueError(f"{pair[0].value}->{pair[1].value} needs a 2x2 matrix")
    return as_complex_matrix(_FORMULAS[pair](m, float(z0)))
