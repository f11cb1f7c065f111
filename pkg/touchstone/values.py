"""Number pairs and normalization shared by the Touchstone reader and writer."""

from __future__ import annotations

import numpy as np

from touchstone.options import DataFormat, Param
from utils.constants import TOLERANCES, TOUCHSTONE_UNITS


def to_complex(fmt: DataFormat, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """RI: real/imag; MA: magnitude/degrees; DB: 20 log10 magnitude/degrees."""
    if fmt is DataFormat.RI:
        return first + 1j * second
    if fmt is DataFormat.MA:
        return first * np.exp(1j * np.deg2rad(second))
    return 10 ** (first / 20.0) * np.exp(1j * np.deg2rad(second))


def from_complex(fmt: DataFormat, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if fmt is DataFormat.RI:
        return values.real, values.imag
    magnitude = np.abs(values)
    angle = np.rad2deg(np.angle(values))
    if fmt is DataFormat.MA:
        return magnitude, angle
    return 20 * np.log10(np.maximum(magnitude, TOLERANCES.MIN_MAGNITUDE)), angle


def normalization_factors(param: Param, n_ports: int, resistance: float) -> np.ndarray:
    """Elementwise factors taking ohm/siemens data to the file's normalized values."""
    r = resistance
    if param is Param.Z:
        return np.full((n_ports, n_ports), 1 / r)
    if param is Param.Y:
        return np.full((n_ports, n_ports), r)
    if param is Param.H:
        return np.array([[1 / r, 1], [1, r]])
    if param is Param.G:
        return np.array([[r, 1], [1, 1 / r]])
    return np.ones((n_ports, n_ports))


def format_number(value: float) -> str:
    """Round-tripping fixed notation padded to ten significant digits; zero prints as ``0.0``."""
    value = float(value) + 0.0
    text = np.format_float_positional(value, unique=True, trim="0")
    digits = len(text.lstrip("-").replace(".", "").lstrip("0"))
    if value and digits < TOUCHSTONE_UNITS.SIGNIFICANT_DIGITS:
        text += "0" * (TOUCHSTONE_UNITS.SIGNIFICANT_DIGITS - digits)
    return text


def format_frequency(value: float) -> str:
    return np.format_float_positional(float(value) + 0.0, unique=True, trim="-")
