"""Touchstone v1 writer."""

from __future__ import annotations

import logging

import numpy as np

from core.types import NetworkSweep
from touchstone.errors import NormalizationMismatch, UnsupportedRepresentation
from touchstone.options import Param, TouchstoneOptions
from touchstone.values import format_frequency, format_number, from_complex, normalization_factors
from utils.constants import TOUCHSTONE_UNITS
from utils.decorators import log_method

logger = logging.getLogger(__name__)

# Touchstone v1 puts at most four value pairs on one line.
_PAIRS_PER_LINE = 4


def check_writable(sweep: NetworkSweep, options: TouchstoneOptions) -> None:
    """Raise if ``sweep`` cannot be written under ``options``."""
    if sweep.rep is None:
        return
    if sweep.rep.value not in Param.__members__:
        raise UnsupportedRepresentation(
            f"Touchstone v1 cannot hold {sweep.rep.value} parameters; write CSV instead"
        )
    norm = sweep.norm
    if not norm.is_uniform or not norm.is_real:
        raise NormalizationMismatch(f"Touchstone v1 needs one real reference impedance, got {norm.z0}")
    if not np.isclose(norm.z0[0].real, options.resistance, rtol=1e-12, atol=0):
        raise NormalizationMismatch(
            f"sweep is referenced to {norm.z0[0].real} ohm but the option line says R {options.resistance}"
        )


def _data_lines(frequency: str, values: list[str], n_ports: int) -> list[str]:
    if n_ports <= 2:
        return [" ".join([frequency, *values])]
    lines = []
    row_width = 2 * n_ports
    chunk = 2 * _PAIRS_PER_LINE
    for row in range(n_ports):
        row_values = values[row * row_width:(row + 1) * row_width]
        for offset in range(0, row_width, chunk):
            lines.append(" ".join(row_values[offset:offset + chunk]))
    lines[0] = f"{frequency} {lines[0]}"
    return lines


@log_method
def write(sweep: NetworkSweep, options: TouchstoneOptions) -> str:
    """Touchstone v1 text for ``sweep``.

    The parameter letter on the option line is taken from the sweep; unit,
    number format and R come from ``options``.
    """
    check_writable(sweep, options)
    if sweep.rep is not None:
        options = options.model_copy(update={"param": Param(sweep.rep.value)})

    lines = [options.to_line(), f"! Generated by {TOUCHSTONE_UNITS.GENERATOR}"]
    if sweep.rep is None:
        return "\n".join(lines) + "\n"

    n_ports = sweep.n_ports
    factors = normalization_factors(options.param, n_ports, options.resistance)
    scale = options.freq_unit.scale
    for point in sweep.points:
        entries = point.matrix * factors
        if n_ports == 2:
            entries = entries.T
        first, second = from_complex(options.format, entries.reshape(-1))
        values = [format_number(x) for pair in zip(first, second) for x in pair]
        lines += _data_lines(format_frequency(point.frequency / scale), values, n_ports)

    logger.info(f"💾 Wrote {len(sweep)} point(s) as {options.to_line()}")
    return "\n".join(lines) + "\n"
