"""
The four netconv commands. Each returns a process exit status; library
errors propagate to ``cli.main`` which turns them into exit codes.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import numpy as np

from cli.config import CliConfig
from core.types import NetworkSweep, PortNormalization, Representation
from oracle.verification import verify_all
from touchstone import (
    NormalizationMismatch,
    Param,
    TouchstoneError,
    TouchstoneOptions,
    UnsupportedRepresentation,
    check_writable,
    load,
    write,
    write_csv,
)
from transform.chain import cascade_sweeps
from transform.engine import convert_sweep, renormalize
from utils.constants import EXIT_CODES
from utils.decorators import log_method

logger = logging.getLogger(__name__)


def _load(path: Path, config: CliConfig) -> tuple[NetworkSweep, TouchstoneOptions]:
    sweep, options = load(path, convention=config.wave_convention)
    if not len(sweep):
        raise TouchstoneError(f"{path}: no network data")
    logger.info(f"📂 {path}: {len(sweep)} point(s), {sweep.n_ports}-port {sweep.rep.value}")
    return sweep, options


def _rereference(sweep: NetworkSweep, norm: PortNormalization | None) -> NetworkSweep:
    if norm is None or norm == sweep.norm:
        return sweep
    logger.info(f"🔁 Re-referencing to z0 = {', '.join(str(z) for z in norm.z0)}")
    return NetworkSweep(points=tuple(renormalize(point, norm) for point in sweep.points))


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.write_text(text, encoding="utf-8")
    logger.info(f"💾 Wrote {output}")


def _write_sweep(sweep: NetworkSweep, source: TouchstoneOptions, config: CliConfig) -> None:
    """Touchstone when the data fits v1, CSV otherwise."""
    output = config.output
    try:
        if sweep.rep.value not in Param.__members__:
            raise UnsupportedRepresentation(f"{sweep.rep.value} parameters")
        options = TouchstoneOptions(
            freq_unit=source.freq_unit,
            param=Param(sweep.rep.value),
            format=config.format,
            resistance=sweep.norm.z0[0].real,
        )
        check_writable(sweep, options)
    except (UnsupportedRepresentation, NormalizationMismatch) as e:
        if output is not None and output.suffix.lower() != ".csv":
            output = output.with_suffix(".csv")
        logger.warning(f"⚠️ Touchstone v1 cannot carry this result ({e}); writing CSV to {output or 'stdout'}")
        _emit(write_csv(sweep), output)
        return
    _emit(write(sweep, options), output)


@log_method
def cmd_convert(config: CliConfig) -> int:
    sweep, options = _load(config.inputs[0], config)
    converted = convert_sweep(sweep, config.target_rep)
    converted = _rereference(converted, config.normalization(sweep.n_ports))
    _write_sweep(converted, options, config)
    return EXIT_CODES.OK


def _format_entry(name: str, value: complex) -> str:
    magnitude = abs(value)
    degrees = float(np.degrees(np.angle(value)))
    return (
        f"{name} = {value.real:.6g}{value.imag:+.6g}j  "
        f"|{name}| = {magnitude:.6g} ∠ {degrees:.3f}°"
    )


@log_method
def cmd_show(config: CliConfig) -> int:
    sweep, _ = _load(config.inputs[0], config)
    if config.target_rep is not None:
        sweep = convert_sweep(sweep, config.target_rep)
    sweep = _rereference(sweep, config.normalization(sweep.n_ports))

    rep = sweep.rep.value
    z0 = ", ".join(f"{z.real:g}{z.imag:+g}j" if z.imag else f"{z.real:g}" for z in sweep.norm.z0)
    lines = [f"{config.inputs[0]}: {sweep.n_ports}-port {rep}, z0 = {z0} ohm"]
    n = sweep.n_ports
    for point in sweep.points:
        lines.append(f"f = {point.frequency:.12g} Hz")
        for row in range(n):
            for col in range(n):
                name = f"{rep}{row + 1}{col + 1}" if n < 10 else f"{rep}{row + 1}_{col + 1}"
                lines.append(f"  {_format_entry(name, complex(point.matrix[row, col]))}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_CODES.OK


@log_method
def cmd_cascade(config: CliConfig) -> int:
    loaded = [_load(path, config) for path in config.inputs]
    first = loaded[0][0]
    # A does not depend on the reference, so every input shares one
    reference = config.normalization(first.n_ports) or first.norm
    sweeps = [
        _rereference(sweep, reference) if sweep.n_ports == reference.n_ports else sweep
        for sweep, _ in loaded
    ]
    composite = cascade_sweeps(sweeps)
    target = config.target_rep or Representation.A
    _write_sweep(convert_sweep(composite, target), loaded[0][1], config)
    return EXIT_CODES.OK


@log_method
def cmd_selftest(config: CliConfig) -> int:
    report = verify_all(pairs=config.pairs, trials=config.trials, seed=config.seed)
    sys.stdout.write(report.to_text())
    if config.output is not None:
        config.output.write_text(report.to_lines(), encoding="utf-8")
        logger.info(f"💾 Wrote line report to {config.output}")
    if not report.passed:
        logger.error("❌ Generated conversions disagree with the oracle")
        return EXIT_CODES.SELFTEST_FAILED
    return EXIT_CODES.OK


COMMANDS = {
    "convert": cmd_convert,
    "show": cmd_show,
    "cascade": cmd_cascade,
    "selftest": cmd_selftest,
}
