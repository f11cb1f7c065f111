"""Touchstone v1 reader."""

from __future__ import annotations

import logging
import re
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from core.types import NetworkPoint, NetworkSweep, PortNormalization, WaveConvention
from touchstone.errors import (
    DataCountMismatch,
    InvalidNetworkData,
    MalformedOptionLine,
    NonMonotonicFrequency,
    TouchstoneError,
    UnsupportedVersionKeyword,
)
from touchstone.options import TouchstoneOptions
from touchstone.values import normalization_factors, to_complex
from utils.decorators import log_method

logger = logging.getLogger(__name__)

_EXTENSION = re.compile(r"\.s(\d+)p$", re.IGNORECASE)


def ports_from_filename(path: str | Path) -> int:
    """Port count from the ``.sNp`` extension, e.g. ``amp.s2p`` -> 2."""
    match = _EXTENSION.search(str(path))
    if not match or int(match.group(1)) < 1:
        raise TouchstoneError(f"{path}: cannot tell the port count, expected a .sNp extension")
    return int(match.group(1))


def _records(lines: list[tuple[int, list[str]]], n_ports: int) -> list[tuple[int, list[float]]]:
    """Group data tokens into per-frequency records of 1 + 2 N^2 numbers."""
    size = 1 + 2 * n_ports * n_ports
    records: list[tuple[int, list[float]]] = []
    pending: list[float] = []
    start = 0
    for number, tokens in lines:
        try:
            values = [float(token) for token in tokens]
        except ValueError as e:
            raise TouchstoneError(f"line {number}: not a number in {' '.join(tokens)!r}") from e

        if n_ports <= 2:
            if len(values) != size:
                raise DataCountMismatch(
                    f"line {number}: expected 1 + {size - 1} values for a {n_ports}-port, got {len(values)}"
                )
            records.append((number, values))
            continue

        if not pending:
            start = number
        pending.extend(values)
        if len(pending) > size:
            raise DataCountMismatch(
                f"line {number}: record starting at line {start} runs past {size} values"
            )
        if len(pending) == size:
            records.append((start, pending))
            pending = []

    if pending:
        raise DataCountMismatch(
            f"line {start}: last record has {len(pending)} values, expected {size}"
        )
    return records


@log_method
def parse(
    text: str, n_ports: int, convention: WaveConvention | None = None
) -> tuple[NetworkSweep, TouchstoneOptions]:
    """Read Touchstone v1 text holding ``n_ports``-port data.

    Returns the sweep in the file's own representation, in ohm/siemens, with
    every port referenced to the option line's R.
    """
    if n_ports < 1:
        raise ValueError(f"n_ports must be at least 1, got {n_ports}")

    options: TouchstoneOptions | None = None
    data_lines: list[tuple[int, list[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("!", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            raise UnsupportedVersionKeyword(f"line {number}: Touchstone v2 keyword {line.split()[0]!r}")
        if line.startswith("#"):
            if options is not None:
                raise MalformedOptionLine(f"line {number}: second option line")
            if data_lines:
                raise MalformedOptionLine(f"line {number}: option line after data")
            options = TouchstoneOptions.from_line(line)
            continue
        data_lines.append((number, line.split()))

    options = options or TouchstoneOptions()
    rep = options.param.representation
    rep.require_ports(n_ports)
    norm = PortNormalization.uniform(options.resistance, n_ports)
    convention = convention or WaveConvention()
    factors = normalization_factors(options.param, n_ports, options.resistance)

    points = []
    previous: float | None = None
    for number, values in _records(data_lines, n_ports):
        frequency = values[0] * options.freq_unit.scale
        if previous is not None and not frequency > previous:
            raise NonMonotonicFrequency(
                f"line {number}: frequency {values[0]} does not increase on the previous one"
            )
        previous = frequency

        pairs = np.array(values[1:]).reshape(-1, 2)
        entries = to_complex(options.format, pairs[:, 0], pairs[:, 1]).reshape(n_ports, n_ports)
        if n_ports == 2:
            # two-port column order is N11 N21 N12 N22
            entries = entries.T
        try:
            point = NetworkPoint(
                frequency=frequency,
                rep=rep,
                matrix=entries / factors,
                norm=norm,
                convention=convention,
            )
        except ValidationError as e:
            raise InvalidNetworkData(f"line {number}: {e.errors()[0]['msg']}") from e
        points.append(point)

    logger.info(f"📄 Parsed {len(points)} point(s) of {n_ports}-port {rep.value} data ({options.to_line()})")
    return NetworkSweep(points=tuple(points)), options


def load(path: str | Path, convention: WaveConvention | None = None) -> tuple[NetworkSweep, TouchstoneOptions]:
    """Read a ``.sNp`` file, taking the port count from its name."""
    path = Path(path)
    n_ports = ports_from_filename(path)
    return parse(path.read_text(encoding="utf-8"), n_ports, convention)
