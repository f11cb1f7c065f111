"""
Generic CSV carrier for any representation, including A, B and T which
Touchstone v1 cannot hold.

    freq_hz,rep,re(M_11),im(M_11),re(M_12),im(M_12),...

One row per frequency, matrix entries row-major. Reference impedances are
not stored; the reader is told them.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import re

import numpy as np
from pydantic import ValidationError

from core.types import NetworkPoint, NetworkSweep, PortNormalization, Representation, WaveConvention
from touchstone.errors import InvalidNetworkData, MalformedCsv
from utils.decorators import log_method

logger = logging.getLogger(__name__)

_ENTRY = re.compile(r"^(re|im)\(M_(\d+)_?(\d+)\)$")


def _entry_name(row: int, col: int, n_ports: int) -> str:
    return f"M_{row}_{col}" if n_ports >= 10 else f"M_{row}{col}"


def _header(n_ports: int | None) -> list[str]:
    header = ["freq_hz", "rep"]
    if n_ports is None:
        return header
    for row in range(1, n_ports + 1):
        for col in range(1, n_ports + 1):
            name = _entry_name(row, col, n_ports)
            header += [f"re({name})", f"im({name})"]
    return header


def _number(value: float) -> str:
    return np.format_float_positional(float(value) + 0.0, unique=True, trim="-")


@log_method
def write_csv(sweep: NetworkSweep) -> str:
    """CSV text for ``sweep``; an empty sweep gives the header alone."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_header(sweep.n_ports))
    for point in sweep.points:
        row = [_number(point.frequency), point.rep.value]
        for value in point.matrix.reshape(-1):
            row += [_number(value.real), _number(value.imag)]
        writer.writerow(row)
    return buffer.getvalue()


@log_method
def read_csv(
    text: str, norm: PortNormalization, convention: WaveConvention | None = None
) -> NetworkSweep:
    """Inverse of :func:`write_csv`, with every point referenced to ``norm``."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise MalformedCsv("no header row")
    header, body = rows[0], rows[1:]
    if header[:2] != ["freq_hz", "rep"]:
        raise MalformedCsv(f"header must start with freq_hz,rep, got {','.join(header[:2])}")

    n_entries, odd = divmod(len(header) - 2, 2)
    n_ports = math.isqrt(n_entries)
    if odd or n_ports * n_ports != n_entries:
        raise MalformedCsv(f"{len(header) - 2} value columns do not form a square matrix")
    if header != _header(n_ports if n_ports else None):
        unknown = [name for name in header[2:] if not _ENTRY.match(name)]
        raise MalformedCsv(f"unexpected column order or names {unknown or header[2:]}")
    if body and n_ports != norm.n_ports:
        raise MalformedCsv(f"file holds {n_ports}-port data, normalization has {norm.n_ports} ports")

    convention = convention or WaveConvention()
    points = []
    for line, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise MalformedCsv(f"row {line}: {len(row)} columns, header has {len(header)}")
        try:
            frequency = float(row[0])
            rep = Representation.parse(row[1])
            numbers = np.array([float(x) for x in row[2:]])
        except ValueError as e:
            raise MalformedCsv(f"row {line}: {e}") from e
        matrix = (numbers[0::2] + 1j * numbers[1::2]).reshape(n_ports, n_ports)
        try:
            point = NetworkPoint(frequency=frequency, rep=rep, matrix=matrix, norm=norm, convention=convention)
        except ValidationError as e:
            raise InvalidNetworkData(f"row {line}: {e.errors()[0]['msg']}") from e
        points.append(point)
    return NetworkSweep(points=tuple(points))
