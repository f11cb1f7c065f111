"""
The published two-port conversion table, kept as symbolic data.

Rows are the source representation, columns the target. Each entry is a
prefactor ("1", "k" or "1/2k") and a 4x4 matrix over the symbols
0, +-1, +-Z0, +-Y0, exactly as printed. B has no row or column in the
table. The two worked examples printed alongside the table are kept
separately since one of them disagrees with its own table entry.

This data is only ever compared against generated P matrices; conversion
never reads it.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from core.types import Representation

Y, Z, G, H, A, S, T = (
    Representation.Y,
    Representation.Z,
    Representation.G,
    Representation.H,
    Representation.A,
    Representation.S,
    Representation.T,
)


class PrintedEntry(NamedTuple):
    prefactor: str
    rows: tuple[tuple[str, ...], ...]


def _entry(prefactor: str, *rows: str) -> PrintedEntry:
    return PrintedEntry(prefactor, tuple(tuple(row.split()) for row in rows))


PRINTED_TABLE: dict[tuple[Representation, Representation], PrintedEntry] = {
    # from Y
    (Y, Z): _entry("1", "0 0 1 0", "0 0 0 1", "1 0 0 0", "0 1 0 0"),
    (Y, G): _entry("1", "1 0 0 0", "0 0 0 1", "0 0 1 0", "0 1 0 0"),
    (Y, H): _entry("1", "0 0 1 0", "0 1 0 0", "1 0 0 0", "0 0 0 1"),
    (Y, A): _entry("1", "0 0 1 0", "1 0 0 0", "0 0 0 1", "0 -1 0 0"),
    (Y, S): _entry("k", "-Z0 0 1 0", "0 -Z0 0 1", "Z0 0 1 0", "0 Z0 0 1"),
    (Y, T): _entry("k", "0 -Z0 0 1", "0 Z0 0 1", "Z0 0 1 0", "-Z0 0 1 0"),
    # from Z
    (Z, Y): _entry("1", "0 0 1 0", "0 0 0 1", "1 0 0 0", "0 1 0 0"),
    (Z, G): _entry("1", "0 0 1 0", "0 1 0 0", "1 0 0 0", "0 0 0 1"),
    (Z, H): _entry("1", "1 0 0 0", "0 0 0 1", "0 0 1 0", "0 1 0 0"),
    (Z, A): _entry("1", "1 0 0 0", "0 0 1 0", "0 1 0 0", "0 0 0 -1"),
    (Z, S): _entry("k", "1 0 -Z0 0", "0 1 0 -Z0", "1 0 Z0 0", "0 1 0 Z0"),
    (Z, T): _entry("k", "0 1 0 -Z0", "0 1 0 Z0", "1 0 Z0 0", "1 0 -Z0 0"),
    # from G
    (G, Y): _entry("1", "1 0 0 0", "0 0 0 1", "0 0 1 0", "0 1 0 0"),
    (G, Z): _entry("1", "0 0 1 0", "0 1 0 0", "1 0 0 0", "0 0 0 1"),
    (G, H): _entry("1", "0 0 1 0", "0 0 0 1", "1 0 0 0", "0 1 0 0"),
    (G, A): _entry("1", "0 0 1 0", "1 0 0 0", "0 1 0 0", "0 0 0 -1"),
    (G, S): _entry("k", "-Z0 0 1 0", "0 1 0 -Z0", "Z0 0 1 0", "0 1 0 Z0"),
    (G, T): _entry("k", "0 1 0 -Z0", "0 1 0 Z0", "Z0 0 1 0", "-Z0 0 1 0"),
    # from H
    (H, Y): _entry("1", "0 0 1 0", "0 1 0 0", "1 0 0 0", "0 0 0 1"),
    (H, Z): _entry("1", "1 0 0 0", "0 0 0 1", "0 0 1 0", "0 1 0 0"),
    (H, G): _entry("1", "0 0 1 0", "0 0 0 1", "1 0 0 0", "0 1 0 0"),
    (H, A): _entry("1", "1 0 0 0", "0 0 1 0", "0 0 0 1", "0 -1 0 0"),
    (H, S): _entry("k", "1 0 -Z0 0", "0 -Z0 0 1", "1 0 Z0 0", "0 Z0 0 1"),
    (H, T): _entry("k", "0 -Z0 0 1", "0 Z0 0 1", "1 0 Z0 0", "1 0 -Z0 0"),
    # from A
    (A, Y): _entry("1", "0 1 0 0", "0 0 0 -1", "1 0 0 0", "0 0 1 0"),
    (A, Z): _entry("1", "1 0 0 0", "0 0 1 0", "0 1 0 0", "0 0 0 -1"),
    (A, G): _entry("1", "0 1 0 0", "0 0 1 0", "1 0 0 0", "0 0 0 -1"),
    (A, H): _entry("1", "1 0 0 0", "0 0 0 -1", "0 1 0 0", "0 0 1 0"),
    (A, S): _entry("k", "1 -Z0 0 0", "0 0 1 Z0", "1 Z0 0 0", "0 0 1 -Z0"),
    (A, T): _entry("k", "0 0 1 Z0", "0 0 1 -Z0", "1 Z0 0 0", "1 -Z0 0 0"),
    # from S
    (S, Y): _entry("1/2k", "-Y0 0 Y0 0", "0 -Y0 0 Y0", "1 0 1 0", "0 1 0 1"),
    (S, Z): _entry("1/2k", "1 0 1 0", "0 1 0 1", "-Y0 0 Y0 0", "0 -Y0 0 Y0"),
    (S, G): _entry("1/2k", "-Y0 0 Y0 0", "0 1 0 1", "1 0 1 0", "0 -Y0 0 Y0"),
    (S, H): _entry("1", "1 0 1 0", "0 -Y0 0 Y0", "-Y0 0 Y0 0", "0 1 0 1"),
    (S, A): _entry("1/2k", "1 0 1 0", "-Y0 0 Y0 0", "0 1 0 1", "0 Y0 0 -Y0"),
    (S, T): _entry("1", "0 1 0 0", "0 0 0 1", "0 0 1 0", "1 0 0 0"),
    # from T
    (T, Y): _entry("1/2k", "0 0 Y0 -Y0", "-Y0 Y0 0 0", "0 0 1 1", "1 1 0 0"),
    (T, Z): _entry("1/2k", "0 0 1 1", "1 1 0 0", "0 0 Y0 -Y0", "-Y0 Y0 0 0"),
    (T, G): _entry("1/2k", "0 0 Y0 -Y0", "1 1 0 0", "0 0 1 1", "-Y0 Y0 0 0"),
    (T, H): _entry("1/2k", "0 0 1 1", "-Y0 Y0 0 0", "0 0 Y0 -Y0", "1 1 0 0"),
    (T, A): _entry("1/2k", "0 0 1 1", "0 0 Y0 -Y0", "1 1 0 0", "Y0 -Y0 0 0"),
    (T, S): _entry("1", "0 0 0 1", "1 0 0 0", "0 0 1 0", "0 1 0 0"),
}

# Worked examples printed next to the derivation.
BOXED_EXAMPLES: dict[tuple[Representation, Representation], PrintedEntry] = {
    (Z, G): _entry("1", "0 0 1 0", "0 1 0 0", "1 0 0 0", "0 0 0 1"),
    (S, Y): _entry("1/2k", "Y0 0 Y0 0", "0 Y0 0 Y0", "1 0 1 0", "0 1 0 1"),
}


def evaluate(entry: PrintedEntry, z0: complex, k: complex) -> np.ndarray:
    """Numeric 4x4 matrix of a printed entry for one reference impedance and k."""
    symbols = {"0": 0, "1": 1, "-1": -1, "Z0": z0, "-Z0": -z0, "Y0": 1 / z0, "-Y0": -1 / z0}
    prefactor = {"1": 1, "k": k, "1/2k": 1 / (2 * k)}[entry.prefactor]
    matrix = np.array([[symbols[s] for s in row] for row in entry.rows], dtype=np.complex128)
    return prefactor * matrix
