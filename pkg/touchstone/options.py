"""
Touchstone v1 option line:

    # <frequency unit> <parameter> <format> R <resistance>

Tokens are case-insensitive and may come in any order; missing ones take
the defaults HZ S MA R 50.
"""

from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.types import Representation
from touchstone.errors import MalformedOptionLine
from utils.constants import TOUCHSTONE_UNITS


class FreqUnit(str, Enum):
    HZ = "HZ"
    KHZ = "KHZ"
    MHZ = "MHZ"
    GHZ = "GHZ"

    @property
    def scale(self) -> float:
        """Hz per unit."""
        return TOUCHSTONE_UNITS.SCALE[self.value]


class Param(str, Enum):
    S = "S"
    Y = "Y"
    Z = "Z"
    G = "G"
    H = "H"

    @property
    def representation(self) -> Representation:
        return Representation(self.value)


class DataFormat(str, Enum):
    RI = "RI"
    MA = "MA"
    DB = "DB"


class TouchstoneOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    freq_unit: FreqUnit = FreqUnit(TOUCHSTONE_UNITS.DEFAULT_UNIT)
    param: Param = Param(TOUCHSTONE_UNITS.DEFAULT_PARAM)
    format: DataFormat = DataFormat(TOUCHSTONE_UNITS.DEFAULT_FORMAT)
    resistance: float = Field(TOUCHSTONE_UNITS.DEFAULT_RESISTANCE, gt=0, allow_inf_nan=False)

    @classmethod
    def from_line(cls, line: str) -> TouchstoneOptions:
        """Parse an option line, with or without its leading ``#``."""
        tokens = line.strip().lstrip("#").split()
        found: dict[str, object] = {}

        def put(key: str, value: object, token: str) -> None:
            if key in found:
                raise MalformedOptionLine(f"option line sets {key} twice (at {token!r}): {line.strip()!r}")
            found[key] = value

        position = 0
        while position < len(tokens):
            token = tokens[position].upper()
            if token in FreqUnit.__members__:
                put("freq_unit", FreqUnit(token), token)
            elif token in Param.__members__:
                put("param", Param(token), token)
            elif token in DataFormat.__members__:
                put("format", DataFormat(token), token)
            elif token == "R":
                if position + 1 >= len(tokens):
                    raise MalformedOptionLine(f"R without a resistance value: {line.strip()!r}")
                position += 1
                try:
                    resistance = float(tokens[position])
                except ValueError as e:
                    raise MalformedOptionLine(f"bad resistance {tokens[position]!r}") from e
                if not np.isfinite(resistance) or resistance <= 0:
                    raise MalformedOptionLine(f"resistance must be a positive number, got {tokens[position]!r}")
                put("resistance", resistance, token)
            else:
                raise MalformedOptionLine(f"unknown option token {tokens[position]!r}")
            position += 1
        return cls(**found)

    def to_line(self) -> str:
        resistance = np.format_float_positional(self.resistance, unique=True, trim="-")
        return f"# {self.freq_unit.value} {self.param.value} {self.format.value} R {resistance}"
