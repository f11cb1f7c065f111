"""Validated command-line configuration."""

from __future__ import annotations

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import settings
from core.errors import PortCountMismatch
from core.types import PortNormalization, Representation, WaveConvention, WaveKind
from oracle.verification import PairSpec
from touchstone.options import DataFormat


class Command(str, Enum):
    CONVERT = "convert"
    SHOW = "show"
    CASCADE = "cascade"
    SELFTEST = "selftest"


def parse_z0_list(text: str) -> tuple[complex, ...]:
    """``"50"``, ``"50+10j"`` or a comma-separated per-port list."""
    values = []
    for part in text.split(","):
        part = part.strip().replace(" ", "")
        if not part:
            raise ValueError(f"empty entry in z0 list {text!r}")
        values.append(complex(part))
    return tuple(values)


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    inputs: tuple[Path, ...] = ()
    output: Path | None = None
    target_rep: Representation | None = None
    z0: tuple[complex, ...] | None = None
    convention: WaveKind = WaveKind(settings.default_convention)
    alpha: complex = 1 + 0j
    format: DataFormat = DataFormat(settings.touchstone_format)
    pairs: tuple[PairSpec, ...] | None = None
    seed: int | None = None
    trials: int | None = Field(None, ge=1)

    @model_validator(mode="after")
    def _consistent_with_command(self) -> CliConfig:
        count = len(self.inputs)
        if self.command is Command.CONVERT:
            if self.target_rep is None:
                raise ValueError("convert needs --to")
            if count != 1:
                raise ValueError(f"convert takes one input file, got {count}")
        elif self.command is Command.SHOW and count != 1:
            raise ValueError(f"show takes one input file, got {count}")
        elif self.command is Command.CASCADE and count < 2:
            raise ValueError(f"cascade needs at least two input files, got {count}")
        elif self.command is Command.SELFTEST and count:
            raise ValueError("selftest takes no input files")
        if self.command is not Command.SELFTEST and (self.pairs or self.seed is not None or self.trials):
            raise ValueError("--pairs, --seed and --trials only apply to selftest")
        if self.convention is WaveKind.KUROKAWA and self.alpha != 1:
            raise ValueError("--alpha only applies to the traveling convention")
        return self

    @property
    def wave_convention(self) -> WaveConvention:
        return WaveConvention(kind=self.convention, alpha=self.alpha)

    def normalization(self, n_ports: int) -> PortNormalization | None:
        """Requested reference impedances for ``n_ports`` ports, or None to keep the file's."""
        if self.z0 is None:
            return None
        if len(self.z0) == 1:
            return PortNormalization.uniform(self.z0[0], n_ports)
        if len(self.z0) != n_ports:
            raise PortCountMismatch(f"--z0 lists {len(self.z0)} impedances for a {n_ports}-port")
        return PortNormalization(z0=self.z0)
