"""
Domain value types: representations, wave conventions, port normalizations,
signal descriptors and frequency-swept networks.

All models are frozen; matrices are read-only complex128 arrays.
"""

from __future__ import annotations

import cmath
import logging
from enum import Enum
from typing import Annotated, Any

import numpy as np
from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, field_validator, model_validator

from core.errors import NonFiniteValue, NonPositiveRealPart, PortCountMismatch
from utils.constants import TOLERANCES

logger = logging.getLogger(__name__)


def as_complex_scalar(value: Any) -> complex:
    """Coerce to a finite Python complex."""
    try:
        z = complex(value)
    except (TypeError, ValueError) as e:
        raise NonFiniteValue(f"not a complex number: {value!r}") from e
    if not cmath.isfinite(z):
        raise NonFiniteValue(f"non-finite complex value: {z}")
    return z


def as_complex_matrix(values: Any) -> np.ndarray:
    """Copy into a read-only 2-D complex128 array, rejecting NaN and Inf."""
    matrix = np.array(values, dtype=np.complex128)
    if matrix.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteValue("matrix contains NaN or Inf entries")
    matrix.setflags(write=False)
    return matrix


ComplexMatrix = Annotated[np.ndarray, BeforeValidator(as_complex_matrix)]
ComplexScalar = Annotated[complex, BeforeValidator(as_complex_scalar)]


class Representation(str, Enum):
    """The eight network parameter sets."""

    Z = "Z"
    Y = "Y"
    G = "G"
    H = "H"
    A = "A"
    B = "B"
    S = "S"
    T = "T"

    @property
    def two_port_only(self) -> bool:
        return self in _TWO_PORT_ONLY

    @property
    def is_wave_based(self) -> bool:
        return self in (Representation.S, Representation.T)

    def supports(self, n_ports: int) -> bool:
        if n_ports < 1:
            return False
        return n_ports == 2 if self.two_port_only else True

    def require_ports(self, n_ports: int) -> None:
        if not self.supports(n_ports):
            raise PortCountMismatch(
                f"{self.value} parameters need exactly 2 ports, got {n_ports}"
                if self.two_port_only
                else f"{self.value} parameters need at least 1 port, got {n_ports}"
            )

    @classmethod
    def parse(cls, text: str) -> Representation:
        """Case-insensitive lookup, e.g. ``"s"`` -> ``Representation.S``."""
        try:
            return cls(text.strip().upper())
        except ValueError as e:
            choices = ", ".join(r.value for r in cls)
            raise ValueError(f"unknown representation {text!r} (choose from {choices})") from e


_TWO_PORT_ONLY = frozenset(
    {Representation.G, Representation.H, Representation.A, Representation.B, Representation.T}
)


class WaveKind(str, Enum):
    """Which printed formula defines the wave scaling constant k."""

    KUROKAWA = "kurokawa"
    TRAVELING = "traveling"


class WaveConvention(BaseModel):
    """Wave definition: the k formula and, for TRAVELING, the unit phase alpha."""

    model_config = ConfigDict(frozen=True)

    kind: WaveKind = WaveKind.KUROKAWA
    alpha: ComplexScalar = 1 + 0j

    @field_validator("alpha")
    @classmethod
    def _unit_modulus(cls, alpha: complex) -> complex:
        if abs(abs(alpha) - 1.0) > TOLERANCES.ALPHA_MODULUS:
            raise ValueError(f"alpha must have modulus 1, got |alpha| = {abs(alpha)!r}")
        return alpha

    @classmethod
    def traveling(cls, alpha: complex = 1 + 0j) -> WaveConvention:
        return cls(kind=WaveKind.TRAVELING, alpha=alpha)

    @classmethod
    def from_name(cls, name: str, alpha: complex = 1 + 0j) -> WaveConvention:
        return cls(kind=WaveKind(name.strip().lower()), alpha=alpha)


class PortNormalization(BaseModel):
    """Per-port reference impedances in ohm; Y0 = 1/Z0 is derived on demand."""

    model_config = ConfigDict(frozen=True)

    z0: tuple[ComplexScalar, ...] = Field(min_length=1)

    @field_validator("z0")
    @classmethod
    def _positive_real_parts(cls, z0: tuple[complex, ...]) -> tuple[complex, ...]:
        for port, z in enumerate(z0, start=1):
            if z.real <= 0:
                raise NonPositiveRealPart(f"port {port}: Re{{z0}} must be > 0, got {z}")
        return z0

    @classmethod
    def uniform(cls, z0: complex, n_ports: int) -> PortNormalization:
        return cls(z0=(z0,) * n_ports)

    @property
    def n_ports(self) -> int:
        return len(self.z0)

    @property
    def y0(self) -> tuple[complex, ...]:
        return tuple(1 / z for z in self.z0)

    @property
    def is_uniform(self) -> bool:
        return all(z == self.z0[0] for z in self.z0)

    @property
    def is_real(self) -> bool:
        return all(z.imag == 0 for z in self.z0)


class SignalKind(str, Enum):
    """Port signal families: voltage, inward current, incident and reflected wave."""

    V = "V"
    I = "I"  # noqa: E741
    A = "A"
    B = "B"

    @property
    def is_wave(self) -> bool:
        return self in (SignalKind.A, SignalKind.B)


class SignalRef(BaseModel):
    """One signed port signal, e.g. ``-I2`` is ``SignalRef(kind=I, port=2, sign=-1)``."""

    model_config = ConfigDict(frozen=True)

    kind: SignalKind
    port: int = Field(ge=1)
    sign: int = 1

    @field_validator("sign")
    @classmethod
    def _unit_sign(cls, sign: int) -> int:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        return sign

    def __str__(self) -> str:
        return f"{'-' if self.sign < 0 else ''}{self.kind.value}{self.port}"


class RepresentationDescriptor(BaseModel):
    """Ordered output and input signal lists of a representation: O = R U."""

    model_config = ConfigDict(frozen=True)

    outputs: tuple[SignalRef, ...]
    inputs: tuple[SignalRef, ...]

    @model_validator(mode="after")
    def _consistent(self) -> RepresentationDescriptor:
        n = len(self.outputs)
        if n == 0 or len(self.inputs) != n:
            raise ValueError("outputs and inputs must be non-empty and of equal length")
        signals = self.outputs + self.inputs
        unsigned = [(s.kind, s.port) for s in signals]
        if len(set(unsigned)) != len(unsigned):
            raise ValueError(f"duplicate signal in descriptor: {[str(s) for s in signals]}")
        for port in range(1, n + 1):
            kinds = {s.kind for s in signals if s.port == port}
            if kinds not in ({SignalKind.V, SignalKind.I}, {SignalKind.A, SignalKind.B}):
                raise ValueError(f"port {port} is not described by a complete V/I or A/B pair")
        return self

    @property
    def n_ports(self) -> int:
        return len(self.outputs)

    @property
    def stacked(self) -> tuple[SignalRef, ...]:
        return self.outputs + self.inputs


class NetworkPoint(BaseModel):
    """One frequency sample of a network in some representation."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    frequency: float = Field(ge=0, allow_inf_nan=False)
    rep: Representation
    matrix: ComplexMatrix
    norm: PortNormalization
    convention: WaveConvention = WaveConvention()

    @model_validator(mode="after")
    def _shape_matches(self) -> NetworkPoint:
        rows, cols = self.matrix.shape
        if rows != cols:
            raise ValueError(f"{self.rep.value} matrix must be square, got {rows}x{cols}")
        if self.norm.n_ports != rows:
            raise ValueError(f"normalization has {self.norm.n_ports} ports, matrix has {rows}")
        self.rep.require_ports(rows)
        return self

    @property
    def n_ports(self) -> int:
        return self.matrix.shape[0]

    def with_matrix(self, rep: Representation, matrix: Any) -> NetworkPoint:
        """Same frequency, normalization and convention with new data."""
        return NetworkPoint(
            frequency=self.frequency,
            rep=rep,
            matrix=matrix,
            norm=self.norm,
            convention=self.convention,
        )


class NetworkSweep(BaseModel):
    """Points in strictly increasing frequency with uniform ports, rep, norm and convention."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: tuple[NetworkPoint, ...] = ()

    @model_validator(mode="after")
    def _uniform(self) -> NetworkSweep:
        if not self.points:
            return self
        first = self.points[0]
        for previous, point in zip(self.points, self.points[1:]):
            if not point.frequency > previous.frequency:
                raise ValueError(
                    f"frequencies must strictly increase: {previous.frequency} then {point.frequency}"
                )
        for point in self.points[1:]:
            if (point.rep, point.n_ports) != (first.rep, first.n_ports):
                raise ValueError("all points of a sweep must share representation and port count")
            if point.norm != first.norm or point.convention != first.convention:
                raise ValueError("all points of a sweep must share normalization and convention")
        return self

    def __len__(self) -> int:
        return len(self.points)

    @property
    def frequencies(self) -> np.ndarray:
        return np.array([p.frequency for p in self.points], dtype=float)

    @property
    def rep(self) -> Representation | None:
        return self.points[0].rep if self.points else None

    @property
    def n_ports(self) -> int | None:
        return self.points[0].n_ports if self.points else None

    @property
    def norm(self) -> PortNormalization | None:
        return self.points[0].norm if self.points else None

    @property
    def convention(self) -> WaveConvention | None:
        return self.points[0].convention if self.points else None


