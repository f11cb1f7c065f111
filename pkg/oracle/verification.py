"""
Table verification: generated conversions against the definitional oracle,
and generated P matrices against the printed conversion table.

The oracle comparison decides pass/fail. Printed-table verdicts are
informational and end up in the erratum section of the report.
"""

from __future__ import annotations

import logging
from enum import Enum
from itertools import permutations
from typing import Iterable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from config import settings
from core.errors import RankDeficient, SingularConversion
from core.types import (
    NetworkPoint,
    PortNormalization,
    Representation,
    WaveConvention,
)
from core.waves import wave_k
from oracle.fitting import fit_representation
from oracle.printed_table import BOXED_EXAMPLES, PRINTED_TABLE, PrintedEntry, evaluate
from oracle.sampling import sample_network
from transform.engine import convert
from transform.stacking import build_p
from utils.constants import TOLERANCES
from utils.decorators import log_method
from utils.linalg import reciprocal_condition, relative_deviation

logger = logging.getLogger(__name__)

PairSpec = tuple[Representation, Representation, int]

# Resampling budget for one well-conditioned trial before it counts as skipped.
_MAX_DRAWS = 50


class Verdict(str, Enum):
    MATCH = "MATCH"
    SCALAR_MATCH = "SCALAR_MATCH"
    MISMATCH = "MISMATCH"
    ABSENT = "ABSENT"


class PairVerification(BaseModel):
    """Outcome for one ordered pair at one port count."""

    model_config = ConfigDict(frozen=True)

    source: Representation
    target: Representation
    n_ports: int = Field(ge=1)
    trials: int = Field(ge=0)
    skipped: int = Field(ge=0)
    max_deviation: float
    printed: Verdict
    printed_scale: complex | None = None
    boxed: Verdict | None = None
    boxed_scale: complex | None = None

    @property
    def passed(self) -> bool:
        return self.skipped < self.trials and self.max_deviation < settings.oracle_tolerance

    @property
    def label(self) -> str:
        return f"{self.source.value}->{self.target.value}"


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    trials: int
    entries: tuple[PairVerification, ...] = ()

    @property
    def passed(self) -> bool:
        return bool(self.entries) and all(entry.passed for entry in self.entries)

    @property
    def errata(self) -> list[str]:
        """One sentence per printed or boxed entry that is not an exact match."""
        notes = []
        for entry in self.entries:
            if entry.printed is Verdict.SCALAR_MATCH:
                notes.append(
                    f"table entry {entry.label} matches only up to the scalar "
                    f"{_format_scalar(entry.printed_scale)}"
                )
            elif entry.printed is Verdict.MISMATCH:
                notes.append(f"table entry {entry.label} disagrees with the definitions")
            if entry.boxed is Verdict.SCALAR_MATCH:
                notes.append(
                    f"worked example {entry.label} matches only up to the scalar "
                    f"{_format_scalar(entry.boxed_scale)}"
                )
            elif entry.boxed is Verdict.MISMATCH:
                notes.append(f"worked example {entry.label} disagrees with the definitions")
        return notes

    def to_text(self) -> str:
        """Human-readable table followed by the erratum section."""
        header = (
            f"{'pair':<8} {'N':>2} {'printed':<13} {'worked':<13} "
            f"{'max deviation':>14} {'skipped':>8}  oracle"
        )
        lines = [
            f"Conversion table verification (seed {self.seed}, {self.trials} trials per pair)",
            "",
            header,
            "-" * len(header),
        ]
        for entry in self.entries:
            lines.append(
                f"{entry.label:<8} {entry.n_ports:>2} {entry.printed.value:<13} "
                f"{(entry.boxed.value if entry.boxed else '-'):<13} "
                f"{entry.max_deviation:>14.3e} {entry.skipped:>8}  "
                f"{'PASS' if entry.passed else 'FAIL'}"
            )
        failed = sum(not entry.passed for entry in self.entries)
        lines += ["", f"{len(self.entries)} pair(s), {failed} failed against the oracle", ""]
        errata = self.errata
        lines.append(f"Errata ({len(errata)})")
        lines += [f"  - {note}" for note in errata] or ["  none"]
        return "\n".join(lines) + "\n"

    def to_lines(self) -> str:
        """Machine-readable form: one ``key=value`` record per pair."""
        records = []
        for entry in self.entries:
            records.append(
                " ".join([
                    f"from={entry.source.value}",
                    f"to={entry.target.value}",
                    f"ports={entry.n_ports}",
                    f"verdict={entry.printed.value}",
                    f"worked={entry.boxed.value if entry.boxed else '-'}",
                    f"max_deviation={entry.max_deviation:.6e}",
                    f"skipped={entry.skipped}",
                    f"trials={entry.trials}",
                    f"oracle={'PASS' if entry.passed else 'FAIL'}",
                ])
            )
        return "\n".join(records) + ("\n" if records else "")


def _format_scalar(value: complex | None) -> str:
    if value is None:
        return "?"
    return f"{value.real:.6g}{value.imag:+.6g}j"


def natural_scale(rep: Representation, n_ports: int, z0: float) -> np.ndarray:
    """Typical magnitude of each entry of ``rep`` for a network around ``z0`` ohm."""
    rep = Representation(rep)
    if rep is Representation.Z:
        return np.full((n_ports, n_ports), z0)
    if rep is Representation.Y:
        return np.full((n_ports, n_ports), 1 / z0)
    if rep is Representation.G:
        return np.array([[1 / z0, 1], [1, z0]])
    if rep is Representation.H:
        return np.array([[z0, 1], [1, 1 / z0]])
    if rep in (Representation.A, Representation.B):
        return np.array([[1, z0], [1 / z0, 1]])
    return np.ones((n_ports, n_ports))


def compare_printed(generated: np.ndarray, printed: np.ndarray) -> tuple[Verdict, complex | None]:
    """Verdict of a printed P against the generated one, with the best-fit scalar."""
    tolerance = TOLERANCES.PRINTED_MATCH
    if relative_deviation(printed, generated) <= tolerance:
        return Verdict.MATCH, 1 + 0j
    denominator = np.vdot(printed, printed)
    if denominator == 0:
        return Verdict.MISMATCH, None
    scale = complex(np.vdot(printed, generated) / denominator)
    if relative_deviation(scale * printed, generated) <= tolerance:
        return Verdict.SCALAR_MATCH, scale
    return Verdict.MISMATCH, None


def _printed_verdicts(
    source: Representation,
    target: Representation,
    norm: PortNormalization,
    convention: WaveConvention,
) -> dict[str, object]:
    found: dict[str, object] = {"printed": Verdict.ABSENT}
    if norm.n_ports != 2:
        return found
    z0 = norm.z0[0]
    k = wave_k(convention, z0)
    generated = build_p(source, target, norm, convention).p

    def judge(entry: PrintedEntry) -> tuple[Verdict, complex | None]:
        return compare_printed(generated, evaluate(entry, z0, k))

    if (source, target) in PRINTED_TABLE:
        found["printed"], found["printed_scale"] = judge(PRINTED_TABLE[(source, target)])
    if (source, target) in BOXED_EXAMPLES:
        found["boxed"], found["boxed_scale"] = judge(BOXED_EXAMPLES[(source, target)])
    return found


def _draw_trial(
    rng: np.random.Generator,
    source: Representation,
    target: Representation,
    norm: PortNormalization,
    convention: WaveConvention,
) -> np.ndarray | None:
    """A well-conditioned random ``source`` matrix whose ``target`` form exists, or None."""
    n = norm.n_ports
    scale = natural_scale(source, n, abs(norm.z0[0]))
    p = build_p(source, target, norm, convention)
    for _ in range(_MAX_DRAWS):
        unit = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        if reciprocal_condition(unit) <= settings.trial_rcond:
            continue
        m = scale * unit
        if reciprocal_condition(p.p21 @ m + p.p22) <= settings.trial_rcond:
            continue
        return m
    return None


def _pair_rng(seed: int, source: Representation, target: Representation, n_ports: int) -> np.random.Generator:
    order = list(Representation)
    return np.random.default_rng([seed, order.index(source), order.index(target), n_ports])


def _verify_pair(
    source: Representation,
    target: Representation,
    trials: int,
    seed: int,
    norm: PortNormalization,
    convention: WaveConvention,
) -> PairVerification:
    rng = _pair_rng(seed, source, target, norm.n_ports)
    skipped = 0
    max_deviation = 0.0
    for _ in range(trials):
        m = _draw_trial(rng, source, target, norm, convention)
        sample_seed = int(rng.integers(0, 2**31))
        if m is None:
            skipped += 1
            continue
        point = NetworkPoint(frequency=0.0, rep=source, matrix=m, norm=norm, convention=convention)
        try:
            generated = convert(point, target).matrix
            samples = sample_network(source, m, norm, convention, seed=sample_seed)
            fitted = fit_representation(samples, target, norm, convention).matrix
        except (SingularConversion, RankDeficient) as e:
            logger.debug(f"⚠️ {source.value}->{target.value} trial skipped: {e}")
            skipped += 1
            continue
        max_deviation = max(max_deviation, relative_deviation(generated, fitted))

    if skipped == trials:
        max_deviation = float("inf")
    return PairVerification(
        source=source,
        target=target,
        n_ports=norm.n_ports,
        trials=trials,
        skipped=skipped,
        max_deviation=max_deviation,
        **_printed_verdicts(source, target, norm, convention),
    )


def _default_norm(n_ports: int) -> PortNormalization:
    return PortNormalization.uniform(settings.default_z0, n_ports)


def _default_convention() -> WaveConvention:
    return WaveConvention.from_name(settings.default_convention)


@log_method
def verify_table_entry(
    source: Representation,
    target: Representation,
    trials: int,
    seed: int,
    n_ports: int = 2,
) -> VerificationReport:
    """Check one ordered pair against the oracle and the printed table."""
    source, target = Representation(source), Representation(target)
    if source is target:
        raise ValueError(f"source and target are both {source.value}")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    source.require_ports(n_ports)
    target.require_ports(n_ports)
    entry = _verify_pair(source, target, trials, seed, _default_norm(n_ports), _default_convention())
    return VerificationReport(seed=seed, trials=trials, entries=(entry,))


def default_pairs() -> list[PairSpec]:
    """All 56 ordered two-port pairs, then the Z/Y/S pairs at three and four ports."""
    pairs: list[PairSpec] = [(a, b, 2) for a, b in permutations(Representation, 2)]
    wide = (Representation.Z, Representation.Y, Representation.S)
    for n_ports in (3, 4):
        pairs += [(a, b, n_ports) for a, b in permutations(wide, 2)]
    return pairs


def parse_pair(text: str) -> PairSpec:
    """``"z:g"`` or ``"s:y:3"`` to a pair spec."""
    parts = [part.strip() for part in text.split(":")]
    if len(parts) not in (2, 3):
        raise ValueError(f"pair must look like FROM:TO or FROM:TO:N, got {text!r}")
    n_ports = int(parts[2]) if len(parts) == 3 else 2
    return Representation.parse(parts[0]), Representation.parse(parts[1]), n_ports


@log_method
def verify_all(
    pairs: Iterable[PairSpec] | None = None,
    trials: int | None = None,
    seed: int | None = None,
) -> VerificationReport:
    """Verify every pair in ``pairs`` (default: :func:`default_pairs`)."""
    trials = settings.selftest_trials if trials is None else trials
    seed = settings.selftest_seed if seed is None else seed
    convention = _default_convention()
    entries = []
    for source, target, n_ports in default_pairs() if pairs is None else pairs:
        source, target = Representation(source), Representation(target)
        if source is target:
            raise ValueError(f"source and target are both {source.value}")
        source.require_ports(n_ports)
        target.require_ports(n_ports)
        entry = _verify_pair(source, target, trials, seed, _default_norm(n_ports), convention)
        logger.info(
            f"{'✅' if entry.passed else '❌'} {entry.label} N={n_ports}: "
            f"max deviation {entry.max_deviation:.3e}, printed {entry.printed.value}"
        )
        entries.append(entry)
    return VerificationReport(seed=seed, trials=trials, entries=tuple(entries))


__all__ = [
    "PairSpec", "PairVerification", "Verdict", "VerificationReport", "compare_printed",
    "default_pairs", "natural_scale", "parse_pair", "verify_all", "verify_table_entry",
]
