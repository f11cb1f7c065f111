"""
Fixed constants: tolerances that are not user-tunable, Touchstone units and CLI exit codes.
Tunable thresholds live in config/settings.py.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Tolerances:
    """Tolerances that belong to the definitions rather than to configuration."""
    ALPHA_MODULUS: float = 1e-12
    SAMPLE_CONSISTENCY: float = 1e-12
    FREQUENCY_MATCH: float = 1e-12
    PRINTED_MATCH: float = 1e-12
    MIN_MAGNITUDE: float = 1e-30


@dataclass(frozen=True)
class TouchstoneUnits:
    """Frequency multipliers for the Touchstone v1 option line."""
    SCALE: dict[str, float] = field(
        default_factory=lambda: {"HZ": 1.0, "KHZ": 1e3, "MHZ": 1e6, "GHZ": 1e9}
    )
    DEFAULT_UNIT: str = "HZ"
    DEFAULT_PARAM: str = "S"
    DEFAULT_FORMAT: str = "MA"
    DEFAULT_RESISTANCE: float = 50.0
    GENERATOR: str = "netconv"
    SIGNIFICANT_DIGITS: int = 10


@dataclass(frozen=True)
class ExitCodes:
    """Process exit statuses of the command-line tool."""
    OK: int = 0
    INPUT_ERROR: int = 1
    SINGULAR: int = 2
    SELFTEST_FAILED: int = 3


# Create singleton instances
TOLERANCES = Tolerances()
TOUCHSTONE_UNITS = TouchstoneUnits()
EXIT_CODES = ExitCodes()
