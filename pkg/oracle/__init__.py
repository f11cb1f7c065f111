"""Independent checks of the conversion engine: sampling oracle, textbook formulas, table verification."""

from oracle.closed_form import SUPPORTED_PAIRS, closed_form_convert
from oracle.fitting import FitResult, fit_representation
from oracle.sampling import PortSignalSample, sample_network
from oracle.verification import (
    PairVerification,
    Verdict,
    VerificationReport,
    default_pairs,
    parse_pair,
    verify_all,
    verify_table_entry,
)

__all__ = [
    "FitResult", "PairVerification", "PortSignalSample", "SUPPORTED_PAIRS", "Verdict",
    "VerificationReport", "closed_form_convert", "default_pairs", "fit_representation",
    "parse_pair", "sample_network", "verify_all", "verify_table_entry",
]
