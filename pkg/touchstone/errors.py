"""Touchstone and CSV format errors."""

from core.errors import NetconvError


class TouchstoneError(NetconvError):
    """Base class for file format failures."""

    reason = "touchstone-error"


class MalformedOptionLine(TouchstoneError):
    reason = "malformed-option-line"


class NonMonotonicFrequency(TouchstoneError):
    reason = "non-monotonic-frequency"


class DataCountMismatch(TouchstoneError):
    """A frequency record does not hold exactly 2 N^2 values."""

    reason = "data-count-mismatch"


class UnsupportedVersionKeyword(TouchstoneError):
    """Touchstone v2 ``[Keyword]`` lines are not read."""

    reason = "unsupported-version-keyword"


class UnsupportedRepresentation(TouchstoneError):
    """Touchstone v1 only carries S, Y, Z, G and H data."""

    reason = "unsupported-representation"


class NormalizationMismatch(TouchstoneError):
    """The sweep's reference impedances cannot be expressed by the option line's R."""

    reason = "normalization-mismatch"


class MalformedCsv(TouchstoneError):
    reason = "malformed-csv"


class InvalidNetworkData(TouchstoneError):
    """File values parse as numbers but do not form a valid network point."""

    reason = "invalid-input"
