"""
Exception hierarchy shared by every netconv module.

Each class carries a short ``reason`` slug that the command line prints as a
greppable prefix.
"""

from __future__ import annotations


class NetconvError(Exception):
    """Base class for all netconv failures."""

    reason: str = "netconv-error"


class NonFiniteValue(NetconvError):
    """A NaN or infinite value reached a public constructor."""

    reason = "non-finite-value"


class NonPositiveRealPart(NetconvError):
    """A reference impedance has Re{z0} <= 0."""

    reason = "non-positive-real-part"


class ZeroK(NetconvError):
    """Wave scaling constant k is zero, so waves cannot be turned back into V and I."""

    reason = "zero-k"


class PortCountMismatch(NetconvError):
    """A representation was requested for a port count it does not support."""

    reason = "port-count-mismatch"


class SingularConversion(NetconvError):
    """The target representation does not exist for this network."""

    reason = "singular-conversion"

    def __init__(self, message: str, frequency: float | None = None) -> None:
        self.frequency = frequency
        if frequency is not None:
            message = f"at {frequency:.12g} Hz: {message}"
        super().__init__(message)

    def at_frequency(self, frequency: float) -> SingularConversion:
        """Return a copy of this error stamped with a frequency."""
        if self.frequency is not None:
            return self
        return type(self)(str(self), frequency=frequency)


class RankDeficient(NetconvError):
    """Oracle samples cannot determine the target representation."""

    reason = "rank-deficient"


class IncompatiblePoints(NetconvError):
    """Two networks differ in frequency, normalization or convention."""

    reason = "incompatible-points"
