"""Domain types, wave transforms and representation descriptors."""

from core.descriptors import descriptor
from core.errors import (
    IncompatiblePoints,
    NetconvError,
    NonFiniteValue,
    NonPositiveRealPart,
    PortCountMismatch,
    RankDeficient,
    SingularConversion,
    ZeroK,
)
from core.types import (
    NetworkPoint,
    NetworkSweep,
    PortNormalization,
    Representation,
    RepresentationDescriptor,
    SignalKind,
    SignalRef,
    WaveConvention,
    WaveKind,
    as_complex_matrix,
    as_complex_scalar,
)
from core.waves import vi_to_waves, wave_k, waves_to_vi

__all__ = [
    "IncompatiblePoints", "NetconvError", "NonFiniteValue", "NonPositiveRealPart",
    "PortCountMismatch", "RankDeficient", "SingularConversion", "ZeroK",
    "NetworkPoint", "NetworkSweep", "PortNormalization", "Representation",
    "RepresentationDescriptor", "SignalKind", "SignalRef", "WaveConvention", "WaveKind",
    "as_complex_matrix", "as_complex_scalar", "descriptor",
    "vi_to_waves", "wave_k", "waves_to_vi",
]
