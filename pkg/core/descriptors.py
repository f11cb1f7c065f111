"""Ordered signal lists that define each representation as O = R U."""

from __future__ import annotations

from functools import lru_cache

from core.types import Representation, RepresentationDescriptor, SignalKind, SignalRef

V, I, A, B = SignalKind.V, SignalKind.I, SignalKind.A, SignalKind.B  # noqa: E741


def _refs(*signals: tuple[SignalKind, int] | tuple[SignalKind, int, int]) -> tuple[SignalRef, ...]:
    return tuple(
        SignalRef(kind=s[0], port=s[1], sign=s[2] if len(s) == 3 else 1) for s in signals
    )


_TWO_PORT = {
    Representation.G: (_refs((I, 1), (V, 2)), _refs((V, 1), (I, 2))),
    Representation.H: (_refs((V, 1), (I, 2)), _refs((I, 1), (V, 2))),
    Representation.A: (_refs((V, 1), (I, 1)), _refs((V, 2), (I, 2, -1))),
    Representation.B: (_refs((V, 2), (I, 2, -1)), _refs((V, 1), (I, 1))),
    Representation.T: (_refs((A, 1), (B, 1)), _refs((B, 2), (A, 2))),
}

_PER_PORT = {
    Representation.Z: (V, I),
    Representation.Y: (I, V),
    Representation.S: (B, A),
}


@lru_cache(maxsize=None)
def descriptor(rep: Representation, n_ports: int) -> RepresentationDescriptor:
    """Output and input signal lists of ``rep`` for ``n_ports`` ports.

    Raises PortCountMismatch when a two-port-only representation is asked for
    any other port count.
    """
    rep = Representation(rep)
    rep.require_ports(n_ports)
    if rep in _TWO_PORT:
        outputs, inputs = _TWO_PORT[rep]
    else:
        out_kind, in_kind = _PER_PORT[rep]
        ports = range(1, n_ports + 1)
        outputs = tuple(SignalRef(kind=out_kind, port=p) for p in ports)
        inputs = tuple(SignalRef(kind=in_kind, port=p) for p in ports)
    return RepresentationDescriptor(outputs=outputs, inputs=inputs)
