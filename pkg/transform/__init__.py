"""Transformation matrices, the linear fractional conversion and two-port chaining."""

from transform.chain import a_to_b, b_to_a, cascade, cascade_sweeps
from transform.engine import convert, convert_sweep, moebius, renormalize
from transform.stacking import TransformMatrix, build_p, stacking_matrix

__all__ = [
    "TransformMatrix", "a_to_b", "b_to_a", "build_p", "cascade", "cascade_sweeps",
    "convert", "convert_sweep", "moebius", "renormalize", "stacking_matrix",
]
