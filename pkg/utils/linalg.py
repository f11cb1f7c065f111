"""Small numpy helpers shared by the conversion engine and the oracle."""

import numpy as np


def reciprocal_condition(matrix: np.ndarray) -> float:
    """Ratio of smallest to largest singular value; 0.0 for a zero or empty matrix."""
    if matrix.size == 0:
        return 0.0
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    largest = singular_values[0]
    if largest == 0 or not np.isfinite(largest):
        return 0.0
    return float(singular_values[-1] / largest)


def relative_deviation(actual: np.ndarray, expected: np.ndarray) -> float:
    """Frobenius-norm distance relative to ``expected`` (absolute when ``expected`` is zero)."""
    scale = np.linalg.norm(expected)
    distance = np.linalg.norm(np.asarray(actual) - np.asarray(expected))
    return float(distance / scale) if scale > 0 else float(distance)
