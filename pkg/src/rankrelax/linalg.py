"""Dense-matrix and SVD backend used by every other module.

All matrices are plain 2D float ndarrays. The thin SVD (k = min(m, n))
is used everywhere; sign/rotation ambiguity of the factors is accepted
since downstream code only consumes the spectrum or the composed matrix.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["SvdFactors", "svd", "compose", "check_matrix"]


@dataclass(frozen=True)
class SvdFactors:
    """Thin SVD factors: u (m x k), spectrum (k,), v (n x k)."""

    u: np.ndarray
    spectrum: np.ndarray
    v: np.ndarray


def check_matrix(x):
    """Coerce to a finite 2D float array, raising ValueError otherwise."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.size == 0:
        raise ValueError("expected a non-empty 2D matrix, got shape %s" % (x.shape,))
    if not np.all(np.isfinite(x)):
        raise ValueError("matrix contains non-finite entries")
    return x


def svd(x):
    """Thin singular value decomposition of a dense matrix.

    Returns
    -------
    SvdFactors
        Orthonormal u, v and the non-increasing, non-negative spectrum.
    """
    x = check_matrix(x)
    u, s, vt = np.linalg.svd(x, full_matrices=False)
    return SvdFactors(u=u, spectrum=s, v=vt.T)


def compose(u, spectrum, v):
    """Form u @ diag(spectrum) @ v.T, validating shapes."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    spectrum = np.asarray(spectrum, dtype=float)
    if u.ndim != 2 or v.ndim != 2 or spectrum.ndim != 1:
        raise ValueError("compose expects 2D factors and a 1D spectrum")
    k = spectrum.shape[0]
    if u.shape[1] != k or v.shape[1] != k:
        raise ValueError(
            "shape mismatch: u %s, v %s, spectrum length %d" % (u.shape, v.shape, k)
        )
    return (u * spectrum) @ v.T
