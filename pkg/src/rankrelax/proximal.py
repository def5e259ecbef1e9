"""Proximal operators of the relaxed penalty.

The prox subproblem reduces to the same block-merging scheme as the
envelope, with the per-index objective

    min(b_i, [s - a_i]_+^2) - ((rho+1)/rho) * (s - sy_i)^2 + s^2 - [s - a_i]_+^2,

concave whenever rho > 0. The per-index maximizer splits into three
regimes depending on where sy_i falls relative to a_i and sqrt(b_i).
"""

import numpy as np

from ._blockmax import monotone_argmax
from .envelope import _capped_root_b
from .linalg import check_matrix, compose, svd


__all__ = ["prox_unconstrained", "prox_spectrum", "prox_envelope", "prox_Rh"]


def _check_pair(sy, w, rho):
    sy = np.asarray(sy, dtype=float)
    if sy.ndim != 1 or sy.shape[0] != len(w):
        raise ValueError("spectrum and weights have different lengths")
    if np.any(~np.isfinite(sy)) or np.any(sy < 0):
        raise ValueError("spectrum entries must be finite and non-negative")
    if rho <= 0:
        raise ValueError("rho must be positive")
    return sy


def prox_unconstrained(sy, w, rho):
    """Per-index prox maximizers, ignoring the ordering constraint.

    The three regimes agree at their boundaries, so the map is
    continuous in sy.
    """
    sy = _check_pair(sy, w, rho)
    root_b = np.sqrt(w.b)
    upper = w.a / (rho + 1.0) + root_b
    lower = (w.a + root_b) / (1.0 + rho)
    return np.where(
        sy > upper,
        w.a * rho / (rho + 1.0) + sy,
        np.where(sy >= lower, w.a + root_b, (1.0 + rho) * sy),
    )


def _prox_coeffs(sy, w, rho):
    c = (rho + 1.0) / rho
    root_b = _capped_root_b(w, (1.0 + rho) * sy.max(initial=0.0))
    t = w.a + root_b
    k = sy.shape[0]
    below = np.column_stack([np.full(k, 1.0 - c), 2.0 * c * sy, -c * sy**2])
    above = np.column_stack(
        [np.full(k, -c), 2.0 * (c * sy + w.a), root_b**2 - w.a**2 - c * sy**2]
    )
    return t, below, above


def _case_maximizers(sy, a, root_b, rho):
    # same three-regime formula as prox_unconstrained, on capped sqrt(b)
    upper = a / (rho + 1.0) + root_b
    lower = (a + root_b) / (1.0 + rho)
    return np.where(
        sy > upper,
        a * rho / (rho + 1.0) + sy,
        np.where(sy >= lower, a + root_b, (1.0 + rho) * sy),
    )


def prox_spectrum(sy, w, rho):
    """Maximizing spectrum of the prox objective over the monotone cone."""
    sy = _check_pair(sy, w, rho)
    t, below, above = _prox_coeffs(sy, w, rho)
    init = _case_maximizers(sy, w.a, t - w.a, rho)
    return monotone_argmax(t, below, above, init=init)


def prox_envelope(m, x0, w, rho):
    """argmin_X of envelope(X; x0) + rho * ||X - m||_F^2.

    Solved spectrally: average y = (x0 + rho*m) / (1 + rho), take its
    SVD, run the prox block maximization on the spectrum, and map back
    through x = ((rho+1)*sigma(y) - sigma(z)) / rho on the same factors.
    """
    m = check_matrix(m)
    x0 = check_matrix(x0)
    if m.shape != x0.shape:
        raise ValueError("m and x0 must have the same shape")
    if rho <= 0:
        raise ValueError("rho must be positive")
    y = (x0 + rho * m) / (1.0 + rho)
    f = svd(y)
    sz = prox_spectrum(f.spectrum, w, rho)
    sx = ((rho + 1.0) * f.spectrum - sz) / rho
    return compose(f.u, sx, f.v)


def prox_Rh(n, w, tau):
    """argmin_X of the relaxed penalty plus tau * ||X - n||_F^2, tau > 1.

    Below strength 1 the subproblem can be non-convex, so tau <= 1 is
    rejected. Equivalent to prox_envelope(n, n, w, tau - 1).
    """
    if tau <= 1.0:
        raise ValueError("prox strength tau must exceed 1")
    return prox_envelope(n, n, w, tau - 1.0)
