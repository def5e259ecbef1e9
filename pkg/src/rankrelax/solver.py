"""ADMM solver for masked low-rank completion with the relaxed penalty.

Minimizes  R_h(sing(X)) + ||W . (X - M)||_F^2  by splitting the penalty
and the data term: the X-update is the spectral prox, the Y-update has
an elementwise closed form, and the scaled dual accumulates the gap.
"""

from dataclasses import dataclass, field

import numpy as np

from .envelope import eval_Rh
from .linalg import check_matrix, svd
from .proximal import prox_Rh

__all__ = [
    "MaskedObservations",
    "AdmmConfig",
    "AdmmDiagnostics",
    "data_update",
    "solve_objective",
    "admm_complete",
]

# relative-objective stall is measured across this many iterations
_STALL_WINDOW = 10


@dataclass(frozen=True)
class MaskedObservations:
    """Measurements m with a same-shape 0/1 mask w (1 = observed)."""

    m: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        m = check_matrix(self.m)
        w = check_matrix(self.w)
        if m.shape != w.shape:
            raise ValueError("measurements and mask must have the same shape")
        if not np.all((w == 0) | (w == 1)):
            raise ValueError("mask entries must be 0 or 1")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "w", w)


@dataclass(frozen=True)
class AdmmConfig:
    rho: float = 1.5
    max_iters: int = 500
    primal_tol: float = 1e-8
    rel_obj_tol: float = 1e-10

    def __post_init__(self):
        if self.rho <= 1.0:
            raise ValueError("rho must exceed 1 (prox subproblem convexity)")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")
        if self.primal_tol <= 0 or self.rel_obj_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass
class AdmmDiagnostics:
    iterations: int = 0
    objective_trace: list = field(default_factory=list)
    primal_residual_trace: list = field(default_factory=list)
    converged: bool = False


def data_update(t, obs, rho):
    """Elementwise minimizer of rho*||Y - t||^2 + ||W . (Y - M)||^2."""
    t = check_matrix(t)
    if t.shape != obs.m.shape:
        raise ValueError("shape mismatch with observations")
    return (rho * t + obs.w * obs.m) / (rho + obs.w)


def solve_objective(x, obs, w):
    """Relaxed completion objective: envelope penalty plus masked datafit."""
    x = check_matrix(x)
    if x.shape != obs.m.shape:
        raise ValueError("shape mismatch with observations")
    return eval_Rh(svd(x).spectrum, w) + float(np.sum((obs.w * (x - obs.m)) ** 2))


def admm_complete(obs, w, cfg=None):
    """Run ADMM on the masked completion problem.

    Returns the data-consistent iterate Y together with per-iteration
    diagnostics. Initialization is X = Y = dual = 0, so runs are
    deterministic.
    """
    if cfg is None:
        cfg = AdmmConfig()
    shape = obs.m.shape
    y = np.zeros(shape)
    lam = np.zeros(shape)
    diag = AdmmDiagnostics()
    for it in range(cfg.max_iters):
        x = prox_Rh(y - lam, w, cfg.rho)
        y = data_update(x + lam, obs, cfg.rho)
        lam = lam + x - y
        residual = float(np.linalg.norm(x - y))
        objective = solve_objective(y, obs, w)
        diag.primal_residual_trace.append(residual)
        diag.objective_trace.append(objective)
        diag.iterations = it + 1
        if residual <= cfg.primal_tol:
            diag.converged = True
            break
        if it >= _STALL_WINDOW:
            prev = diag.objective_trace[-1 - _STALL_WINDOW]
            if abs(objective - prev) <= cfg.rel_obj_tol * (1.0 + abs(objective)):
                diag.converged = True
                break
    return y, diag
