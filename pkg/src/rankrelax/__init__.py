"""Low-rank matrix recovery with combined singular-value weights and rank costs."""

from .bench import (
    ExperimentSpec,
    ResultRecord,
    datafit,
    gen_instance,
    instance_weights,
    mask_tracking,
    mask_uniform,
    normalized_distance,
    run_sweep,
    write_results_csv,
)
from .envelope import (
    SegmentSolve,
    eval_Rh,
    eval_envelope,
    fenchel_conjugate,
    maximizing_spectrum,
    segment_max,
    unconstrained_maximizers,
)
from .linalg import SvdFactors, compose, svd
from .penalty import (
    InvalidWeightsError,
    PenaltyWeights,
    eval_h,
    heuristic_weights,
    make_weights,
    preset,
    shrink_spectrum,
)
from .proximal import prox_Rh, prox_envelope, prox_spectrum, prox_unconstrained
from .solver import (
    AdmmConfig,
    AdmmDiagnostics,
    MaskedObservations,
    admm_complete,
    data_update,
    solve_objective,
)

__all__ = [
    "AdmmConfig",
    "AdmmDiagnostics",
    "ExperimentSpec",
    "InvalidWeightsError",
    "MaskedObservations",
    "PenaltyWeights",
    "ResultRecord",
    "SegmentSolve",
    "SvdFactors",
    "admm_complete",
    "compose",
    "data_update",
    "datafit",
    "eval_Rh",
    "eval_envelope",
    "eval_h",
    "fenchel_conjugate",
    "gen_instance",
    "heuristic_weights",
    "instance_weights",
    "make_weights",
    "mask_tracking",
    "mask_uniform",
    "maximizing_spectrum",
    "normalized_distance",
    "preset",
    "prox_Rh",
    "prox_envelope",
    "prox_spectrum",
    "prox_unconstrained",
    "run_sweep",
    "segment_max",
    "shrink_spectrum",
    "solve_objective",
    "svd",
    "unconstrained_maximizers",
    "write_results_csv",
]
