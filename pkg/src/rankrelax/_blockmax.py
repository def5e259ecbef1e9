"""Exact maximization of separable piecewise-quadratic concave objectives.

Each index i carries a concave scalar function with a single breakpoint
t_i: one quadratic (A, B, C) below t_i, another at and above it. Block
sums are therefore piecewise quadratic with at most |block| breakpoints,
so the maximum over an interval is found exactly by enumerating pieces
and closed-form vertices. The monotone-cone maximization merges adjacent
blocks pool-adjacent-violators style: each merged block is re-solved
over [0, inf) and carries one constant value.
"""

import numpy as np



def piece_argmax(thresholds, below, above, idx, lo, hi):
    """Maximize the block sum over [lo, hi]; returns (argmax, value).

    Pieces are enumerated via prefix sums in threshold order; candidates
    (piece endpoints and interior vertices) are evaluated in ascending
    order so flat stretches resolve to their left end deterministically.
    """
    idx = np.asarray(idx, dtype=int)
    if idx.size == 0:
        raise ValueError("empty block")
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    t = thresholds[idx]
    cuts = np.unique(t[(t > lo) & (t < hi)])
    edges = np.concatenate(([lo], cuts, [hi]))
    lefts, rights = edges[:-1], edges[1:]

    # coefficient sums per piece: start from all-below, swap to above as
    # each threshold is passed
    order = np.argsort(t, kind="stable")
    delta = (above[idx] - below[idx])[order]
    prefix = np.vstack([np.zeros(3), np.cumsum(delta, axis=0)])
    n_above = np.searchsorted(t[order], lefts, side="right")
    coeffs = below[idx].sum(axis=0) + prefix[n_above]  # (pieces, 3)
    a2, a1, a0 = coeffs[:, 0], coeffs[:, 1], coeffs[:, 2]

    with np.errstate(divide="ignore", invalid="ignore"):
        vertex = np.where(a2 < 0, -a1 / (2.0 * a2), np.nan)
    vertex = np.where((vertex > lefts) & (vertex < rights), vertex, np.nan)
    cands = np.stack([lefts, vertex, np.where(np.isfinite(rights), rights, np.nan)])
    vals = (a2 * cands + a1) * cands + a0
    flat = np.column_stack([cands.T.ravel(), vals.T.ravel()])
    flat = flat[~np.isnan(flat[:, 0])]
    best = int(np.argmax(flat[:, 1]))  # first max: leftmost in scan order
    return float(flat[best, 0]), float(flat[best, 1])


def monotone_argmax(thresholds, below, above, init=None):
    """Maximize the separable sum over the non-increasing non-negative cone.

    Standard pool-adjacent-violators scheme: start from per-index
    maximizers over [0, inf); whenever adjacent block values violate the
    ordering, merge the blocks and re-solve the union. `init` may supply
    the per-index maximizers in closed form to skip the singleton solves.
    """
    k = thresholds.shape[0]
    blocks = []  # (start, end inclusive, value)
    for i in range(k):
        start = i
        if init is not None:
            s = init[i]
        else:
            s, _ = piece_argmax(
                thresholds, below, above, np.arange(i, i + 1), 0.0, np.inf
            )
        while blocks and blocks[-1][2] < s:
            start = blocks[-1][0]
            blocks.pop()
            s, _ = piece_argmax(
                thresholds, below, above, np.arange(start, i + 1), 0.0, np.inf
            )
        blocks.append((start, i, s))
    out = np.empty(k)
    for start, end, s in blocks:
        out[start : end + 1] = s
    return out
