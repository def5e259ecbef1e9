"""Command-line front end: synth, complete, sweep, prox subcommands.

Matrices travel as headerless CSV (one row per line); values are
printed with 17 significant digits so save/load round-trips are exact.
Exit codes: 0 success, 1 usage error, 2 numeric or I/O failure.
"""

import argparse
import sys

import numpy as np

from .bench import (
    ExperimentSpec,
    gen_instance,
    instance_weights,
    run_sweep,
    write_results_csv,
)
from .penalty import preset
from .proximal import prox_Rh
from .solver import AdmmConfig, MaskedObservations, admm_complete, solve_objective

__all__ = ["run", "main", "load_matrix", "save_matrix"]


def load_matrix(path):
    """Read a headerless CSV matrix; ragged or non-numeric input raises."""
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append([float(tok) for tok in line.split(",")])
            except ValueError as exc:
                raise ValueError("%s:%d: non-numeric token" % (path, lineno)) from exc
    if not rows:
        raise ValueError("%s: empty matrix file" % path)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("%s: ragged rows" % path)
    return np.asarray(rows, dtype=float)


def save_matrix(x, path):
    np.savetxt(path, np.atleast_2d(x), delimiter=",", fmt="%.17g")


def _load_mask(path):
    w = load_matrix(path)
    if not np.all((w == 0) | (w == 1)):
        raise ValueError("%s: mask entries must be 0 or 1" % path)
    return w


def _build_weights(args, m):
    k = min(m.shape)
    kind = args.penalty
    if kind == "nuclear":
        return preset("nuclear", k, mu=_require_mu(args))
    if kind == "rmu":
        return preset("rmu", k, mu=_require_mu(args))
    if kind == "hardrank":
        if args.rank is None:
            raise ValueError("--penalty hardrank requires --rank")
        return preset("hard_rank", k, rank=args.rank)
    if kind == "wnnm":
        if args.weights is None:
            raise ValueError("--penalty wnnm requires --weights")
        w = np.asarray([float(t) for t in args.weights.split(",")])
        return preset("wnnm", k, weights=w)
    if kind == "rh":
        return instance_weights(m, _require_mu(args))
    raise ValueError("unknown penalty %r" % kind)


def _require_mu(args):
    if args.mu is None:
        raise ValueError("--penalty %s requires --mu" % args.penalty)
    return args.mu


def _cmd_synth(args):
    spec = ExperimentSpec(
        rows=args.rows,
        cols=args.cols,
        rank=args.rank,
        noise_sigma=args.sigma,
        seed=args.seed,
    )
    m0, m = gen_instance(spec, 0)
    save_matrix(m, args.out)
    if args.gt:
        save_matrix(m0, args.gt)
    return 0


def _cmd_complete(args):
    m = load_matrix(args.matrix)
    mask = _load_mask(args.mask) if args.mask else np.ones_like(m)
    obs = MaskedObservations(m=m, w=mask)
    weights = _build_weights(args, m)
    cfg = AdmmConfig(
        rho=args.rho,
        max_iters=args.max_iters,
        primal_tol=args.primal_tol,
        rel_obj_tol=args.rel_obj_tol,
    )
    x, diag = admm_complete(obs, weights, cfg)
    save_matrix(x, args.out)
    print(
        "objective %.9g after %d iterations (converged=%s)"
        % (solve_objective(x, obs, weights), diag.iterations, diag.converged)
    )
    return 0


def _cmd_sweep(args):
    fractions = tuple(float(t) for t in args.fractions.split(","))
    mu_grid = (
        tuple(float(t) for t in args.mu_grid.split(","))
        if args.mu_grid
        else ExperimentSpec().mu_grid
    )
    spec = ExperimentSpec(
        rows=args.rows,
        cols=args.cols,
        rank=args.rank,
        noise_sigma=args.sigma,
        pattern=args.pattern,
        missing_fractions=fractions,
        instances=args.instances,
        mu_grid=mu_grid,
        seed=args.seed,
    )
    records = run_sweep(spec)
    write_results_csv(records, args.out)
    return 0


def _cmd_prox(args):
    n = load_matrix(args.matrix)
    weights = _build_weights(args, n)
    x = prox_Rh(n, weights, args.tau)
    save_matrix(x, args.out)
    return 0


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _add_penalty_flags(p):
    p.add_argument(
        "--penalty",
        required=True,
        choices=["nuclear", "wnnm", "rmu", "hardrank", "rh"],
    )
    p.add_argument("--mu", type=float)
    p.add_argument("--rank", type=int)
    p.add_argument("--weights", help="comma-separated wnnm weights")


def _build_parser():
    parser = _Parser(prog="rankrelax")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic instance")
    p.add_argument("--rows", type=int, default=32)
    p.add_argument("--cols", type=int, default=512)
    p.add_argument("--rank", type=int, default=4)
    p.add_argument("--sigma", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--gt", help="optional ground-truth output path")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("complete", help="solve a masked completion problem")
    p.add_argument("--matrix", required=True)
    p.add_argument("--mask", help="0/1 CSV mask; defaults to fully observed")
    _add_penalty_flags(p)
    p.add_argument("--rho", type=float, default=1.5)
    p.add_argument("--max-iters", type=int, default=500)
    p.add_argument("--primal-tol", type=float, default=1e-8)
    p.add_argument("--rel-obj-tol", type=float, default=1e-10)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("sweep", help="run a benchmark sweep and write CSV")
    p.add_argument("--pattern", choices=["uniform", "tracking"], default="uniform")
    p.add_argument("--fractions", default="0,0.2,0.4,0.6")
    p.add_argument("--rows", type=int, default=32)
    p.add_argument("--cols", type=int, default=512)
    p.add_argument("--rank", type=int, default=4)
    p.add_argument("--sigma", type=float, default=0.1)
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--mu-grid", help="comma-separated mu values")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("prox", help="apply the penalty prox to a matrix file")
    p.add_argument("--matrix", required=True)
    p.add_argument("--tau", type=float, required=True)
    _add_penalty_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_prox)

    return parser


def run(argv):
    """Dispatch a subcommand; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and friends
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    raise SystemExit(run(sys.argv[1:]))
