"""Command line front end: ad-hoc bound evaluation and canned sweeps.

Subcommands
-----------
compute
    Evaluate the uncertainty sum and every applicable bound on a state read
    from a JSON file, printing one "name value" line per quantity and
    optionally writing the same values as a one-row CSV.
scenario
    Run a named sweep (one-memory, w-state, random-ensemble) and write its
    CSV table, printing a one-line summary of the lhs-to-best-bound gap.
version
    Print the package version.

All errors exit nonzero with a diagnostic on stderr naming the offending
input; output files are written atomically so a failed run leaves no partial
CSV behind.
"""

import argparse
import sys

import numpy as np

from . import __version__
from .bounds import evaluate_bounds, partition_from_spec, single_memory
from .errors import QmaeurError
from .measure import resolve_bases
from .scenario import (
    DEFAULT_ENSEMBLE_SAMPLES,
    DEFAULT_GRID_STEPS,
    SweepResult,
    run_scenario,
    write_csv,
)
from .states import load_state

_BOUND_COLUMNS = ("scb", "thm1", "thm2", "wu")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qmaeur",
        description="Entropic uncertainty bounds for multiple measurements with quantum memories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser(
        "compute",
        help="evaluate the uncertainty sum and all applicable bounds on a state file",
    )
    comp.add_argument("state", help="path to a state JSON file ({\"dims\": ..., \"matrix\": ...})")
    comp.add_argument(
        "--bases",
        required=True,
        help="comma-separated measurement bases: built-in names (pauli-x, pauli-y, "
        "pauli-z, computational) or basis JSON file paths, mixed freely",
    )
    comp.add_argument(
        "--partition",
        default=None,
        help="memory assignment, e.g. '1:1;2,3:2' sends measurement 1 to memory 1 "
        "and measurements 2,3 to memory 2 (default: all measurements to memory 1)",
    )
    comp.add_argument("--out", default=None, help="also write the printed values as a one-row CSV")
    _common_flags(comp)

    scen = sub.add_parser("scenario", help="run a named sweep and write its CSV table")
    scen.add_argument(
        "name",
        choices=("one-memory", "w-state", "random-ensemble"),
        help="which case study to run",
    )
    scen.add_argument("--p", type=float, default=None, help="one-memory: fixed mixing weight")
    scen.add_argument(
        "--alpha", type=float, default=None, help="fixed angle (sweeps the other parameter)"
    )
    scen.add_argument("--beta", type=float, default=None, help="w-state: fixed second angle")
    scen.add_argument(
        "--alpha-steps", type=int, default=DEFAULT_GRID_STEPS, help="grid size for an alpha sweep"
    )
    scen.add_argument(
        "--beta-steps", type=int, default=DEFAULT_GRID_STEPS, help="grid size for a beta sweep"
    )
    scen.add_argument(
        "--p-steps", type=int, default=DEFAULT_GRID_STEPS, help="grid size for a p sweep"
    )
    scen.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_ENSEMBLE_SAMPLES,
        help="random-ensemble: number of random states",
    )
    scen.add_argument("--seed", type=int, default=0, help="random-ensemble: master seed")
    scen.add_argument("--out", default=None, help="output CSV path (default: <name>.csv)")
    _common_flags(scen)

    sub.add_parser("version", help="print the package version")
    return parser


def _common_flags(cmd):
    cmd.add_argument(
        "--wu-variant",
        choices=("corrected", "original"),
        default="corrected",
        help="overlap product for the n=m multi-measurement bound; 'original' doubles "
        "the log term and is kept for comparison only",
    )
    cmd.add_argument(
        "--b-order",
        choices=("given", "minimized"),
        default="given",
        help="measurement ordering for the chained-overlap constant in thm2",
    )


def _cmd_compute(args):
    rho = load_state(args.state)
    bases = resolve_bases(args.bases)
    if args.partition is None:
        part = single_memory(len(bases))
    else:
        part = partition_from_spec(args.partition, len(bases))
    rep = evaluate_bounds(rho, bases, part, wu_variant=args.wu_variant, b_order=args.b_order)

    pairs = [("lhs", rep.lhs)]
    pairs += [(name, value) for name, value in rep.bounds.items()]
    pairs += [(f"shannon_{name}", value) for name, value in rep.shannon_bounds.items()]
    pairs += [(f"delta_raw_{name}", value) for name, value in rep.deltas.items()]
    for name, value in pairs:
        print(f"{name} {value:.6f}")
    if rep.violations:
        print(f"violations {','.join(rep.violations)}")

    if args.out is not None:
        header = tuple(name for name, _ in pairs)
        write_csv(SweepResult(header, (tuple(value for _, value in pairs),)), args.out)
    return 0


def _scenario_kwargs(args):
    kwargs = {"b_order": args.b_order}
    if args.name == "one-memory":
        p, alpha = args.p, args.alpha
        if p is None and alpha is None:
            p = 0.5
        kwargs.update(p=p, alpha=alpha)
        kwargs["steps"] = args.p_steps if p is None else args.alpha_steps
    elif args.name == "w-state":
        alpha, beta = args.alpha, args.beta
        if alpha is None and beta is None:
            beta = np.pi / 5.0
        kwargs.update(alpha=alpha, beta=beta)
        kwargs["steps"] = args.beta_steps if beta is None else args.alpha_steps
    else:
        kwargs.update(samples=args.samples, seed=args.seed, wu_variant=args.wu_variant)
    return kwargs


def _cmd_scenario(args):
    result = run_scenario(args.name, **_scenario_kwargs(args))
    out = args.out if args.out is not None else f"{args.name}.csv"
    write_csv(result, out)

    col = {name: i for i, name in enumerate(result.header)}
    bound_cols = [col[name] for name in _BOUND_COLUMNS if name in col]
    gaps = [row[col["lhs"]] - max(row[i] for i in bound_cols) for row in result.rows]
    print(
        f"wrote {out} ({len(result.rows)} rows); "
        f"lhs - best bound: min {min(gaps):.6f} max {max(gaps):.6f}"
    )
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "scenario":
            return _cmd_scenario(args)
        print(f"qmaeur {__version__}")
        return 0
    except QmaeurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
