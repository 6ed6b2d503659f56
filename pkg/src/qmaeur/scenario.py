"""Canned parameter sweeps over the named case studies, with CSV output.

Three scenarios are provided, each returning a SweepResult (header plus rows)
that write_csv serializes deterministically:

one-memory
    The mixed two-qubit family p|s><s| + (1-p) I/4 measured with the three
    Pauli bases against a single memory. One of p and alpha is fixed, the
    other swept on a uniform grid.
w-state
    The pure three-qubit W family with two memories, sigma-x read against the
    first and sigma-y, sigma-z against the second. One of alpha and beta is
    fixed, the other swept.
random-ensemble
    Random four-qubit states with each Pauli measurement read against its own
    memory; per-sample seeds are derived from the master seed so row i is
    reproducible in isolation.

All floats are printed with 12 significant digits; output files are written
to a temporary name and renamed, so readers never observe a partial file.
"""

import csv
import os
from dataclasses import dataclass

import numpy as np

from .bounds import (
    bound_scb,
    bound_thm2,
    delta_thm2,
    evaluate_bounds,
    lhs_uncertainty,
    one_to_one,
    partition,
    single_memory,
)
from .entropy import holevo, mutual_information, subsystem_entropy
from .errors import OutOfRange, UnknownScenario
from .measure import pauli_triple
from .rng import Rng, child_seed
from .states import family_mixed_two_qubit, generalized_w, random_state, reorder_subsystems

DEFAULT_GRID_STEPS = 200
DEFAULT_ENSEMBLE_SAMPLES = 10_000

# Subsystem order used to build the two-memory state: the measured qubit is
# the tensor factor carrying the sin(a)cos(b) amplitude, the sigma-x memory
# carries sin(a)sin(b) and the two-measurement memory carries cos(a).
_W_SUBSYSTEM_ORDER = (2, 1, 0)


@dataclass(frozen=True)
class SweepResult:
    """Header names plus data rows, one tuple per row."""

    header: tuple
    rows: tuple


def _cell(value):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".12g")


def write_csv(result, path):
    """Write a SweepResult as CSV, atomically (temp file then rename)."""
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(result.header)
        for row in result.rows:
            writer.writerow([_cell(v) for v in row])
    os.replace(tmp, path)


def _grid(lo, hi, steps):
    if steps < 1:
        raise OutOfRange(f"steps must be >= 1, got {steps}")
    return np.linspace(lo, hi, steps)


def run_one_memory_case(p=None, alpha=None, steps=DEFAULT_GRID_STEPS, b_order="given"):
    """Sweep the free parameter of the one-memory mixed-family case.

    Exactly one of p and alpha must be given. With p fixed, alpha is swept
    over [0, pi]; with alpha fixed, p is swept over [0, 1]. Each row holds
    the swept point's parameters, the uncertainty lhs, the scb, thm1 and
    thm2 bounds and the raw (unclamped) thm1/thm2 offsets.

    Parameters
    ----------
    p : float, optional
        Fixed mixing weight in [0, 1].
    alpha : float, optional
        Fixed pure-part angle.
    steps : int
        Grid resolution.
    b_order : str
        Measurement ordering rule for the thm2 chained-overlap constant.

    Returns
    -------
    SweepResult
        Columns: p, alpha, lhs, scb, thm1, thm2, delta_raw_thm1,
        delta_raw_thm2.
    """
    if (p is None) == (alpha is None):
        raise OutOfRange("exactly one of p and alpha must be fixed")
    bases = pauli_triple()
    part = single_memory(3)
    if alpha is None:
        points = [(p, a) for a in _grid(0.0, np.pi, steps)]
    else:
        points = [(w, alpha) for w in _grid(0.0, 1.0, steps)]
    rows = []
    for pv, av in points:
        rho = family_mixed_two_qubit(pv, av)
        rep = evaluate_bounds(rho, bases, part, b_order=b_order)
        rows.append(
            (
                pv,
                av,
                rep.lhs,
                rep.bounds["scb"],
                rep.bounds["thm1"],
                rep.bounds["thm2"],
                rep.deltas["thm1"],
                rep.deltas["thm2"],
            )
        )
    header = ("p", "alpha", "lhs", "scb", "thm1", "thm2", "delta_raw_thm1", "delta_raw_thm2")
    return SweepResult(header, tuple(rows))


def _w_state(alpha, beta):
    return reorder_subsystems(generalized_w(alpha, beta), _W_SUBSYSTEM_ORDER)


def run_two_memory_case(alpha=None, beta=None, steps=DEFAULT_GRID_STEPS, b_order="given"):
    """Sweep the free parameter of the two-memory W-family case.

    Exactly one of alpha and beta must be given. With beta fixed, alpha is
    swept over [0, pi]; with alpha fixed, beta is swept over [0, 2 pi]. The
    partition reads sigma-x against the first memory and sigma-y, sigma-z
    against the second.

    The thm1 column of this scenario is the raw-offset variant specific to
    this partition shape: scb plus an unclamped offset in which the
    two-measurement memory's mutual-information term enters with a minus
    sign, S(A) - I(A:B2)/2 - sum of Holevo terms. It is tighter than the
    clamped general form wherever the offset is positive and drops below scb
    where it is negative. The thm2 column is the general clamped bound.

    Returns
    -------
    SweepResult
        Columns: alpha, beta, lhs, scb, thm1, thm2, delta_raw_thm1,
        delta_raw_thm2.
    """
    if (alpha is None) == (beta is None):
        raise OutOfRange("exactly one of alpha and beta must be fixed")
    bases = pauli_triple()
    part = partition((1, 2, 2))
    if alpha is None:
        points = [(a, beta) for a in _grid(0.0, np.pi, steps)]
    else:
        points = [(alpha, b) for b in _grid(0.0, 2.0 * np.pi, steps)]
    rows = []
    for av, bv in points:
        rho = _w_state(av, bv)
        scb = bound_scb(rho, bases, part)
        delta_raw = (
            subsystem_entropy(rho, (0,))
            - 0.5 * mutual_information(rho, (0,), (2,))
            - holevo(rho, bases[0], (1,))
            - holevo(rho, bases[1], (2,))
            - holevo(rho, bases[2], (2,))
        )
        delta2 = delta_thm2(rho, bases, part, b_order=b_order)
        rows.append(
            (
                av,
                bv,
                lhs_uncertainty(rho, bases, part),
                scb,
                scb + delta_raw,
                bound_thm2(rho, bases, part, b_order=b_order),
                delta_raw,
                delta2,
            )
        )
    header = ("alpha", "beta", "lhs", "scb", "thm1", "thm2", "delta_raw_thm1", "delta_raw_thm2")
    return SweepResult(header, tuple(rows))


def run_three_memory_ensemble(
    samples=DEFAULT_ENSEMBLE_SAMPLES,
    seed=0,
    wu_variant="corrected",
    b_order="given",
):
    """Random four-qubit ensemble with one memory per Pauli measurement.

    Each sample draws a random four-qubit state from the seeded generator
    (sample i uses child_seed(seed, i), recorded in the row) and evaluates
    the uncertainty sum and the scb, thm1, thm2 and wu bounds under the
    one-to-one partition. Rows are emitted in sample-index order.

    Parameters
    ----------
    samples : int
        Number of random states, >= 1.
    seed : int
        Master seed; per-sample seeds are derived from it.
    wu_variant : str
        "corrected" for the pair-product overlap term, "original" for the
        doubled ordered-product variant (comparison only, not a valid bound).
    b_order : str
        Measurement ordering rule for the thm2 chained-overlap constant.

    Returns
    -------
    SweepResult
        Columns: sample_index, sample_seed, lhs, scb, thm1, thm2, wu,
        thm1_minus_wu, thm2_minus_wu, delta_raw_thm1, delta_raw_thm2,
        delta_raw_wu.
    """
    if samples < 1:
        raise OutOfRange(f"samples must be >= 1, got {samples}")
    bases = pauli_triple()
    part = one_to_one(3)
    rows = []
    for i in range(samples):
        sub = child_seed(seed, i)
        rho = random_state(Rng(sub), (2, 2, 2, 2))
        rep = evaluate_bounds(rho, bases, part, wu_variant=wu_variant, b_order=b_order)
        wu = rep.bounds["wu"]
        rows.append(
            (
                i,
                sub,
                rep.lhs,
                rep.bounds["scb"],
                rep.bounds["thm1"],
                rep.bounds["thm2"],
                wu,
                rep.bounds["thm1"] - wu,
                rep.bounds["thm2"] - wu,
                rep.deltas["thm1"],
                rep.deltas["thm2"],
                rep.deltas["wu"],
            )
        )
    header = (
        "sample_index",
        "sample_seed",
        "lhs",
        "scb",
        "thm1",
        "thm2",
        "wu",
        "thm1_minus_wu",
        "thm2_minus_wu",
        "delta_raw_thm1",
        "delta_raw_thm2",
        "delta_raw_wu",
    )
    return SweepResult(header, tuple(rows))


def run_scenario(name, **kwargs):
    """Dispatch a scenario by CLI name.

    Parameters
    ----------
    name : str
        One of "one-memory", "w-state", "random-ensemble".
    **kwargs
        Forwarded to the scenario runner.
    """
    runners = {
        "one-memory": run_one_memory_case,
        "w-state": run_two_memory_case,
        "random-ensemble": run_three_memory_ensemble,
    }
    if name not in runners:
        known = ", ".join(sorted(runners))
        raise UnknownScenario(f"unknown scenario {name!r}; expected one of: {known}")
    return runners[name](**kwargs)
