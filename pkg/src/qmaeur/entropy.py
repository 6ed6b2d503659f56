"""Entropies in bits: Shannon, von Neumann, conditional, mutual, accessible.

All logarithms are base 2. The 0 log 0 = 0 limit is implemented by clamping
probabilities and eigenvalues below 1e-12 to exact zero before the log;
validator tolerance allows eigenvalues down to -1e-10, which are clamped the
same way.
"""

import numpy as np

from .errors import InvalidDistribution
from .linalg import eig_hermitian
from .measure import outcome_distribution, post_measurement_state
from .states import partial_trace

# Probabilities below this are treated as exact zero in x log x.
ZERO_CLAMP = 1e-12
# Shannon preconditions: entries >= -1e-12, sum within 1e-9 of one.
NEG_ATOL = 1e-12
SUM_ATOL = 1e-9


def _clean_probabilities(p):
    p = np.array(p, dtype=float).reshape(-1)
    if p.size == 0:
        raise InvalidDistribution("empty probability vector")
    if np.min(p) < -NEG_ATOL:
        raise InvalidDistribution(f"negative probability {np.min(p):.3e} below -1e-12")
    s = float(p.sum())
    if abs(s - 1.0) > SUM_ATOL:
        raise InvalidDistribution(f"probabilities sum to {s:.12g}, not 1 within 1e-9")
    p[p < ZERO_CLAMP] = 0.0
    return p / p.sum()


def shannon(p):
    """Shannon entropy H(p) = -sum p log2 p of a probability vector."""
    p = _clean_probabilities(p)
    nz = p[p > 0.0]
    return float(-np.sum(nz * np.log2(nz)))


def von_neumann(rho):
    """Von Neumann entropy S(rho) = -Tr rho log2 rho via the eigenvalues."""
    w = eig_hermitian(rho.matrix).values.copy()
    w[w < 0.0] = 0.0
    return shannon(w)


def subsystem_entropy(rho, subsystems):
    """Entropy of the reduced state on the given subsystems."""
    return von_neumann(partial_trace(rho, subsystems))


def _as_tuple(subsystems):
    if isinstance(subsystems, (int, np.integer)):
        return (int(subsystems),)
    return tuple(int(k) for k in subsystems)


def conditional(rho, target, memory):
    """Conditional entropy S(target|memory) = S(target,memory) - S(memory).

    Negative values witness entanglement between target and memory.
    """
    target = _as_tuple(target)
    memory = _as_tuple(memory)
    return subsystem_entropy(rho, target + memory) - subsystem_entropy(rho, memory)


def mutual_information(rho, part_a, part_b):
    """Mutual information I(A:B) = S(A) + S(B) - S(AB)."""
    part_a = _as_tuple(part_a)
    part_b = _as_tuple(part_b)
    return (
        subsystem_entropy(rho, part_a)
        + subsystem_entropy(rho, part_b)
        - subsystem_entropy(rho, part_a + part_b)
    )


def holevo(rho, basis, memory):
    """Accessible correlation I(M:B) after measuring subsystem 0 in `basis`.

    Equals H(M) + S(B) - S(M, B) where (M, B) is the post-measurement state
    of the measured register and the memory subsystems; the memory set must
    not contain the measured subsystem 0.
    """
    memory = _as_tuple(memory)
    red = partial_trace(rho, (0,) + memory)
    post = post_measurement_state(red, basis, 0)
    return mutual_information(post, (0,), tuple(range(1, red.n_parties)))


def measured_conditional(rho, basis, memory):
    """Measured conditional entropy S(M|B) of outcome M given memory B.

    Computed as S(post) - S(B) on the post-measurement state of the reduced
    register over the measured subsystem 0 and the memory set. Satisfies
    S(M|B) = H(M) - I(M:B).
    """
    memory = _as_tuple(memory)
    red = partial_trace(rho, (0,) + memory)
    post = post_measurement_state(red, basis, 0)
    mem_local = tuple(range(1, red.n_parties))
    return von_neumann(post) - subsystem_entropy(post, mem_local)


def measured_entropy(rho, basis):
    """Shannon entropy H(M) of the outcome distribution on subsystem 0."""
    return shannon(outcome_distribution(rho, basis, 0))
