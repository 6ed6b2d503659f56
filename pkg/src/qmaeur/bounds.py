"""Lower bounds on measurement uncertainty with quantum memories.

The quantity being bounded is the total conditional entropy

    lhs = sum_t sum_{M_i in S_t} S(M_i | B_t)

for m >= 2 measurements M_i on subsystem 0, split by a Partition into groups
S_t held against memories B_t (memory t is register subsystem t). All bounds
return plain floats in bits.

Bound families:

* Shannon-side (no memory): bound_deutsch, bound_maassen_uffink, and the
  chained-overlap bound -log2(b) + (m-1) S(A) via channel_constant_b.
* Two measurements, one memory: bound_berta, bound_adabi.
* Two measurements, two memories: bound_tripartite_mu, bound_ming,
  bound_wu_tripartite.
* m measurements, one memory each: bound_wu_multi (corrected pair product by
  default; the uncorrected variant is kept only for comparison, it is not a
  valid bound).
* Any partition: bound_scb (the conditional-entropy baseline), bound_thm1,
  bound_thm2, bound_thm3 (generic Shannon-bound lift), bound_xie (the n = 1
  specialization of bound_thm1).

Every bound_* with a max{0, delta} structure has a matching delta_* returning
the raw, unclamped offset, which the sweep CSVs expose as delta_raw_*.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entropy import (
    holevo as _holevo,
    measured_conditional,
    measured_entropy,
    subsystem_entropy,
)
from .errors import ParseError, UnknownProvider, ValidationError, WrongArity
from .measure import channel_constant_b, overlap_c

# A bound is flagged as violated when lhs < bound - REPORT_ATOL.
REPORT_ATOL = 1e-9


@dataclass(frozen=True)
class Partition:
    """Assignment of measurements to memories.

    assignment[i] = t means measurement i (0-based) is held against memory t
    (1-based; memory t is register subsystem t). Valid partitions use every
    memory 1..n at least once, so n <= m.
    """

    assignment: tuple

    @property
    def m(self):
        return len(self.assignment)

    @property
    def n(self):
        return max(self.assignment)

    def group(self, t):
        """Measurement indices (0-based) assigned to memory t."""
        return tuple(i for i, a in enumerate(self.assignment) if a == t)

    @property
    def groups(self):
        """(t, group) pairs for t = 1..n."""
        return tuple((t, self.group(t)) for t in range(1, self.n + 1))


def partition(assignment):
    """Validated Partition constructor."""
    a = tuple(int(t) for t in assignment)
    if len(a) < 2:
        raise ValidationError(f"partition needs at least 2 measurements, got {len(a)}")
    n = max(a) if a else 0
    if min(a) < 1:
        raise ValidationError(f"memory indices are 1-based, got {min(a)}")
    missing = sorted(set(range(1, n + 1)) - set(a))
    if missing:
        raise ValidationError(f"memories {missing} have no measurements assigned")
    return Partition(a)


def single_memory(m):
    """All m measurements against one memory (n = 1)."""
    return partition((1,) * m)


def one_to_one(m):
    """Measurement i against its own memory i+1 (n = m)."""
    return partition(tuple(range(1, m + 1)))


def partition_from_spec(text, m):
    """Parse the CLI partition grammar, e.g. "1:1;2,3:2".

    Groups are separated by semicolons; each group is a comma-separated list
    of 1-based measurement indices, a colon, and the 1-based memory index.
    Every measurement 1..m must appear exactly once and every memory must
    have a distinct group.
    """
    assignment = [0] * m
    seen_memories = set()
    for chunk in str(text).split(";"):
        chunk = chunk.strip()
        if not chunk or ":" not in chunk:
            raise ParseError(f"partition group {chunk!r}: expected 'indices:memory'")
        left, _, right = chunk.partition(":")
        try:
            t = int(right)
            indices = [int(x) for x in left.split(",")]
        except ValueError as exc:
            raise ParseError(f"partition group {chunk!r}: {exc}") from exc
        if t in seen_memories:
            raise ParseError(f"memory {t} appears in more than one group")
        seen_memories.add(t)
        for i in indices:
            if not 1 <= i <= m:
                raise ParseError(f"measurement index {i} out of range 1..{m}")
            if assignment[i - 1] != 0:
                raise ParseError(f"measurement {i} assigned twice")
            assignment[i - 1] = t
    unassigned = [i + 1 for i, t in enumerate(assignment) if t == 0]
    if unassigned:
        raise ParseError(f"measurements {unassigned} not assigned to any memory")
    return partition(assignment)


def overlap_product(bases, pairs="unordered"):
    """Product of the largest squared overlaps over basis pairs.

    pairs="unordered" multiplies over i < j (the corrected pair product);
    pairs="ordered" over all i != j, which squares it.
    """
    bases = tuple(bases)
    prod = 1.0
    for i in range(len(bases) - 1):
        for j in range(i + 1, len(bases)):
            prod *= overlap_c(bases[i], bases[j])
    if pairs == "ordered":
        return prod * prod
    if pairs != "unordered":
        raise ValueError(f"pairs must be 'unordered' or 'ordered', got {pairs!r}")
    return prod


def q_mu(bases):
    """Complementarity -log2 c of a basis pair."""
    _need_m(bases, 2)
    return -math.log2(overlap_c(bases[0], bases[1]))


def _need_m(bases, m):
    if len(bases) != m:
        raise WrongArity(f"expected {m} measurements, got {len(bases)}")


def _as_memory(memory):
    if isinstance(memory, (int, np.integer)):
        return (int(memory),)
    return tuple(int(k) for k in memory)


class _Scene:
    """Per-evaluation cache of reduced entropies and measurement statistics.

    All bound formulas below are assembled from the same handful of
    quantities; computing each once keeps repeated evaluations (and the
    cross-checks between equivalent formulas) cheap and consistent.
    """

    def __init__(self, rho, bases):
        self.rho = rho
        self.bases = tuple(bases)
        self._ent = {}
        self._h = {}
        self._holevo = {}
        self._mcond = {}

    def ent(self, subsystems):
        key = tuple(sorted(subsystems))
        if key not in self._ent:
            self._ent[key] = subsystem_entropy(self.rho, key)
        return self._ent[key]

    @property
    def s_a(self):
        return self.ent((0,))

    def cond_a(self, memory):
        """S(A|B) for a memory subsystem set."""
        return self.ent((0,) + memory) - self.ent(memory)

    def mutual_a(self, memory):
        """I(A:B) for a memory subsystem set."""
        return self.s_a + self.ent(memory) - self.ent((0,) + memory)

    def h(self, i):
        """Shannon entropy of measurement i's outcomes."""
        if i not in self._h:
            self._h[i] = measured_entropy(self.rho, self.bases[i])
        return self._h[i]

    def holevo(self, i, memory):
        key = (i, tuple(sorted(memory)))
        if key not in self._holevo:
            self._holevo[key] = _holevo(self.rho, self.bases[i], key[1])
        return self._holevo[key]

    def measured_cond(self, i, memory):
        key = (i, tuple(sorted(memory)))
        if key not in self._mcond:
            self._mcond[key] = measured_conditional(self.rho, self.bases[i], key[1])
        return self._mcond[key]


def _pair_coeff(mt, m):
    # m_t(m_t - 1) / (2(m - 1)): number of same-memory pairs, spread over the
    # m - 1 pair inequalities each measurement enters.
    return mt * (mt - 1) / (2.0 * (m - 1))


def _scene(rho, bases):
    return _Scene(rho, bases)


# ---------- Shannon-side bounds (no memory) ----------


def bound_deutsch(bases):
    """H(M1) + H(M2) >= 2 log2(2 / (1 + sqrt(c)))."""
    _need_m(bases, 2)
    c = overlap_c(bases[0], bases[1])
    return 2.0 * math.log2(2.0 / (1.0 + math.sqrt(c)))


def bound_maassen_uffink(bases):
    """H(M1) + H(M2) >= -log2 c."""
    return q_mu(bases)


# ---------- two measurements, one memory ----------


def bound_berta(rho, bases, memory=1):
    """S(M1|B) + S(M2|B) >= -log2 c + S(A|B)."""
    _need_m(bases, 2)
    sc = _scene(rho, bases)
    return q_mu(bases) + sc.cond_a(_as_memory(memory))


def delta_adabi(rho, bases, memory=1):
    """Raw offset I(A:B) - I(M1:B) - I(M2:B) of the Adabi strengthening."""
    _need_m(bases, 2)
    sc = _scene(rho, bases)
    mem = _as_memory(memory)
    return sc.mutual_a(mem) - sc.holevo(0, mem) - sc.holevo(1, mem)


def bound_adabi(rho, bases, memory=1):
    """Berta bound plus the clamped Holevo-gap offset."""
    return bound_berta(rho, bases, memory) + max(0.0, delta_adabi(rho, bases, memory))


# ---------- two measurements, two memories ----------


def bound_tripartite_mu(rho, bases, mem_b=1, mem_c=2):
    """S(M1|B) + S(M2|C) >= -log2 c, independent of the state."""
    _need_m(bases, 2)
    return q_mu(bases)


def delta_ming(rho, bases, mem_b=1, mem_c=2):
    """Raw offset of the cross-correlated tripartite strengthening.

    2 S(A) + q - I(A:B) - I(A:C) + I(M2:B) + I(M1:C) - H(M1) - H(M2); note
    the Holevo terms pair each measurement with the other one's memory.
    """
    _need_m(bases, 2)
    sc = _scene(rho, bases)
    b = _as_memory(mem_b)
    c = _as_memory(mem_c)
    return (
        2.0 * sc.s_a
        + q_mu(bases)
        - sc.mutual_a(b)
        - sc.mutual_a(c)
        + sc.holevo(1, b)
        + sc.holevo(0, c)
        - sc.h(0)
        - sc.h(1)
    )


def bound_ming(rho, bases, mem_b=1, mem_c=2):
    return q_mu(bases) + max(0.0, delta_ming(rho, bases, mem_b, mem_c))


def delta_wu_tripartite(rho, bases, mem_b=1, mem_c=2):
    """Raw offset 2S(A) + q - I(M1:B) - I(M2:C) - H(M1) - H(M2)."""
    _need_m(bases, 2)
    sc = _scene(rho, bases)
    b = _as_memory(mem_b)
    c = _as_memory(mem_c)
    return (
        2.0 * sc.s_a
        + q_mu(bases)
        - sc.holevo(0, b)
        - sc.holevo(1, c)
        - sc.h(0)
        - sc.h(1)
    )


def bound_wu_tripartite(rho, bases, mem_b=1, mem_c=2):
    return q_mu(bases) + max(0.0, delta_wu_tripartite(rho, bases, mem_b, mem_c))


# ---------- m measurements, one memory each ----------


def _wu_log_term(bases, variant):
    m = len(bases)
    if variant == "corrected":
        prod = overlap_product(bases, "unordered")
    elif variant == "original":
        # Ordered-pair product: doubles the log term. Not a valid bound in
        # general (it can exceed the true uncertainty); kept for comparison.
        prod = overlap_product(bases, "ordered")
    else:
        raise ValueError(f"variant must be 'corrected' or 'original', got {variant!r}")
    return -math.log2(prod) / (m - 1)


def delta_wu_multi(rho, bases, variant="corrected"):
    """Raw offset of the multi-measurement bound with one memory per measurement."""
    m = len(bases)
    if m < 2:
        raise WrongArity(f"expected at least 2 measurements, got {m}")
    sc = _scene(rho, bases)
    log_term = _wu_log_term(bases, variant)
    total = log_term + m * sc.s_a
    for i in range(m):
        total -= sc.h(i) + sc.holevo(i, (i + 1,))
    return total


def bound_wu_multi(rho, bases, variant="corrected"):
    """sum_i S(M_i|B_i) >= log term + max{0, delta}, measurement i on memory i."""
    log_term = _wu_log_term(bases, variant)
    return log_term + max(0.0, delta_wu_multi(rho, bases, variant))


# ---------- general partitions ----------


def _check_partition(rho, bases, part):
    if part.m != len(bases):
        raise WrongArity(f"partition covers {part.m} measurements, got {len(bases)} bases")
    if part.n > rho.n_parties - 1:
        raise ValidationError(
            f"partition references memory {part.n} but the register has "
            f"{rho.n_parties - 1} memory subsystems"
        )


def _scb(sc, part):
    m = part.m
    log_term = -math.log2(overlap_product(sc.bases, "unordered")) / (m - 1)
    total = log_term
    for t, group in part.groups:
        total += _pair_coeff(len(group), m) * sc.cond_a((t,))
    return total


def bound_scb(rho, bases, part):
    """Baseline conditional-entropy bound for an arbitrary partition.

    -(1/(m-1)) log2 prod_{i<j} c_ij plus, for each memory t holding m_t
    measurements, m_t(m_t-1)/(2(m-1)) times S(A|B_t).
    """
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    return _scb(_scene(rho, bases), part)


def _delta_thm1(sc, part):
    m = part.m
    total = 0.0
    spread = 0.0
    for t, group in part.groups:
        coeff = _pair_coeff(len(group), m)
        spread += coeff
        total += coeff * sc.mutual_a((t,))
        for i in group:
            total -= sc.holevo(i, (t,))
    total += (m / 2.0 - spread) * sc.s_a
    return total


def delta_thm1(rho, bases, part):
    """Raw Holevo-gap offset of bound_thm1."""
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    return _delta_thm1(_scene(rho, bases), part)


def bound_thm1(rho, bases, part):
    """Baseline bound plus the clamped Holevo-gap offset.

    The offset adds (m/2 - sum_t coeff_t) S(A), adds coeff_t I(A:B_t) per
    memory and subtracts every I(M_i:B_t); it reduces to the Adabi offset for
    m = 2, n = 1.
    """
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    sc = _scene(rho, bases)
    return _scb(sc, part) + max(0.0, _delta_thm1(sc, part))


def _delta_thm2(sc, part, b_order):
    m = part.m
    log_prod = math.log2(overlap_product(sc.bases, "unordered"))
    b = channel_constant_b(sc.bases, order=b_order)
    total = (log_prod - (m - 1) * math.log2(b)) / (m - 1) + (m - 1) * sc.s_a
    for t, group in part.groups:
        coeff = _pair_coeff(len(group), m)
        total -= coeff * sc.s_a
        total += coeff * sc.mutual_a((t,))
        for i in group:
            total -= sc.holevo(i, (t,))
    return total


def delta_thm2(rho, bases, part, b_order="given"):
    """Raw chained-overlap offset of bound_thm2."""
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    return _delta_thm2(_scene(rho, bases), part, b_order)


def bound_thm2(rho, bases, part, b_order="given"):
    """Baseline bound plus the clamped chained-overlap offset.

    The offset trades the pair-product complementarity for the chained
    overlap constant b and (m-1) S(A); for mutually unbiased bases it never
    exceeds the bound_thm1 offset when m >= 2 (they tie at m = 2).
    """
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    sc = _scene(rho, bases)
    return _scb(sc, part) + max(0.0, _delta_thm2(sc, part, b_order))


#: Named Shannon-entropy bounds sum_i H(M_i) >= U usable with bound_thm3.
SHANNON_PROVIDERS = ("mu-sum", "liu-channel")


def _shannon_floor(sc, provider, b_order):
    m = len(sc.bases)
    if provider == "mu-sum":
        log_term = -math.log2(overlap_product(sc.bases, "unordered")) / (m - 1)
        return log_term + (m / 2.0) * sc.s_a
    if provider == "liu-channel":
        b = channel_constant_b(sc.bases, order=b_order)
        return -math.log2(b) + (m - 1) * sc.s_a
    if isinstance(provider, (int, float)) and not isinstance(provider, bool):
        return float(provider)
    raise UnknownProvider(
        f"provider must be one of {SHANNON_PROVIDERS} or a numeric constant, got {provider!r}"
    )


def delta_thm3(rho, bases, part, provider, b_order="given"):
    """Raw offset U - sum I(M_i:B_t) - scb of the generic Shannon-bound lift."""
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    sc = _scene(rho, bases)
    total = _shannon_floor(sc, provider, b_order) - _scb(sc, part)
    for t, group in part.groups:
        for i in group:
            total -= sc.holevo(i, (t,))
    return total


def bound_thm3(rho, bases, part, provider, b_order="given"):
    """Memory-assisted lift of any Shannon bound sum_i H(M_i) >= U.

    Uses lhs >= U - sum_t sum_i I(M_i:B_t) together with the baseline bound;
    provider "mu-sum" recovers bound_thm1 and "liu-channel" recovers
    bound_thm2 exactly. A numeric provider is treated as a constant U.
    """
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    sc = _scene(rho, bases)
    return _scb(sc, part) + max(0.0, delta_thm3(rho, bases, part, provider, b_order))


def delta_xie(rho, bases, memory=1):
    """Raw offset (m/2) I(A:B) - sum_i I(M_i:B) of the single-memory bound."""
    sc = _scene(rho, bases)
    mem = _as_memory(memory)
    m = len(sc.bases)
    if m < 2:
        raise WrongArity(f"expected at least 2 measurements, got {m}")
    total = (m / 2.0) * sc.mutual_a(mem)
    for i in range(m):
        total -= sc.holevo(i, mem)
    return total


def bound_xie(rho, bases, memory=1):
    """Single-memory form: log term + (m/2) S(A|B) + clamped Holevo gap.

    Algebraically identical to bound_thm1 with every measurement on one
    memory; kept as a direct formula because the single-memory case is the
    common one.
    """
    sc = _scene(rho, bases)
    mem = _as_memory(memory)
    m = len(sc.bases)
    if m < 2:
        raise WrongArity(f"expected at least 2 measurements, got {m}")
    log_term = -math.log2(overlap_product(sc.bases, "unordered")) / (m - 1)
    base = log_term + (m / 2.0) * sc.cond_a(mem)
    return base + max(0.0, delta_xie(rho, bases, memory))


def lhs_uncertainty(rho, bases, part):
    """The bounded quantity sum_t sum_{i in S_t} S(M_i|B_t)."""
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    sc = _scene(rho, bases)
    total = 0.0
    for t, group in part.groups:
        for i in group:
            total += sc.measured_cond(i, (t,))
    return total


def _as_partition(part, m):
    if isinstance(part, Partition):
        return part
    if isinstance(part, str):
        return partition_from_spec(part, m)
    return partition(part)


@dataclass(frozen=True)
class BoundReport:
    """Evaluation of all applicable bounds against the uncertainty lhs.

    bounds maps bound name to value (lower bounds on lhs only); deltas maps
    bound name to its raw, unclamped offset; shannon_bounds holds reference
    bounds on sum_i H(M_i), which do not constrain lhs and are never flagged.
    violations lists bound names with lhs < bound - 1e-9.
    """

    lhs: float
    bounds: dict
    deltas: dict
    shannon_bounds: dict
    violations: tuple


def evaluate_bounds(rho, bases, part, wu_variant="corrected", b_order="given"):
    """Evaluate lhs and every bound applicable to the partition shape."""
    part = _as_partition(part, len(bases))
    _check_partition(rho, bases, part)
    sc = _scene(rho, bases)
    m = part.m
    n = part.n

    bounds = {}
    deltas = {}
    shannon_bounds = {}

    if m == 2:
        shannon_bounds["deutsch"] = bound_deutsch(sc.bases)
        shannon_bounds["mu"] = bound_maassen_uffink(sc.bases)
        if n == 1:
            mem = (1,)
            bounds["berta"] = q_mu(sc.bases) + sc.cond_a(mem)
            deltas["adabi"] = sc.mutual_a(mem) - sc.holevo(0, mem) - sc.holevo(1, mem)
            bounds["adabi"] = bounds["berta"] + max(0.0, deltas["adabi"])
        if n == 2:
            bounds["tripartite_mu"] = q_mu(sc.bases)
            deltas["ming"] = delta_ming(rho, sc.bases)
            bounds["ming"] = bounds["tripartite_mu"] + max(0.0, deltas["ming"])
            deltas["wu_tripartite"] = delta_wu_tripartite(rho, sc.bases)
            bounds["wu_tripartite"] = bounds["tripartite_mu"] + max(0.0, deltas["wu_tripartite"])

    if n == m:
        deltas["wu"] = delta_wu_multi(rho, sc.bases, wu_variant)
        bounds["wu"] = _wu_log_term(sc.bases, wu_variant) + max(0.0, deltas["wu"])

    scb = _scb(sc, part)
    bounds["scb"] = scb
    deltas["thm1"] = _delta_thm1(sc, part)
    bounds["thm1"] = scb + max(0.0, deltas["thm1"])
    deltas["thm2"] = _delta_thm2(sc, part, b_order)
    bounds["thm2"] = scb + max(0.0, deltas["thm2"])

    lhs = 0.0
    for t, group in part.groups:
        for i in group:
            lhs += sc.measured_cond(i, (t,))

    violated = tuple(name for name, value in bounds.items() if lhs < value - REPORT_ATOL)
    return BoundReport(lhs, bounds, deltas, shannon_bounds, violated)
