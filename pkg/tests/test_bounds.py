"""Uncertainty bound tests: frozen oracles, identities and validity properties."""

import numpy as np
import pytest

from qmaeur.bounds import (
    Partition,
    bound_adabi,
    bound_berta,
    bound_deutsch,
    bound_maassen_uffink,
    bound_ming,
    bound_scb,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_tripartite_mu,
    bound_wu_multi,
    bound_wu_tripartite,
    bound_xie,
    delta_ming,
    delta_thm1,
    delta_thm2,
    delta_wu_tripartite,
    evaluate_bounds,
    lhs_uncertainty,
    one_to_one,
    overlap_product,
    partition,
    partition_from_spec,
    q_mu,
    single_memory,
)
from qmaeur.entropy import holevo, measured_entropy, mutual_information, subsystem_entropy
from qmaeur.errors import (
    DimensionMismatch,
    ParseError,
    UnknownProvider,
    ValidationError,
    WrongArity,
)
from qmaeur.linalg import eig_hermitian, kron
from qmaeur.measure import builtin_basis, measurement_basis, pauli_triple
from qmaeur.rng import Rng
from qmaeur.states import (
    density_matrix,
    pure_state,
    random_hermitian,
    random_state,
)

PAULI = pauli_triple()
XZ = (builtin_basis("pauli-x"), builtin_basis("pauli-z"))
BELL = pure_state([2.0**-0.5, 0.0, 0.0, 2.0**-0.5], (2, 2))
EYE4 = density_matrix(np.eye(4) / 4.0, (2, 2))
EYE16 = density_matrix(np.eye(16) / 16.0, (2, 2, 2, 2))


def random_basis(rng, dim, label="r"):
    return measurement_basis(label, eig_hermitian(random_hermitian(rng, dim)).vectors)


def random_bases(rng, m, dim=2):
    return tuple(random_basis(rng.child(i), dim, f"b{i}") for i in range(m))


def fourier_basis(dim):
    j, k = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    return measurement_basis("fourier", np.exp(2j * np.pi * j * k / dim) / np.sqrt(dim))


def test_partition_construction():
    part = partition((1, 2, 2))
    assert part.m == 3 and part.n == 2
    assert part.group(1) == (0,)
    assert part.group(2) == (1, 2)
    assert dict(part.groups) == {1: (0,), 2: (1, 2)}
    assert single_memory(3).assignment == (1, 1, 1)
    assert one_to_one(3).assignment == (1, 2, 3)


def test_partition_validation():
    with pytest.raises(ValidationError):
        partition((1,))
    with pytest.raises(ValidationError):
        partition((0, 1))
    with pytest.raises(ValidationError):
        partition((1, 3))


def test_partition_from_spec():
    assert partition_from_spec("1:1;2,3:2", 3).assignment == (1, 2, 2)
    assert partition_from_spec("1,2,3:1", 3).assignment == (1, 1, 1)
    assert partition_from_spec("2:2;1:1;3:3", 3).assignment == (1, 2, 3)
    for bad in ("", "1:1", "1,2:1;2:2", "1:1;3:2", "1:0;2:1", "x:1;2:2"):
        with pytest.raises(ParseError):
            partition_from_spec(bad, 2 if bad in ("", "1:1", "1,2:1;2:2", "x:1;2:2") else 3)


def test_overlap_product_and_q_mu():
    # Three Pauli bases: every pairwise overlap is 1/2.
    assert overlap_product(PAULI) == pytest.approx(0.125, abs=1e-12)
    assert overlap_product(PAULI, pairs="ordered") == pytest.approx(0.125**2, abs=1e-12)
    assert q_mu(XZ) == pytest.approx(1.0, abs=1e-12)


def test_deutsch_and_maassen_uffink():
    # c = 1/2: 2 log2(2 / (1 + sqrt(1/2))).
    expect = 2.0 * np.log2(2.0 / (1.0 + np.sqrt(0.5)))
    assert bound_deutsch(XZ) == pytest.approx(expect, abs=1e-12)
    assert bound_deutsch(XZ) == pytest.approx(0.45689339367277615, abs=1e-12)
    assert bound_maassen_uffink(XZ) == pytest.approx(1.0, abs=1e-12)
    # Dimension-4 pair with c = 1/4: Deutsch gives 2 log2(4/3).
    comp4 = measurement_basis("c4", np.eye(4))
    assert bound_deutsch((comp4, fourier_basis(4))) == pytest.approx(
        2.0 * np.log2(4.0 / 3.0), abs=1e-12
    )
    assert bound_maassen_uffink((comp4, fourier_basis(4))) == pytest.approx(2.0, abs=1e-12)


def test_berta_oracles():
    assert bound_berta(BELL, XZ) == pytest.approx(0.0, abs=1e-10)
    assert bound_berta(EYE4, XZ) == pytest.approx(2.0, abs=1e-12)


def test_adabi_refines_berta():
    for seed in range(10):
        rho = random_state(Rng(seed), (2, 2))
        assert bound_adabi(rho, XZ) >= bound_berta(rho, XZ) - 1e-12


def test_lhs_pinned_values():
    assert lhs_uncertainty(EYE4, PAULI, single_memory(3)) == pytest.approx(3.0, abs=1e-10)
    assert lhs_uncertainty(BELL, PAULI, single_memory(3)) == pytest.approx(0.0, abs=1e-9)
    ket00 = pure_state([1.0, 0.0, 0.0, 0.0], (2, 2))
    assert lhs_uncertainty(ket00, PAULI, single_memory(3)) == pytest.approx(2.0, abs=1e-10)


def test_scb_thm1_pinned_values():
    part = single_memory(3)
    assert bound_scb(EYE4, PAULI, part) == pytest.approx(3.0, abs=1e-10)
    assert bound_thm1(EYE4, PAULI, part) == pytest.approx(3.0, abs=1e-10)
    assert bound_scb(BELL, PAULI, part) == pytest.approx(0.0, abs=1e-9)
    assert bound_thm1(BELL, PAULI, part) == pytest.approx(0.0, abs=1e-9)
    assert bound_thm2(BELL, PAULI, part) == pytest.approx(0.0, abs=1e-9)


def test_multi_memory_pinned_values():
    part = one_to_one(3)
    assert lhs_uncertainty(EYE16, PAULI, part) == pytest.approx(3.0, abs=1e-10)
    assert bound_scb(EYE16, PAULI, part) == pytest.approx(1.5, abs=1e-12)
    assert bound_thm1(EYE16, PAULI, part) == pytest.approx(3.0, abs=1e-10)
    assert bound_thm2(EYE16, PAULI, part) == pytest.approx(3.0, abs=1e-10)
    assert bound_wu_multi(EYE16, PAULI) == pytest.approx(3.0, abs=1e-10)
    # The uncorrected product doubles the log term and overshoots the lhs,
    # which is why it is not exposed as a default bound.
    assert bound_wu_multi(EYE16, PAULI, variant="original") == pytest.approx(6.0, abs=1e-10)

    ket0000 = pure_state([1.0] + [0.0] * 15, (2, 2, 2, 2))
    assert bound_thm1(ket0000, PAULI, part) == pytest.approx(1.5, abs=1e-10)
    assert bound_wu_multi(ket0000, PAULI) == pytest.approx(1.5, abs=1e-10)


def test_tripartite_bounds_dual_route():
    """Tripartite offsets recomputed from public entropy primitives."""
    mu = q_mu(XZ)
    for seed in range(10):
        rho = random_state(Rng(seed + 70), (2, 2, 2))
        assert bound_tripartite_mu(rho, XZ) == pytest.approx(mu, abs=1e-12)
        s_a = subsystem_entropy(rho, (0,))
        h1 = measured_entropy(rho, XZ[0])
        h2 = measured_entropy(rho, XZ[1])
        ming_expect = (
            2.0 * s_a
            + mu
            - mutual_information(rho, (0,), (1,))
            - mutual_information(rho, (0,), (2,))
            + holevo(rho, XZ[1], (1,))
            + holevo(rho, XZ[0], (2,))
            - h1
            - h2
        )
        assert delta_ming(rho, XZ) == pytest.approx(ming_expect, abs=1e-10)
        assert bound_ming(rho, XZ) == pytest.approx(mu + max(0.0, ming_expect), abs=1e-10)
        wu_expect = (
            2.0 * s_a
            + mu
            - holevo(rho, XZ[0], (1,))
            - holevo(rho, XZ[1], (2,))
            - h1
            - h2
        )
        assert delta_wu_tripartite(rho, XZ) == pytest.approx(wu_expect, abs=1e-10)
        assert bound_wu_tripartite(rho, XZ) == pytest.approx(
            mu + max(0.0, wu_expect), abs=1e-10
        )


def test_thm1_delta_dual_route():
    """The partition-aware offset recomputed from public entropy primitives."""
    part = partition((1, 2, 2))
    for seed in range(10):
        rho = random_state(Rng(seed + 500), (2, 2, 2))
        coeff = {1: 0.0, 2: 0.5}
        expect = (1.5 - 0.5) * subsystem_entropy(rho, (0,))
        expect += coeff[2] * mutual_information(rho, (0,), (2,))
        expect -= holevo(rho, PAULI[0], (1,))
        expect -= holevo(rho, PAULI[1], (2,))
        expect -= holevo(rho, PAULI[2], (2,))
        assert delta_thm1(rho, PAULI, part) == pytest.approx(expect, abs=1e-10)


def test_reduction_identities():
    for seed in range(15):
        rho = random_state(Rng(seed + 1000), (2, 2))
        bases = random_bases(Rng(seed + 2000), 3)
        part = single_memory(3)
        t1 = bound_thm1(rho, bases, part)
        t2 = bound_thm2(rho, bases, part)
        assert bound_thm3(rho, bases, part, "mu-sum") == pytest.approx(t1, abs=1e-12)
        assert bound_thm3(rho, bases, part, "liu-channel") == pytest.approx(t2, abs=1e-12)
        assert bound_xie(rho, bases) == pytest.approx(t1, abs=1e-12)


def test_thm3_numeric_provider_and_errors():
    part = single_memory(3)
    scb = bound_scb(EYE4, PAULI, part)
    # A numeric floor no better than scb collapses to scb.
    assert bound_thm3(EYE4, PAULI, part, 0.0) == pytest.approx(scb, abs=1e-12)
    with pytest.raises(UnknownProvider):
        bound_thm3(EYE4, PAULI, part, "bogus")
    with pytest.raises(UnknownProvider):
        bound_thm3(EYE4, PAULI, part, True)


def test_two_measurement_reductions():
    """m = 2 with one memory: adabi and thm1 coincide, berta and scb coincide."""
    part = single_memory(2)
    for seed in range(10):
        rho = random_state(Rng(seed + 3000), (2, 2))
        assert bound_thm1(rho, XZ, part) == pytest.approx(bound_adabi(rho, XZ), abs=1e-12)
        assert bound_scb(rho, XZ, part) == pytest.approx(bound_berta(rho, XZ), abs=1e-12)
        # Unbiased pair: the two partition-aware bounds agree.
        assert bound_thm1(rho, XZ, part) == pytest.approx(
            bound_thm2(rho, XZ, part), abs=1e-12
        )


def test_mub_dominance():
    """With three Pauli bases, thm1 is at least as tight as thm2."""
    for part in (single_memory(3), one_to_one(3)):
        dims = (2,) * (part.n + 1)
        for seed in range(10):
            rho = random_state(Rng(seed + 4000), dims)
            assert bound_thm1(rho, PAULI, part) >= bound_thm2(rho, PAULI, part) - 1e-9


def test_product_state_delta_coefficients():
    """On product states the offset reduces to its S(A) term: zero for a
    single memory, (m/2) S(A) for one memory per measurement."""
    a = np.diag([0.3, 0.7])
    s_a = subsystem_entropy(density_matrix(a, (2,)), (0,))
    for m in (2, 3):
        bases = random_bases(Rng(m), m)
        mats = [a] + [np.diag([0.6, 0.4])] * m
        rho_pair = density_matrix(kron(a, np.diag([0.6, 0.4])), (2, 2))
        assert delta_thm1(rho_pair, bases, single_memory(m)) == pytest.approx(0.0, abs=1e-10)
        rho_all = density_matrix(kron(*mats), (2,) * (m + 1))
        assert delta_thm1(rho_all, bases, one_to_one(m)) == pytest.approx(
            0.5 * m * s_a, abs=1e-10
        )


def test_hierarchy_thm_vs_scb():
    for seed in range(10):
        rho = random_state(Rng(seed + 5000), (2, 2, 2))
        for part in (single_memory(3), partition((1, 2, 2)), partition((1, 1, 2))):
            scb = bound_scb(rho, PAULI, part)
            assert bound_thm1(rho, PAULI, part) >= scb - 1e-12
            assert bound_thm2(rho, PAULI, part) >= scb - 1e-12


def test_validity_random_partitions():
    for seed in range(12):
        rng = Rng(seed + 6000)
        m = 2 + seed % 2
        n = 1 + seed % m
        assignment = [1 + i % n for i in range(m)]
        part = partition(assignment)
        rho = random_state(rng, (2,) * (n + 1))
        bases = random_bases(rng.child(1), m)
        rep = evaluate_bounds(rho, bases, part)
        assert rep.violations == ()
        for name, value in rep.bounds.items():
            assert rep.lhs >= value - 1e-9, name


def test_evaluate_bounds_report_shape():
    rep = evaluate_bounds(random_state(Rng(1), (2, 2)), XZ, single_memory(2))
    assert set(rep.bounds) == {"berta", "adabi", "scb", "thm1", "thm2"}
    assert set(rep.shannon_bounds) == {"deutsch", "mu"}
    assert set(rep.deltas) == {"adabi", "thm1", "thm2"}

    rep3 = evaluate_bounds(random_state(Rng(2), (2, 2, 2)), XZ, one_to_one(2))
    assert set(rep3.bounds) == {
        "tripartite_mu",
        "ming",
        "wu_tripartite",
        "wu",
        "scb",
        "thm1",
        "thm2",
    }

    rep4 = evaluate_bounds(random_state(Rng(3), (2, 2, 2, 2)), PAULI, one_to_one(3))
    assert set(rep4.bounds) == {"wu", "scb", "thm1", "thm2"}
    assert rep4.bounds["thm1"] == pytest.approx(
        rep4.bounds["scb"] + max(0.0, rep4.deltas["thm1"]), abs=1e-12
    )


def test_arity_and_dimension_errors():
    with pytest.raises(WrongArity):
        bound_berta(random_state(Rng(1), (2, 2)), PAULI)
    with pytest.raises(WrongArity):
        bound_ming(random_state(Rng(1), (2, 2, 2)), PAULI)
    qutrit = measurement_basis("q3", np.eye(3))
    with pytest.raises(DimensionMismatch):
        lhs_uncertainty(EYE4, (qutrit, qutrit), single_memory(2))
    with pytest.raises(ValidationError):
        lhs_uncertainty(EYE4, XZ, one_to_one(2))


def test_b_order_flag():
    for seed in range(6):
        rho = random_state(Rng(seed + 7000), (2, 2))
        bases = random_bases(Rng(seed + 8000), 3)
        part = single_memory(3)
        given = bound_thm2(rho, bases, part, b_order="given")
        best = bound_thm2(rho, bases, part, b_order="minimized")
        # A smaller chained overlap can only raise the bound.
        assert best >= given - 1e-12


def test_wu_variant_is_flagged_when_violated():
    rep = evaluate_bounds(EYE16, PAULI, one_to_one(3), wu_variant="original")
    assert rep.bounds["wu"] == pytest.approx(6.0, abs=1e-10)
    assert "wu" in rep.violations
