"""Measurement basis, overlap constant and post-measurement map tests."""

import itertools

import numpy as np
import pytest

from qmaeur.errors import OutOfRange, ParseError, ValidationError
from qmaeur.linalg import dagger, eig_hermitian
from qmaeur.measure import (
    builtin_basis,
    channel_constant_b,
    load_basis,
    measurement_basis,
    outcome_distribution,
    overlap_c,
    overlap_matrix,
    pauli_triple,
    post_measurement_state,
    resolve_bases,
    save_basis,
)
from qmaeur.rng import Rng
from qmaeur.states import density_matrix, pure_state, random_hermitian, random_state


def random_basis(rng, dim, label="r"):
    """Random orthonormal basis: eigenvectors of a random Hermitian matrix."""
    return measurement_basis(label, eig_hermitian(random_hermitian(rng, dim)).vectors)


def test_builtin_bases_orthonormal():
    for name in ("pauli-x", "pauli-y", "pauli-z", "computational"):
        v = builtin_basis(name).vectors
        assert np.allclose(dagger(v) @ v, np.eye(2), atol=1e-12)
    with pytest.raises(ValidationError, match="unknown basis"):
        builtin_basis("pauli-w")


def test_measurement_basis_validation():
    with pytest.raises(ValidationError):
        measurement_basis("bad", np.array([[1.0, 1.0], [0.0, 1.0]]))
    ok = measurement_basis("ok", np.eye(3))
    assert ok.vectors.shape == (3, 3)


def test_overlap_c_pauli_pairs():
    x, y, z = pauli_triple()
    assert overlap_c(x, z) == pytest.approx(0.5, abs=1e-12)
    assert overlap_c(x, y) == pytest.approx(0.5, abs=1e-12)
    assert overlap_c(y, z) == pytest.approx(0.5, abs=1e-12)
    assert overlap_c(z, z) == pytest.approx(1.0, abs=1e-12)
    assert overlap_c(builtin_basis("computational"), x) == pytest.approx(0.5, abs=1e-12)


def test_overlap_matrix_doubly_stochastic():
    for seed in range(10):
        rng = Rng(seed)
        dim = 2 + seed % 3
        g = overlap_matrix(random_basis(rng, dim, "a"), random_basis(rng.child(1), dim, "b"))
        assert np.allclose(g.sum(axis=0), 1.0, atol=1e-10)
        assert np.allclose(g.sum(axis=1), 1.0, atol=1e-10)
        assert overlap_c(random_basis(Rng(seed), dim), random_basis(Rng(seed), dim)) == pytest.approx(
            1.0, abs=1e-10
        )


def test_overlap_c_matches_brute_force():
    for seed in range(10):
        rng = Rng(seed + 50)
        b1 = random_basis(rng, 3, "a")
        b2 = random_basis(rng.child(7), 3, "b")
        brute = max(
            abs(np.vdot(b1.vectors[:, j], b2.vectors[:, k])) ** 2
            for j in range(3)
            for k in range(3)
        )
        assert overlap_c(b1, b2) == pytest.approx(brute, abs=1e-14)


def brute_force_b(bases):
    """Chained overlap by explicit nested loops over all index paths."""
    mats = [
        np.abs(dagger(bases[i].vectors) @ bases[i + 1].vectors) ** 2
        for i in range(len(bases) - 1)
    ]
    dims = [g.shape for g in mats]
    best = -np.inf
    last_dim = dims[-1][1]
    for k_last in range(last_dim):
        total = 0.0
        middle_ranges = [range(g.shape[0]) for g in mats[1:]]
        for middles in itertools.product(*middle_ranges):
            path = list(middles) + [k_last]
            prod = 1.0
            for i in range(1, len(mats)):
                prod *= mats[i][path[i - 1], path[i]]
            prod *= max(mats[0][k1, path[0]] for k1 in range(mats[0].shape[0]))
            total += prod
        best = max(best, total)
    return best


def test_channel_constant_b_pauli_and_pairs():
    x, y, z = pauli_triple()
    assert channel_constant_b((x, y, z)) == pytest.approx(0.5, abs=1e-12)
    assert channel_constant_b((x, z)) == pytest.approx(overlap_c(x, z), abs=1e-14)
    assert channel_constant_b((z, z)) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(OutOfRange):
        channel_constant_b((x,))
    with pytest.raises(OutOfRange):
        channel_constant_b((x, z), order="sorted")


def test_channel_constant_b_matches_brute_force():
    for seed in range(15):
        rng = Rng(seed + 300)
        bases = tuple(random_basis(rng.child(i), 2, f"b{i}") for i in range(3))
        assert channel_constant_b(bases) == pytest.approx(brute_force_b(bases), abs=1e-13)


def test_channel_constant_b_minimized():
    for seed in range(8):
        rng = Rng(seed + 900)
        bases = tuple(random_basis(rng.child(i), 2, f"b{i}") for i in range(4))
        given = channel_constant_b(bases)
        best = channel_constant_b(bases, order="minimized")
        assert best <= given + 1e-14
        explicit = min(brute_force_b(perm) for perm in itertools.permutations(bases))
        assert best == pytest.approx(explicit, abs=1e-13)


def test_post_measurement_state_properties():
    z = builtin_basis("pauli-z")
    x = builtin_basis("pauli-x")
    for seed in range(8):
        rho = random_state(Rng(seed), (2, 2))
        post = post_measurement_state(rho, x, measured=0)
        assert np.trace(post.matrix).real == pytest.approx(1.0, abs=1e-10)
        # Measuring removes coherence: the map is idempotent.
        twice = post_measurement_state(post, x, measured=0)
        assert np.allclose(twice.matrix, post.matrix, atol=1e-12)
        # In the measured basis, cross-outcome blocks vanish.
        v = np.kron(x.vectors, np.eye(2))
        blocks = dagger(v) @ post.matrix @ v
        assert np.allclose(blocks[0:2, 2:4], 0.0, atol=1e-12)

    ket0 = pure_state([1.0, 0.0], (2,))
    assert np.allclose(post_measurement_state(ket0, z).matrix, ket0.matrix)
    assert np.allclose(post_measurement_state(ket0, x).matrix, np.eye(2) / 2.0)


def test_outcome_distribution():
    ket0 = pure_state([1.0, 0.0], (2,))
    assert np.allclose(outcome_distribution(ket0, builtin_basis("pauli-z")), [1.0, 0.0])
    assert np.allclose(outcome_distribution(ket0, builtin_basis("pauli-x")), [0.5, 0.5])
    for seed in range(8):
        rho = random_state(Rng(seed), (2, 2))
        p = outcome_distribution(rho, builtin_basis("pauli-y"), measured=0)
        assert p.sum() == pytest.approx(1.0, abs=1e-10)
        assert np.all(p >= 0.0)


def test_basis_json_round_trip(tmp_path):
    basis = random_basis(Rng(4), 3, "custom")
    path = tmp_path / "basis.json"
    save_basis(basis, str(path))
    back = load_basis(str(path))
    assert back.label == basis.label
    assert np.allclose(back.vectors, basis.vectors, atol=1e-15)

    bad = tmp_path / "bad.json"
    bad.write_text("[not json")
    with pytest.raises(ParseError):
        load_basis(str(bad))


def test_resolve_bases(tmp_path):
    bases = resolve_bases("pauli-x,pauli-z")
    assert [b.label for b in bases] == ["pauli-x", "pauli-z"]

    path = tmp_path / "mine.json"
    save_basis(random_basis(Rng(9), 2, "mine"), str(path))
    mixed = resolve_bases(f"pauli-y, {path}")
    assert [b.label for b in mixed] == ["pauli-y", "mine"]

    with pytest.raises(ParseError):
        resolve_bases(" , ")
