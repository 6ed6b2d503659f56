"""Multipartite density matrices: construction, reduction, random ensembles.

A state lives on a register of subsystems with dimensions dims = (d0, d1, ...);
by convention subsystem 0 is the measured party and subsystems 1..n are the
memories. Matrices are numpy complex128 in the row-major kron ordering matching
linalg.kron (leftmost factor = subsystem 0).

File format for states is JSON:

    {"dims": [2, 2], "matrix": [[[re, im], ...], ...]}

where "matrix" is the full density matrix as a list of rows, each entry a
[re, im] pair.
"""

import json
import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateDraw,
    InvalidSubsystem,
    OutOfRange,
    ParseError,
    ValidationError,
)
from .linalg import HERMITIAN_ATOL, dagger, eig_hermitian, max_abs
from .rng import Rng

# Validator tolerances: trace distance from 1 and allowed negative eigenvalue.
TRACE_ATOL = 1e-10
PSD_ATOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """A density matrix together with the subsystem dimensions it lives on."""

    dims: tuple
    matrix: np.ndarray

    @property
    def dim(self):
        """Total Hilbert-space dimension."""
        return int(np.prod(self.dims))

    @property
    def n_parties(self):
        return len(self.dims)


def density_matrix(matrix, dims, check_psd=True):
    """Validated DensityMatrix constructor.

    Checks shape against dims, Hermiticity within 1e-10, unit trace within
    1e-10 and (optionally) positive semidefiniteness, allowing eigenvalues
    down to -1e-10. Raises ValidationError naming the failed check.
    """
    dims = tuple(int(d) for d in dims)
    if any(d < 2 for d in dims):
        raise ValidationError(f"dims: every subsystem dimension must be >= 2, got {dims}")
    m = np.asarray(matrix, dtype=complex)
    d = int(np.prod(dims))
    if m.shape != (d, d):
        raise ValidationError(f"matrix: expected shape {(d, d)} for dims {dims}, got {m.shape}")
    if max_abs(m - dagger(m)) > HERMITIAN_ATOL:
        raise ValidationError("matrix: not Hermitian within 1e-10")
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValidationError(f"matrix: trace {tr:.12g} not 1 within 1e-10")
    if check_psd:
        w = eig_hermitian(m).values
        if w[0] < -PSD_ATOL:
            raise ValidationError(f"matrix: negative eigenvalue {w[0]:.3e} below -1e-10")
    return DensityMatrix(dims, m)


def pure_state(ket, dims):
    """Density matrix |ket><ket| of a normalized state vector."""
    ket = np.asarray(ket, dtype=complex).reshape(-1)
    nrm = np.linalg.norm(ket)
    if abs(nrm - 1.0) > 1e-10:
        raise ValidationError(f"ket: norm {nrm:.12g} not 1 within 1e-10")
    return DensityMatrix(tuple(int(d) for d in dims), np.outer(ket, ket.conj()))


def _check_subsystems(rho, keep):
    keep = tuple(int(k) for k in keep)
    if len(keep) == 0:
        raise InvalidSubsystem("keep set must not be empty")
    if len(set(keep)) != len(keep):
        raise InvalidSubsystem(f"keep set has duplicates: {keep}")
    for k in keep:
        if k < 0 or k >= rho.n_parties:
            raise InvalidSubsystem(f"subsystem {k} out of range for dims {rho.dims}")
    return tuple(sorted(keep))


def partial_trace(rho, keep):
    """Reduced state on the given subsystems, original relative order kept.

    Parameters
    ----------
    rho : DensityMatrix
    keep : iterable of int
        Subsystem indices to retain. The rest are traced out.
    """
    keep = _check_subsystems(rho, keep)
    dims = rho.dims
    n = len(dims)
    if len(keep) == n:
        return rho
    t = rho.matrix.reshape(dims + dims)
    traced = [k for k in range(n) if k not in keep]
    # Trace out highest-index subsystems first so earlier axis numbers stay valid.
    for k in sorted(traced, reverse=True):
        t = np.trace(t, axis1=k, axis2=k + (t.ndim // 2))
    d = int(np.prod([dims[k] for k in keep]))
    return DensityMatrix(tuple(dims[k] for k in keep), t.reshape(d, d))


def reorder_subsystems(rho, perm):
    """Relabel subsystems: new subsystem k is old subsystem perm[k].

    Parameters
    ----------
    rho : DensityMatrix
    perm : iterable of int
        Permutation of range(n_parties). reorder_subsystems(rho, (2, 1, 0))
        swaps the outermost and innermost tensor factors.
    """
    perm = tuple(int(k) for k in perm)
    n = rho.n_parties
    if sorted(perm) != list(range(n)):
        raise InvalidSubsystem(f"perm {perm} is not a permutation of range({n})")
    if perm == tuple(range(n)):
        return rho
    t = rho.matrix.reshape(rho.dims + rho.dims)
    t = t.transpose(perm + tuple(n + k for k in perm))
    dims = tuple(rho.dims[k] for k in perm)
    return DensityMatrix(dims, t.reshape(rho.dim, rho.dim))


def random_probabilities(rng, k):
    """Non-increasing probability vector of length k from a seeded generator.

    Draws q_1 = u_1 and q_{j+1} = u_{j+1} * q_j with independent uniforms on
    [0, 1), then normalizes p = q / sum(q). The recurrence makes the vector
    non-increasing by construction. Raises DegenerateDraw if the draws
    underflow to an all-zero vector repeatedly.
    """
    if k < 1:
        raise OutOfRange(f"k must be >= 1, got {k}")
    for _ in range(8):
        q = np.empty(k)
        acc = 1.0
        for j in range(k):
            acc *= rng.uniform(0.0, 1.0)
            q[j] = acc
        s = q.sum()
        if s > 0.0:
            p = q / s
            return p / p.sum()
    raise DegenerateDraw("probability draws underflowed to zero 8 times in a row")


def random_hermitian(rng, dim):
    """Random Hermitian matrix with entries of order one.

    A real dim x dim matrix R with uniform entries on [-1, 1) is split into
    diagonal D, strict upper triangle U and strict lower triangle L; the
    result is D + (U^T + U) + i(L - L^T), which is Hermitian exactly.
    """
    if dim < 1:
        raise OutOfRange(f"dim must be >= 1, got {dim}")
    r = rng.uniform_matrix(-1.0, 1.0, (dim, dim))
    d = np.diag(np.diag(r))
    u = np.triu(r, 1)
    l = np.tril(r, -1)
    return d + (u.T + u) + 1j * (l - l.T)


def random_state(rng, dims):
    """Random mixed state on a register: random spectrum in a random eigenbasis.

    Probabilities are drawn first (random_probabilities), then a random
    Hermitian matrix whose eigenvectors (ascending eigenvalue order) become
    the eigenbasis: rho = V diag(p) V^dagger. Output is deterministic in the
    generator state and passes the density-matrix validator.
    """
    dims = tuple(int(d) for d in dims)
    d = int(np.prod(dims))
    p = random_probabilities(rng, d)
    h = random_hermitian(rng, d)
    v = eig_hermitian(h).vectors
    m = (v * p) @ dagger(v)
    m = 0.5 * (m + dagger(m))
    return density_matrix(m, dims, check_psd=False)


def family_mixed_two_qubit(p, alpha):
    """One-parameter family p|s><s| + (1-p)/4 I with |s> = cos(a)|00> + sin(a)|11>.

    p is a mixing weight in [0, 1]; alpha sets the entanglement of the pure
    part (alpha = pi/4 gives a Bell state).
    """
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"p must be in [0, 1], got {p}")
    ket = np.zeros(4, dtype=complex)
    ket[0] = np.cos(alpha)
    ket[3] = np.sin(alpha)
    m = p * np.outer(ket, ket.conj()) + (1.0 - p) * np.eye(4) / 4.0
    return DensityMatrix((2, 2), m)


def generalized_w(alpha, beta):
    """Pure three-qubit W-family state.

    |w> = sin(a)cos(b)|001> + sin(a)sin(b)|010> + cos(a)|100>, returned as a
    density matrix on dims (2, 2, 2).
    """
    ket = np.zeros(8, dtype=complex)
    ket[1] = np.sin(alpha) * np.cos(beta)
    ket[2] = np.sin(alpha) * np.sin(beta)
    ket[4] = np.cos(alpha)
    return DensityMatrix((2, 2, 2), np.outer(ket, ket.conj()))


def _complex_from_pair(pair, where):
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(isinstance(x, (int, float)) for x in pair)
    ):
        raise ValidationError(f"{where}: expected a [re, im] pair, got {pair!r}")
    return complex(pair[0], pair[1])


def state_from_json(obj):
    """Build a validated DensityMatrix from the parsed JSON object."""
    if not isinstance(obj, dict):
        raise ValidationError("state file: top level must be an object")
    for field in ("dims", "matrix"):
        if field not in obj:
            raise ValidationError(f"state file: missing field '{field}'")
    dims = obj["dims"]
    if not isinstance(dims, list) or not all(isinstance(d, int) for d in dims):
        raise ValidationError(f"dims: expected a list of integers, got {dims!r}")
    rows = obj["matrix"]
    d = int(np.prod(dims))
    if not isinstance(rows, list) or len(rows) != d:
        raise ValidationError(f"matrix: expected {d} rows for dims {dims}")
    m = np.zeros((d, d), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise ValidationError(f"matrix row {i}: expected {d} entries")
        for j, pair in enumerate(row):
            m[i, j] = _complex_from_pair(pair, f"matrix[{i}][{j}]")
    return density_matrix(m, dims)


def state_to_json(rho):
    """JSON-serializable object in the state file format."""
    return {
        "dims": [int(d) for d in rho.dims],
        "matrix": [[[z.real, z.imag] for z in row] for row in rho.matrix],
    }


def load_state(path):
    """Read and validate a state JSON file."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read state file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return state_from_json(obj)


def save_state(rho, path):
    """Write a state JSON file atomically (temp file then rename)."""
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        json.dump(state_to_json(rho), fh)
    os.replace(tmp, path)
