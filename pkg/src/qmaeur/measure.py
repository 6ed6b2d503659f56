"""Projective rank-1 measurements: bases, overlaps, and measurement channels.

A measurement is an orthonormal basis of the measured subsystem, stored as a
unitary matrix whose columns are the basis vectors. Built-in qubit bases are
available by name: "pauli-x", "pauli-y", "pauli-z" (eigenbases of the Pauli
operators) and "computational" (alias of the z eigenbasis).

File format for a basis is JSON:

    {"label": "...", "vectors": [[[re, im], ...], ...]}

where "vectors" is the list of basis vectors, each a list of [re, im]
components.
"""

import itertools
import json
import os
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, OutOfRange, ParseError, ValidationError
from .linalg import dagger, kron, max_abs
from .states import DensityMatrix, partial_trace

ORTHONORMAL_ATOL = 1e-10

_INV_SQRT2 = 1.0 / np.sqrt(2.0)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class MeasurementBasis:
    """Labeled orthonormal basis; vectors are the columns of `vectors`."""

    label: str
    vectors: np.ndarray

    @property
    def dim(self):
        return self.vectors.shape[0]


def measurement_basis(label, vectors):
    """Validated MeasurementBasis constructor (columns orthonormal within 1e-10)."""
    v = np.asarray(vectors, dtype=complex)
    if v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise ValidationError(f"basis {label!r}: expected a square matrix, got shape {v.shape}")
    gram = dagger(v) @ v
    if max_abs(gram - np.eye(v.shape[0])) > ORTHONORMAL_ATOL:
        raise ValidationError(f"basis {label!r}: columns are not orthonormal within 1e-10")
    return MeasurementBasis(str(label), v)


_BUILTIN = {
    "pauli-x": np.array([[_INV_SQRT2, _INV_SQRT2], [_INV_SQRT2, -_INV_SQRT2]], dtype=complex),
    "pauli-y": np.array([[_INV_SQRT2, _INV_SQRT2], [1j * _INV_SQRT2, -1j * _INV_SQRT2]], dtype=complex),
    "pauli-z": np.eye(2, dtype=complex),
    "computational": np.eye(2, dtype=complex),
}


def builtin_basis(name):
    """One of the named qubit bases; raises ValidationError for unknown names."""
    if name not in _BUILTIN:
        known = ", ".join(sorted(_BUILTIN))
        raise ValidationError(f"unknown basis name {name!r} (known: {known})")
    return MeasurementBasis(name, _BUILTIN[name].copy())


def pauli_triple():
    """The (pauli-x, pauli-y, pauli-z) eigenbasis triple."""
    return (builtin_basis("pauli-x"), builtin_basis("pauli-y"), builtin_basis("pauli-z"))


def _common_dim(bases):
    dims = {b.dim for b in bases}
    if len(dims) != 1:
        raise DimensionMismatch(f"bases act on different dimensions: {sorted(dims)}")
    return dims.pop()


def overlap_c(b1, b2):
    """Largest squared overlap max_{j,k} |<v1_j|v2_k>|^2 between two bases.

    Always in [1/d, 1]: 1/d exactly for mutually unbiased bases, 1 when the
    bases share a vector.
    """
    _common_dim((b1, b2))
    g = dagger(b1.vectors) @ b2.vectors
    return float(np.max(np.abs(g) ** 2))


def overlap_matrix(b1, b2):
    """All squared overlaps as a matrix G[j, k] = |<v1_j|v2_k>|^2."""
    _common_dim((b1, b2))
    g = dagger(b1.vectors) @ b2.vectors
    return np.abs(g) ** 2


def channel_constant_b(bases, order="given"):
    """Overlap chain constant b for an ordered collection of m >= 2 bases.

    With G_i the squared-overlap matrix between bases i and i+1,

        b = max_{k_m} sum_{k_2..k_{m-1}} [max_{k_1} G_1[k_1, k_2]]
            * prod_{i=2}^{m-1} G_i[k_i, k_{i+1}]

    which reduces to the pairwise overlap c for m = 2 and to 1/d when all
    bases are pairwise mutually unbiased. The value depends on the ordering;
    order="given" uses the order as passed, order="minimized" exhaustively
    minimizes over all orderings (only allowed for m <= 5).
    """
    bases = tuple(bases)
    if len(bases) < 2:
        raise OutOfRange(f"channel_constant_b needs at least 2 bases, got {len(bases)}")
    _common_dim(bases)
    if order == "given":
        return _chain_b(bases)
    if order == "minimized":
        if len(bases) > 5:
            raise OutOfRange("order='minimized' is exhaustive and limited to m <= 5 bases")
        return min(_chain_b(perm) for perm in itertools.permutations(bases))
    raise OutOfRange(f"order must be 'given' or 'minimized', got {order!r}")


def _chain_b(bases):
    # w[k_2] = max_{k_1} G_1[k_1, k_2], then contract the chain left to right.
    w = overlap_matrix(bases[0], bases[1]).max(axis=0)
    for i in range(1, len(bases) - 1):
        w = w @ overlap_matrix(bases[i], bases[i + 1])
    return float(w.max())


def _lift(op, rho, measured):
    """Embed a single-subsystem operator at register position `measured`."""
    dims = rho.dims
    pre = int(np.prod(dims[:measured])) if measured > 0 else 1
    post = int(np.prod(dims[measured + 1 :])) if measured < len(dims) - 1 else 1
    factors = []
    if pre > 1:
        factors.append(np.eye(pre))
    factors.append(op)
    if post > 1:
        factors.append(np.eye(post))
    return kron(*factors) if len(factors) > 1 else np.asarray(op, dtype=complex)


def post_measurement_state(rho, basis, measured=0):
    """State after measuring `basis` on subsystem `measured`, outcome unread.

    Applies the projective channel rho -> sum_k P_k rho P_k with
    P_k = |v_k><v_k| lifted to the full register. The result is block
    diagonal in the measured basis and leaves all other marginals unchanged.
    """
    dims = rho.dims
    if not 0 <= measured < len(dims):
        raise DimensionMismatch(f"measured subsystem {measured} out of range for dims {dims}")
    if basis.dim != dims[measured]:
        raise DimensionMismatch(
            f"basis dimension {basis.dim} does not match subsystem dimension {dims[measured]}"
        )
    v = basis.vectors
    out = np.zeros_like(rho.matrix)
    for k in range(basis.dim):
        proj = np.outer(v[:, k], v[:, k].conj())
        p = _lift(proj, rho, measured)
        out += p @ rho.matrix @ p
    return DensityMatrix(dims, out)


def outcome_distribution(rho, basis, measured=0):
    """Outcome probabilities p_k = <v_k| rho_measured |v_k> of the measurement.

    Clamps float noise below zero and returns a vector summing to 1 within
    1e-10.
    """
    red = partial_trace(rho, (measured,))
    if basis.dim != red.dim:
        raise DimensionMismatch(
            f"basis dimension {basis.dim} does not match subsystem dimension {red.dim}"
        )
    p = np.real(np.diag(dagger(basis.vectors) @ red.matrix @ basis.vectors)).copy()
    p[p < 0.0] = 0.0
    return p


def basis_from_json(obj):
    """Build a validated MeasurementBasis from the parsed JSON object."""
    if not isinstance(obj, dict):
        raise ValidationError("basis file: top level must be an object")
    for field in ("label", "vectors"):
        if field not in obj:
            raise ValidationError(f"basis file: missing field '{field}'")
    label = obj["label"]
    if not isinstance(label, str):
        raise ValidationError(f"label: expected a string, got {label!r}")
    vecs = obj["vectors"]
    if not isinstance(vecs, list) or not vecs:
        raise ValidationError("vectors: expected a non-empty list of basis vectors")
    d = len(vecs)
    cols = np.zeros((d, d), dtype=complex)
    for k, vec in enumerate(vecs):
        if not isinstance(vec, list) or len(vec) != d:
            raise ValidationError(f"vectors[{k}]: expected {d} components")
        for i, pair in enumerate(vec):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValidationError(f"vectors[{k}][{i}]: expected a [re, im] pair")
            cols[i, k] = complex(pair[0], pair[1])
    return measurement_basis(label, cols)


def basis_to_json(basis):
    """JSON-serializable object in the basis file format."""
    return {
        "label": basis.label,
        "vectors": [
            [[z.real, z.imag] for z in basis.vectors[:, k]] for k in range(basis.dim)
        ],
    }


def load_basis(path):
    """Read and validate a basis JSON file."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read basis file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return basis_from_json(obj)


def save_basis(basis, path):
    """Write a basis JSON file atomically (temp file then rename)."""
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        json.dump(basis_to_json(basis), fh)
    os.replace(tmp, path)


def resolve_bases(spec):
    """Turn a comma-separated list of names or JSON paths into bases.

    Each item is first looked up among the built-in basis names; anything
    else is treated as a path to a basis JSON file.
    """
    names = [s.strip() for s in str(spec).split(",") if s.strip()]
    if not names:
        raise ParseError("empty basis list")
    out = []
    for name in names:
        if name in _BUILTIN:
            out.append(builtin_basis(name))
        else:
            out.append(load_basis(name))
    return tuple(out)
