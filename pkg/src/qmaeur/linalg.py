"""Dense complex linear algebra used by the rest of the package.

Everything operates on numpy complex128 arrays. The only nontrivial routine
is `eig_hermitian`, a cyclic Jacobi eigensolver for complex Hermitian
matrices. It is deterministic (fixed sweep order, fixed tie-breaking, fixed
eigenvector phase convention), which the reproducibility guarantees elsewhere
in the package rely on; numpy.linalg.eigh is deliberately not used outside
the test suite, where it serves as an independent oracle.
"""

from typing import NamedTuple

import numpy as np

from .errors import NoConvergence, NotHermitian, NotSquare

# Hermitian acceptance tolerance on max|H - H^dagger| entries.
HERMITIAN_ATOL = 1e-10
# Off-diagonal Frobenius norm target for Jacobi, scaled by max(1, ||H||_F).
JACOBI_OFF_TOL = 1e-12
# Hard cap on full cyclic sweeps before giving up.
JACOBI_MAX_SWEEPS = 100


class EigenDecomposition(NamedTuple):
    """Eigenvalues in ascending order and matching unit eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def dagger(a):
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def max_abs(a):
    """Largest entry magnitude, 0.0 for an empty array."""
    a = np.asarray(a)
    return 0.0 if a.size == 0 else float(np.max(np.abs(a)))


def frobenius(a):
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(a)))


def is_hermitian(a, atol=HERMITIAN_ATOL):
    """True when max|a - a^dagger| <= atol."""
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and max_abs(a - dagger(a)) <= atol


def kron(*factors):
    """Kronecker product of one or more matrices, left factor leftmost.

    The ordering convention matches the register convention used throughout:
    kron(a, b) acts on a composite space whose first (leftmost) subsystem is
    the one `a` acts on.
    """
    if not factors:
        raise ValueError("kron needs at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def trace(a):
    """Matrix trace; raises NotSquare for non-square input."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"trace needs a square matrix, got shape {a.shape}")
    return complex(np.trace(a))


def _jacobi_rotation(app, aqq, apq):
    """Rotation (c, s, phase) zeroing the (p, q) entry of a 2x2 Hermitian block.

    app and aqq are the real diagonal entries, apq the complex off-diagonal.
    The unitary is U = [[c, -s*phase], [s*conj(phase), c]] with c^2 + s^2 = 1
    and phase = apq / |apq|; then (U^dagger A U)[p, q] = 0.
    """
    mag = abs(apq)
    phase = apq / mag
    tau = (app - aqq) / (2.0 * mag)
    if tau >= 0.0:
        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    return c, t * c, phase


def eig_hermitian(h, off_tol=JACOBI_OFF_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Full eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.

    Parameters
    ----------
    h : (n, n) array_like
        Hermitian matrix (max|h - h^dagger| <= 1e-10, else NotHermitian).
    off_tol : float
        Convergence target for the off-diagonal Frobenius norm, applied
        relative to max(1, ||h||_F).
    max_sweeps : int
        Cap on full cyclic sweeps; NoConvergence beyond it.

    Returns
    -------
    EigenDecomposition
        values: real eigenvalues, ascending, ties kept in sweep order.
        vectors: unitary matrix whose k-th column is the eigenvector of
        values[k]. Each column's largest-magnitude component (lowest index on
        ties) is made real and positive, so the output is deterministic.

    Notes
    -----
    Sweeps run over pairs (p, q), p < q, in row-major order. A pair is
    rotated only when its magnitude alone could keep the off-diagonal norm
    above target; a sweep that rotates nothing has therefore converged.
    """
    a = np.array(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"eig_hermitian needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if max_abs(a - dagger(a)) > HERMITIAN_ATOL:
        raise NotHermitian("matrix is not Hermitian within 1e-10")

    v = np.eye(n, dtype=complex)
    if n == 1:
        return EigenDecomposition(np.array([a[0, 0].real]), v)

    tol = off_tol * max(1.0, frobenius(a))
    # Per-element skip threshold: if every off-diagonal entry is below it,
    # the total off-diagonal norm is already at most tol.
    elem2 = tol * tol / (n * (n - 1))
    offdiag = ~np.eye(n, dtype=bool)

    sweeps = 0
    while True:
        off2 = float(np.sum(np.abs(a[offdiag]) ** 2))
        if off2 <= tol * tol:
            break
        if sweeps >= max_sweeps:
            raise NoConvergence(
                f"Jacobi sweep cap {max_sweeps} reached, off-diagonal norm {np.sqrt(off2):.3e}"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if (apq.real * apq.real + apq.imag * apq.imag) <= elem2:
                    continue
                c, s, ph = _jacobi_rotation(a[p, p].real, a[q, q].real, apq)
                cph = ph.conjugate()
                # a <- U^dagger a U, applied as column then row updates
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * cph * col_q
                a[:, q] = -s * ph * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * ph * row_q
                a[q, :] = -s * cph * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                # accumulate v <- v U
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p + s * cph * vcol_q
                v[:, q] = -s * ph * vcol_p + c * vcol_q

    values = np.diagonal(a).real.copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = v[:, order]
    # Phase convention: make each column's largest-magnitude component
    # (lowest index on ties) real and positive.
    for k in range(n):
        col = vectors[:, k]
        i = int(np.argmax(np.abs(col)))
        piv = col[i]
        vectors[:, k] = col * (piv.conjugate() / abs(piv))
    return EigenDecomposition(values, vectors)
