"""Dense Hermitian linear algebra shared by the representation layer."""

from __future__ import annotations

import numpy as np

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-8

YES, NO, MARGINAL = "yes", "no", "marginal"


class NotHermitian(ValueError):
    pass


def asymmetry(m: np.ndarray) -> float:
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m - m.conj().T)))


def check_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitian(f"square matrix expected, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NotHermitian("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    if asymmetry(m) > tol * scale:
        raise NotHermitian(f"matrix is not Hermitian (asymmetry {asymmetry(m):.3e})")
    return m


def hermitian_eig(m: np.ndarray, tol: float = HERMITIAN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and a unitary eigenvector matrix of a Hermitian matrix.

    Backed by LAPACK ``heevd`` through :func:`numpy.linalg.eigh`; the input is
    symmetrised after the Hermitian check so round-off asymmetry does not leak.
    """
    m = check_hermitian(m, tol)
    w, v = np.linalg.eigh((m + m.conj().T) / 2)
    return w, v


def min_eigenvalue(m: np.ndarray) -> float:
    m = np.asarray(m, dtype=complex)
    if m.shape[0] == 0:
        return np.inf
    return float(np.linalg.eigvalsh((m + m.conj().T) / 2)[0])


def operator_norm(m: np.ndarray) -> float:
    """Largest singular value, i.e. ``sqrt(max eig(m^† m))``."""
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def psd_status(min_eig: float, tol: float = PSD_TOL) -> str:
    """``yes`` if ``>= -tol``, ``no`` if ``< -10 tol``, else ``marginal``."""
    if min_eig >= -tol:
        return YES
    if min_eig < -10 * tol:
        return NO
    return MARGINAL


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_hermitian(d: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (z + z.conj().T) / 2


def cluster_eigenvalues(w: np.ndarray, tol: float) -> list[np.ndarray]:
    """Index groups of consecutive (sorted) eigenvalues closer than ``tol``."""
    groups = []
    start = 0
    for k in range(1, len(w) + 1):
        if k == len(w) or w[k] - w[k - 1] > tol:
            groups.append(np.arange(start, k))
            start = k
    return groups
