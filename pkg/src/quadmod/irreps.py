"""Numerical decomposition of the regular representation into irreducibles.

For a group ring, a random Hermitian matrix averaged over the (restricted)
regular action lies in the commutant; its eigenspaces are invariant
subspaces, and a subspace is irreducible exactly when such an average is a
scalar (Schur).  Reducible pieces are split again.  For the other finite
carriers the commutant of the left regular action is the right regular
action, so a random symmetric element acting on the right plays the same
role, and irreducibility is certified by Burnside's criterion
``dim span pi(A) = d^2``.

Each class of irreducibles occurs in the regular representation with
multiplicity equal to its dimension; this is checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import Carrier, CarrierError, Complexified, GroupRing, MatrixRing
from .linalg import cluster_eigenvalues, random_hermitian
from .representations import (
    ORDER_CAP,
    BasisRepresentation,
    Representation,
    amplify_rep,
    complexify_rep,
    regular_rep,
    right_regular_matrices,
)

SCHUR_TOL = 1e-7
CLUSTER_TOL = 1e-6
CHAR_TOL = 1e-6


class SplittingError(RuntimeError):
    pass


@dataclass
class IrrepSet:
    """One representative per equivalence class of irreducible representations.

    ``characters[k, n]`` is the trace of irrep ``k`` on basis word ``n`` of the
    carrier (group element ``n`` for group rings).
    """

    carrier: Carrier
    irreps: list[BasisRepresentation]
    multiplicities: list[int]
    characters: np.ndarray
    seed: int | None = None
    info: dict = field(default_factory=dict)

    @property
    def dimensions(self) -> list[int]:
        return [r.dim for r in self.irreps]

    def __len__(self):
        return len(self.irreps)

    def __iter__(self):
        return iter(self.irreps)

    def orthogonality_residual(self) -> float:
        """``max |<chi_i, chi_j> - delta_ij|`` for the group inner product."""
        if not isinstance(self.carrier, GroupRing):
            raise CarrierError("character orthogonality is stated for group rings")
        chi = self.characters
        gram = chi @ chi.conj().T / chi.shape[1]
        return float(np.max(np.abs(gram - np.eye(len(chi)))))


def _schur_average(stack: np.ndarray, rng) -> np.ndarray:
    d = stack.shape[1]
    h = random_hermitian(d, rng)
    avg = np.einsum("nij,jk,nlk->il", stack, h, stack.conj()) / stack.shape[0]
    return (avg + avg.conj().T) / 2


def _is_scalar(m: np.ndarray, tol: float) -> bool:
    d = m.shape[0]
    off = m - np.trace(m) / d * np.eye(d)
    return float(np.max(np.abs(off))) <= tol * max(1.0, float(np.max(np.abs(m))))


def _split_group(stack: np.ndarray, rng, retries: int) -> list[np.ndarray]:
    """Orthonormal bases of irreducible subspaces for a unitary group action."""
    d = stack.shape[1]
    out = []
    todo = [np.eye(d, dtype=complex)]
    while todo:
        v = todo.pop()
        restricted = np.einsum("ji,njk,kl->nil", v.conj(), stack, v)
        for attempt in range(retries):
            avg = _schur_average(restricted, rng)
            if _is_scalar(avg, SCHUR_TOL):
                pieces = None
                break
            w, u = np.linalg.eigh(avg)
            groups = cluster_eigenvalues(w, CLUSTER_TOL * max(1.0, np.abs(w).max()))
            if len(groups) > 1:
                pieces = [v @ u[:, g] for g in groups]
                break
        else:
            raise SplittingError("commutant averaging did not split a reducible subspace")
        if pieces is None:
            out.append(v)
        else:
            todo.extend(pieces)
    return out


def _burnside_irreducible(stack: np.ndarray) -> bool:
    d = stack.shape[1]
    flat = stack.reshape(stack.shape[0], d * d)
    return np.linalg.matrix_rank(flat, tol=1e-8 * max(1.0, np.abs(flat).max())) == d * d


def _split_algebra(carrier: Carrier, regular: BasisRepresentation, rng, retries: int) -> list[np.ndarray]:
    right = right_regular_matrices(carrier)
    keys = list(right)
    for attempt in range(retries):
        coeffs = rng.standard_normal(len(keys)) + 1j * rng.standard_normal(len(keys))
        m = sum(c * right[k] for c, k in zip(coeffs, keys))
        # right multiplication by h + h^* is Hermitian for the trace form
        h = m + m.conj().T
        w, u = np.linalg.eigh(h)
        groups = cluster_eigenvalues(w, CLUSTER_TOL * max(1.0, np.abs(w).max()))
        pieces = [u[:, g] for g in groups]
        if all(_burnside_irreducible(regular.restrict(p).stack) for p in pieces):
            return pieces
    raise SplittingError("right-regular splitting did not produce irreducible pieces")


def decompose_irreps(carrier: Carrier, seed: int = 0, cap: int = ORDER_CAP, retries: int = 8) -> IrrepSet:
    """Irreducible representations of a finite carrier, one per equivalence class."""
    rng = np.random.default_rng(seed)
    reg = regular_rep(carrier, cap)
    if isinstance(carrier, GroupRing):
        pieces = _split_group(reg.stack, rng, retries)
    else:
        pieces = _split_algebra(carrier, reg, rng, retries)

    classes: list[dict] = []
    for v in pieces:
        rep = reg.restrict(v)
        chi = np.trace(rep.stack, axis1=1, axis2=2)
        for cls in classes:
            if cls["rep"].dim == rep.dim and np.max(np.abs(cls["chi"] - chi)) <= CHAR_TOL * reg.dim:
                cls["count"] += 1
                break
        else:
            classes.append({"rep": rep, "chi": chi, "count": 1})

    for cls in classes:
        if cls["count"] != cls["rep"].dim:
            raise SplittingError(
                f"irrep of dimension {cls['rep'].dim} occurs {cls['count']} times in the regular representation"
            )
    total = sum(c["rep"].dim ** 2 for c in classes)
    if total != len(carrier.basis()):
        raise SplittingError(f"sum of squared dimensions {total} != {len(carrier.basis())}")

    def order_key(cls):
        chi = np.round(cls["chi"], 6) + 0.0
        return (cls["rep"].dim, tuple((-x.real, -x.imag) for x in chi))

    classes.sort(key=order_key)
    irreps = []
    for n, cls in enumerate(classes):
        rep = cls["rep"]
        rep.label = f"irrep{n}"
        rep.irreducible = True
        irreps.append(rep)
    chars = np.array([c["chi"] for c in classes])
    return IrrepSet(carrier, irreps, [c["count"] for c in classes], chars, seed)


def irreducibility_residual(rep: BasisRepresentation, rng=None) -> float:
    """Deviation from a scalar of a random Hermitian averaged over the action (group rings),
    or ``0``/``1`` from Burnside's rank criterion otherwise."""
    if isinstance(rep.carrier, GroupRing):
        rng = np.random.default_rng(0) if rng is None else rng
        avg = _schur_average(rep.stack, rng)
        d = avg.shape[0]
        return float(np.max(np.abs(avg - np.trace(avg) / d * np.eye(d))))
    return 0.0 if _burnside_irreducible(rep.stack) else 1.0


def model_irreps(carrier: Carrier, seed: int = 0, cap: int = ORDER_CAP) -> list[Representation]:
    """Irreducibles built from those of the innermost group ring.

    ``Mat_n(A)``: amplifications of the irreducibles of ``A``.
    ``A°``: both extensions ``x + i y -> psi(x) +- i psi(y)`` of each irreducible of ``A``.
    """
    if isinstance(carrier, GroupRing):
        return list(decompose_irreps(carrier, seed, cap))
    if isinstance(carrier, MatrixRing):
        if not carrier.inner.is_finite:
            raise CarrierError("matrix rings over free carriers have no finite irrep list")
        return [amplify_rep(r, carrier.n, carrier) for r in model_irreps(carrier.inner, seed, cap)]
    if isinstance(carrier, Complexified):
        if not carrier.inner.is_finite:
            raise CarrierError("complexified free carriers have no finite irrep list")
        inner = model_irreps(carrier.inner, seed, cap)
        return [complexify_rep(r, s, carrier) for r in inner for s in (1, -1)]
    raise CarrierError(f"{carrier!r} has no finite irrep list")
