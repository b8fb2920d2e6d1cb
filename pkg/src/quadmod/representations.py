"""Finite-dimensional *-representations of the carriers.

A representation sends every element of a carrier to a complex matrix,
additively, multiplicatively and with ``pi(a^*) = pi(a)^†``.  It is stored by
the images it needs: group elements (or basis words of a finite carrier), or
the letters of a free *-algebra.  Representations may be antilinear in the
scalars (``pi(i a) = -i pi(a)``); entrywise conjugation produces such maps and
they are *-ring homomorphisms all the same.

This is the only inexact layer: exact coefficients are converted to floats
when an element is applied.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from .algebra import (
    Carrier,
    CarrierError,
    Complexified,
    FreeStar,
    GroupRing,
    MatrixRing,
    StarElement,
)
from .linalg import PSD_TOL, YES, NO, MARGINAL, min_eigenvalue, psd_status

ORDER_CAP = 64


class Representation:
    """Base class.  Subclasses provide :meth:`basis_image`."""

    carrier: Carrier
    dim: int
    antilinear: bool = False
    irreducible: bool | None = None
    label: str = ""

    def basis_image(self, key) -> np.ndarray:
        raise NotImplementedError

    def apply(self, a: StarElement) -> np.ndarray:
        if a.carrier != self.carrier:
            raise CarrierError(f"element on {a.carrier!r} applied to a representation of {self.carrier!r}")
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for key, c in a._terms.items():
            z = complex(c)
            if self.antilinear:
                z = z.conjugate()
            out += z * self.basis_image(key)
        return out

    __call__ = apply

    def conjugate(self) -> Representation:
        raise NotImplementedError

    def unitary_conjugate(self, u: np.ndarray) -> Representation:
        """The representation ``a -> u^† pi(a) u``."""
        raise NotImplementedError

    @property
    def unital(self) -> bool:
        return bool(np.allclose(self.apply(self.carrier.one()), np.eye(self.dim), atol=1e-9))


class BasisRepresentation(Representation):
    """Images of every basis word of a finite carrier (group elements for group rings)."""

    def __init__(self, carrier: Carrier, images: Mapping, antilinear: bool = False, label: str = "",
                 irreducible: bool | None = None):
        if not carrier.is_finite:
            raise CarrierError("basis representations need a finite carrier")
        self.carrier = carrier
        self.keys = carrier.basis()
        self._index = {k: n for n, k in enumerate(self.keys)}
        stack = np.array([np.asarray(images[k], dtype=complex) for k in self.keys])
        if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
            raise ValueError("images must be square matrices of a common size")
        self.stack = stack
        self.stack.setflags(write=False)
        self.dim = stack.shape[1]
        self.antilinear = antilinear
        self.label = label
        self.irreducible = irreducible

    def basis_image(self, key):
        return self.stack[self._index[key]]

    def coefficient_vector(self, a: StarElement) -> np.ndarray:
        vec = np.zeros(len(self.keys), dtype=complex)
        for key, c in a._terms.items():
            vec[self._index[key]] = complex(c)
        return vec

    def apply(self, a: StarElement) -> np.ndarray:
        if a.carrier != self.carrier:
            raise CarrierError(f"element on {a.carrier!r} applied to a representation of {self.carrier!r}")
        vec = self.coefficient_vector(a)
        if self.antilinear:
            vec = vec.conj()
        return np.tensordot(vec, self.stack, axes=1)

    def apply_many(self, elements: Sequence[StarElement]) -> np.ndarray:
        vecs = np.array([self.coefficient_vector(a) for a in elements])
        if self.antilinear:
            vecs = vecs.conj()
        return np.tensordot(vecs, self.stack, axes=1)

    def images(self) -> dict:
        return {k: self.stack[n] for k, n in self._index.items()}

    def conjugate(self):
        return BasisRepresentation(self.carrier, {k: self.stack[n].conj() for k, n in self._index.items()},
                                   not self.antilinear, self.label + "~", self.irreducible)

    def unitary_conjugate(self, u):
        u = np.asarray(u, dtype=complex)
        imgs = {k: u.conj().T @ self.stack[n] @ u for k, n in self._index.items()}
        return BasisRepresentation(self.carrier, imgs, self.antilinear, self.label, self.irreducible)

    def restrict(self, v: np.ndarray, label: str = "") -> BasisRepresentation:
        """Compression ``v^† pi v`` to the range of an isometry ``v`` (an invariant subspace)."""
        imgs = np.einsum("ji,njk,kl->nil", v.conj(), self.stack, v)
        return BasisRepresentation(self.carrier, dict(zip(self.keys, imgs)), self.antilinear, label)

    def direct_sum(self, other: BasisRepresentation) -> BasisRepresentation:
        if other.carrier != self.carrier or other.antilinear != self.antilinear:
            raise CarrierError("direct sums need matching carriers and linearity")
        d1, d2 = self.dim, other.dim
        imgs = {}
        for k, n in self._index.items():
            m = np.zeros((d1 + d2, d1 + d2), dtype=complex)
            m[:d1, :d1] = self.stack[n]
            m[d1:, d1:] = other.basis_image(k)
            imgs[k] = m
        return BasisRepresentation(self.carrier, imgs, self.antilinear)

    def __repr__(self):
        return f"BasisRepresentation(dim={self.dim}, carrier={self.carrier!r}, label={self.label!r})"


class PointRepresentation(Representation):
    """Evaluation of the free *-algebra at matrices: ``x_j -> X_j``, ``x_j^* -> X_j^†``."""

    def __init__(self, carrier: FreeStar, points: Sequence[np.ndarray], antilinear: bool = False, label: str = ""):
        if not isinstance(carrier, FreeStar):
            raise CarrierError("matrix points evaluate free carriers only")
        pts = [np.atleast_2d(np.asarray(p, dtype=complex)) for p in points]
        if len(pts) != carrier.k:
            raise ValueError(f"{carrier.k} matrices expected, got {len(pts)}")
        d = pts[0].shape[0]
        if any(p.shape != (d, d) for p in pts):
            raise ValueError("matrix points must be square of a common dimension")
        self.carrier = carrier
        self.points = pts
        self.dim = d
        self.antilinear = antilinear
        self.label = label
        self._letters = pts + [p.conj().T for p in pts]
        self._cache: dict = {(): np.eye(d, dtype=complex)}

    def basis_image(self, word):
        m = self._cache.get(word)
        if m is None:
            m = self.basis_image(word[:-1]) @ self._letters[word[-1]]
            if len(self._cache) < 4096:
                self._cache[word] = m
        return m

    def conjugate(self):
        return PointRepresentation(self.carrier, [p.conj() for p in self.points], not self.antilinear, self.label + "~")

    def unitary_conjugate(self, u):
        u = np.asarray(u, dtype=complex)
        return PointRepresentation(self.carrier, [u.conj().T @ p @ u for p in self.points], self.antilinear, self.label)


class AmplifiedRepresentation(Representation):
    """``[a_ij] -> [pi(a_ij)]`` on ``Mat_n(A)`` from a representation ``pi`` of ``A``."""

    def __init__(self, carrier: MatrixRing, inner: Representation):
        if inner.carrier != carrier.inner:
            raise CarrierError("inner representation does not match the matrix ring")
        self.carrier = carrier
        self.inner = inner
        self.dim = carrier.n * inner.dim
        self.antilinear = inner.antilinear
        self.irreducible = inner.irreducible
        self.label = f"mat{carrier.n}({inner.label})"

    def basis_image(self, key):
        i, j, w = key
        e = np.zeros((self.carrier.n, self.carrier.n))
        e[i, j] = 1
        return np.kron(e, self.inner.basis_image(w))

    def conjugate(self):
        return AmplifiedRepresentation(self.carrier, self.inner.conjugate())


class ComplexifiedRepresentation(Representation):
    """``(x, y) -> pi(x) + sign * i * pi(y)`` on ``A°``; ``sign = -1`` gives the second extension."""

    def __init__(self, carrier: Complexified, inner: Representation, sign: int = 1):
        if inner.carrier != carrier.inner:
            raise CarrierError("inner representation does not match the complexification")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.carrier = carrier
        self.inner = inner
        self.sign = sign
        self.dim = inner.dim
        self.antilinear = inner.antilinear
        self.irreducible = inner.irreducible
        self.label = f"{'+' if sign > 0 else '-'}°({inner.label})"

    def basis_image(self, key):
        p, w = key
        m = self.inner.basis_image(w)
        return m * (1j * self.sign) if p else m

    def conjugate(self):
        return ComplexifiedRepresentation(self.carrier, self.inner.conjugate(), -self.sign)


def materialize(rep: Representation) -> BasisRepresentation:
    """Basis images of a representation of a finite carrier, for fast evaluation."""
    if isinstance(rep, BasisRepresentation):
        return rep
    return BasisRepresentation(rep.carrier, {k: rep.basis_image(k) for k in rep.carrier.basis()},
                               rep.antilinear, rep.label, rep.irreducible)


# constructors ---------------------------------------------------------------------


def rep_apply(rep: Representation, a: StarElement) -> np.ndarray:
    return rep.apply(a)


def regular_rep(carrier: Carrier, cap: int = ORDER_CAP) -> BasisRepresentation:
    """Left regular representation on the carrier itself.

    The basis words are orthonormal for the trace form ``<x, y> = tau(y^* x)``
    (``tau`` = coefficient of the unit, summed along the diagonal for matrices,
    real slot for complexifications), so left multiplication is a
    *-representation.  For a group ring the images are permutation matrices.
    """
    if not carrier.is_finite:
        raise CarrierError("the regular representation needs a finite carrier")
    if isinstance(carrier, GroupRing) and carrier.group.order > cap:
        raise CarrierError(f"group order {carrier.group.order} exceeds the cap {cap}")
    keys = carrier.basis()
    if len(keys) > 4 * cap * cap:
        raise CarrierError(f"carrier dimension {len(keys)} is too large")
    return BasisRepresentation(carrier, _multiplication_matrices(carrier, keys, left=True), label="regular")


def right_regular_matrices(carrier: Carrier) -> dict:
    """Matrices of right multiplication ``x -> x b`` (they commute with the left action)."""
    return _multiplication_matrices(carrier, carrier.basis(), left=False)


def _multiplication_matrices(carrier, keys, left=True) -> dict:
    index = {k: n for n, k in enumerate(keys)}
    N = len(keys)
    out = {}
    for b in keys:
        m = np.zeros((N, N), dtype=complex)
        for k in keys:
            r = carrier.mul_key(b, k) if left else carrier.mul_key(k, b)
            if r is not None:
                key, sign = r
                m[index[key], index[k]] = sign
        out[b] = m
    return out


def matrix_point_rep(carrier: FreeStar, points: Sequence[np.ndarray]) -> PointRepresentation:
    return PointRepresentation(carrier, points)


def conjugate_rep(rep: Representation) -> Representation:
    """Entrywise complex conjugate ``a -> conj(pi(a))``."""
    return rep.conjugate()


def complexify_rep(rep: Representation, sign: int = 1, carrier: Complexified | None = None) -> Representation:
    """``(x, y) -> psi(x) + i psi(y)``; materialized when the carrier is finite."""
    if isinstance(rep.carrier, Complexified):
        raise CarrierError("carrier is already complexified")
    if carrier is None:
        carrier = Complexified(rep.carrier)
    out = ComplexifiedRepresentation(carrier, rep, sign)
    return materialize(out) if carrier.is_finite else out


def amplify_rep(rep: Representation, n: int, carrier: MatrixRing | None = None) -> Representation:
    if carrier is None:
        carrier = MatrixRing(n, rep.carrier)
    out = AmplifiedRepresentation(carrier, rep)
    return materialize(out) if carrier.is_finite else out


def is_M_positive(rep: Representation, pres, tol: float = PSD_TOL) -> str:
    """``yes`` / ``no`` / ``marginal``: every generator image is PSD (within ``tol``).

    Checking the generators suffices because ``pi(a c a^*) = pi(a) pi(c) pi(a)^†``.
    """
    worst = generator_min_eigenvalue(rep, pres)
    return psd_status(worst, tol)


def generator_min_eigenvalue(rep: Representation, pres) -> float:
    if rep.carrier != pres.carrier:
        raise CarrierError("representation and presentation carriers differ")
    worst = np.inf
    for s in pres.generators:
        worst = min(worst, min_eigenvalue(rep.apply(s)))
    one = rep.apply(pres.carrier.one())
    return min(worst, min_eigenvalue(one))


def representation_residuals(rep: Representation, samples: Sequence[tuple[StarElement, StarElement]]) -> dict:
    """Max residuals of additivity, multiplicativity and star-preservation on sample pairs."""
    add = mul = star = 0.0
    for a, b in samples:
        pa, pb = rep.apply(a), rep.apply(b)
        scale = max(1.0, np.abs(pa).max(initial=0), np.abs(pb).max(initial=0))
        add = max(add, np.abs(rep.apply(a + b) - pa - pb).max(initial=0) / scale)
        mul = max(mul, np.abs(rep.apply(a * b) - pa @ pb).max(initial=0) / scale ** 2)
        star = max(star, np.abs(rep.apply(a.star()) - pa.conj().T).max(initial=0) / scale)
    return {"additive": float(add), "multiplicative": float(mul), "star": float(star)}


__all__ = [
    "Representation",
    "BasisRepresentation",
    "PointRepresentation",
    "AmplifiedRepresentation",
    "ComplexifiedRepresentation",
    "materialize",
    "rep_apply",
    "regular_rep",
    "right_regular_matrices",
    "matrix_point_rep",
    "conjugate_rep",
    "complexify_rep",
    "amplify_rep",
    "is_M_positive",
    "generator_min_eigenvalue",
    "representation_residuals",
    "YES",
    "NO",
    "MARGINAL",
]
