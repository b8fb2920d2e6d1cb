"""Positive forms on finite carriers and the GNS construction.

A form is stored by its values on the basis words.  Positivity
``f(a a^*) >= 0`` is the PSD condition on ``F[j, k] = f(b_j b_k^*)``.

GNS convention: ``<x, y> = f(y^* x)``, so ``psi(a)`` is left multiplication by
``a`` on the quotient by the null vectors and ``<psi(a) Omega, Omega> = f(a)``
with ``Omega`` the class of 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .algebra import Carrier, CarrierError, StarElement
from .certificates import Certificate, CertTerm, ModulePresentation, cert_eval
from .linalg import PSD_TOL, YES, hermitian_eig, min_eigenvalue, operator_norm, psd_status
from .positivity import AMModel, build_AM_model
from .reports import FAIL, MARGINAL, PASS, Check, Report, check_residual
from .representations import BasisRepresentation, Representation, generator_min_eigenvalue, regular_rep
from .sampling import random_element
from .scalars import GaussianRational

STAR_TOL = 1e-10
RANK_TOL = 1e-9
GNS_TOL = 1e-8
BOUND_TOL = 1e-6


class FormError(ValueError):
    pass


def _key_index(carrier: Carrier) -> dict:
    return {k: n for n, k in enumerate(carrier.basis())}


@dataclass
class PositiveForm:
    carrier: Carrier
    values: np.ndarray  # f on each basis word, in carrier.basis() order

    def __call__(self, a: StarElement) -> complex:
        if a.carrier != self.carrier:
            raise CarrierError("element and form carriers differ")
        index = _key_index(self.carrier)
        return complex(sum(complex(c) * self.values[index[k]] for k, c in a.items()))

    def value_of(self, key) -> complex:
        return complex(self.values[_key_index(self.carrier)[key]])

    def gram(self) -> np.ndarray:
        """``F[j, k] = f(b_j b_k^*)``."""
        return _pair_matrix(self, lambda bj, bk: bj * bk.star())

    def gns_gram(self) -> np.ndarray:
        """``G[j, k] = f(b_j^* b_k)``, the GNS inner products ``<b_k, b_j>``."""
        return _pair_matrix(self, lambda bj, bk: bj.star() * bk)

    @property
    def unit_value(self) -> float:
        return float(self(self.carrier.one()).real)

    def __add__(self, other: PositiveForm) -> PositiveForm:
        return PositiveForm(self.carrier, self.values + other.values)

    def scaled(self, t: float) -> PositiveForm:
        return PositiveForm(self.carrier, t * self.values)


def _pair_matrix(f: PositiveForm, product) -> np.ndarray:
    car = f.carrier
    basis = [car.basis_element(k) for k in car.basis()]
    N = len(basis)
    out = np.zeros((N, N), dtype=complex)
    for j in range(N):
        for k in range(N):
            out[j, k] = f(product(basis[j], basis[k]))
    return out


def form_from_values(carrier: Carrier, values: Mapping, tol: float = PSD_TOL) -> PositiveForm:
    """Validate ``values`` (basis key -> complex; missing keys are 0) as a positive form."""
    if not carrier.is_finite:
        raise CarrierError("forms are stored on finite carriers only")
    keys = carrier.basis()
    index = _key_index(carrier)
    vec = np.zeros(len(keys), dtype=complex)
    for k, v in values.items():
        if k not in index:
            raise FormError(f"{k!r} is not a basis word of {carrier!r}")
        vec[index[k]] = complex(v)
    for k in keys:
        sk, sign = carrier.star_key(k)
        if abs(sign * vec[index[sk]] - np.conj(vec[index[k]])) > STAR_TOL * max(1.0, abs(vec[index[k]])):
            raise FormError(f"f(b*) is not the conjugate of f(b) at {k!r}")
    f = PositiveForm(carrier, vec)
    F = f.gram()
    m = min_eigenvalue(F)
    if m < -tol * max(1.0, float(np.abs(F).max())):
        raise FormError(f"Gram matrix is not PSD (most negative eigenvalue {m:.6g})")
    return f


def character_form(rep: Representation, weight: float = 1.0) -> PositiveForm:
    """``a -> weight * trace(pi(a))``: a positive form from any representation."""
    car = rep.carrier
    return PositiveForm(car, np.array([weight * np.trace(rep.basis_image(k)) for k in car.basis()]))


def vector_form(rep: Representation, xi: np.ndarray) -> PositiveForm:
    """``a -> <pi(a) xi, xi>``."""
    car = rep.carrier
    xi = np.asarray(xi, dtype=complex)
    return PositiveForm(car, np.array([np.vdot(xi, rep.basis_image(k) @ xi) for k in car.basis()]))


# module positivity ---------------------------------------------------------------


def generator_matrix(f: PositiveForm, s: StarElement) -> np.ndarray:
    """``P[j, k] = f(b_j s b_k^*)``; PSD iff ``f(a s a^*) >= 0`` for every ``a``."""
    return _pair_matrix(f, lambda bj, bk: bj * s * bk.star())


def form_respects_module(f: PositiveForm, pres: ModulePresentation, tol: float = PSD_TOL) -> str:
    if f.carrier != pres.carrier:
        raise CarrierError("form and presentation carriers differ")
    worst = math.inf
    for s in pres.generators:
        P = generator_matrix(f, s)
        worst = min(worst, min_eigenvalue(P) / max(1.0, float(np.abs(P).max())))
    return psd_status(worst, tol)


def negative_witness(f: PositiveForm, pres: ModulePresentation, denominator: int = 10 ** 6):
    """A single-term certificate ``a s a^*`` with ``f(a s a^*) < 0``, or None.

    A generator with ``f(s) < 0`` is returned as is; otherwise ``a`` is the
    eigenvector of the most negative eigenvalue of ``[f(b_j s b_k^*)]`` rounded
    to Gaussian rationals.
    """
    car = f.carrier
    plain = [(f(s).real, idx) for idx, s in enumerate(pres.generators, start=1)]
    if plain and min(plain)[0] < -GNS_TOL:
        value, idx = min(plain)
        cert = Certificate((CertTerm(Fraction(1), car.one(), idx),))
        return cert, cert_eval(cert, pres), value
    best = None
    for idx, s in enumerate(pres.generators, start=1):
        w, v = hermitian_eig(generator_matrix(f, s), tol=1e-8)
        if best is None or w[0] < best[0]:
            best = (w[0], v[:, 0], idx)
    if best is None or best[0] >= 0:
        return None
    _, vec, idx = best
    vec = vec / np.abs(vec).max()
    coeffs = {}
    for k, z in zip(car.basis(), vec):
        # a = sum conj(v_j) b_j gives f(a s a^*) = v^† P v
        c = GaussianRational(Fraction(z.real).limit_denominator(denominator),
                             -Fraction(z.imag).limit_denominator(denominator))
        if c != 0:
            coeffs[k] = c
    a = StarElement(car, coeffs)
    cert = Certificate((CertTerm(Fraction(1), a, idx),))
    m = cert_eval(cert, pres)
    value = f(m).real
    if value >= 0:
        return None
    return cert, m, value


def cauchy_schwarz_gap(f: PositiveForm, a: StarElement) -> float:
    """``|f(a)|^2 - f(a a^*) f(1)`` (should be ``<= 0``)."""
    return abs(f(a)) ** 2 - f(a * a.star()).real * f.unit_value


def prop9_audit(
    f: PositiveForm,
    pres: ModulePresentation,
    samples: int = 50,
    seed: int = 0,
    model: AMModel | None = None,
    tol: float = PSD_TOL,
) -> Report:
    """Module positivity of ``f`` against the bounds ``|f(a)| <= n_M(a) f(1)``."""
    rep = Report("form-bounds")
    car = pres.carrier
    rng = np.random.default_rng(seed)
    status = form_respects_module(f, pres, tol)
    rep.info["respects_module"] = status
    xs = [car.one()] + [random_element(car, rng) for _ in range(samples)]

    cs = max(cauchy_schwarz_gap(f, a) for a in xs)
    rep.add(check_residual("Cauchy-Schwarz", max(cs, 0.0), BOUND_TOL))

    if status == YES:
        if model is None:
            model = build_AM_model(pres, seed, tol, allow_empty=True)
        f1 = f.unit_value
        worst, violations = -math.inf, []
        for a in xs + [(a + a.star()) for a in xs[1:]]:
            gap = abs(f(a)) - model.norm(a) * f1
            worst = max(worst, gap)
            if gap > BOUND_TOL:
                violations.append(str(a))
        rep.add(Check("|f(a)| <= n_M(a) f(1)", FAIL if violations else PASS, worst, BOUND_TOL, violations[:5]))
    elif status == MARGINAL:
        rep.add(Check("module positivity", MARGINAL, detail="generator matrix minimum within the marginal band"))
    else:
        found = negative_witness(f, pres)
        if found is None:
            rep.add(Check("negative witness", FAIL, detail="no certificate with f(m) < 0 was found"))
        else:
            cert, m, value = found
            ok = value < -GNS_TOL
            rep.add(Check("negative witness", PASS if ok else FAIL, value, -GNS_TOL,
                          [{"generator": cert.terms[0].generator, "value": value}]))
    return rep


# GNS ---------------------------------------------------------------------------


@dataclass
class GNSResult:
    representation: BasisRepresentation
    omega: np.ndarray
    scale: float
    rank: int
    factor: np.ndarray  # L with G = L^† L restricted to the range

    @property
    def dim(self) -> int:
        return self.representation.dim


def gns(f: PositiveForm, rank_tol: float = RANK_TOL) -> GNSResult:
    """Cyclic representation with ``<psi(a) Omega, Omega> = f(a)``."""
    car = f.carrier
    scale = f.unit_value
    if scale <= rank_tol:
        raise FormError(f"f(1) = {scale:.3g} leaves no cyclic unit vector")
    G = f.gns_gram()
    w, u = hermitian_eig(G, tol=1e-8)
    keep = w > rank_tol * max(1.0, float(w.max()))
    w, u = w[keep], u[:, keep]
    L = np.sqrt(w)[:, None] * u.conj().T
    Lp = u / np.sqrt(w)[None, :]
    reg = regular_rep(car)
    imgs = {k: L @ reg.basis_image(k) @ Lp for k in car.basis()}
    psi = BasisRepresentation(car, imgs, label="gns")
    unit = np.zeros(len(car.basis()), dtype=complex)
    for k, c in car.one().items():
        unit[reg._index[k]] = complex(c)
    omega = L @ unit
    return GNSResult(psi, omega, scale, int(keep.sum()), L)


def gns_residual(g: GNSResult, f: PositiveForm) -> float:
    """``max_b |<psi(b) Omega, Omega> - f(b)|`` over basis words."""
    car = f.carrier
    vals = np.array([np.vdot(g.omega, g.representation.basis_image(k) @ g.omega) for k in car.basis()])
    return float(np.abs(vals - f.values).max())


def cyclic_rank(g: GNSResult) -> int:
    cols = np.einsum("nij,j->ni", g.representation.stack, g.omega)
    return int(np.linalg.matrix_rank(cols, tol=1e-8 * max(1.0, np.abs(cols).max())))


def prop10_audit(
    g: GNSResult | Representation,
    pres: ModulePresentation,
    samples: int = 50,
    seed: int = 0,
    model: AMModel | None = None,
    tol: float = PSD_TOL,
) -> Report:
    """``|psi(a)| <= n_M(a) |psi(1)|`` for an M-positive (possibly non-unital) ``psi``."""
    psi = g.representation if isinstance(g, GNSResult) else g
    rep = Report("representation-bounds")
    car = pres.carrier
    rng = np.random.default_rng(seed)
    m = generator_min_eigenvalue(psi, pres)
    st = psd_status(m, tol)
    rep.add(Check("M-positive", {YES: PASS, "no": FAIL}.get(st, MARGINAL), m, -tol))
    if model is None:
        model = build_AM_model(pres, seed, tol, allow_empty=True)
    one = operator_norm(psi.apply(car.one()))
    xs = [car.one()] + [random_element(car, rng) for _ in range(samples)]
    worst, tight, violations = -math.inf, 0.0, []
    for a in xs:
        lhs = operator_norm(psi.apply(a))
        rhs = model.norm(a) * one
        worst = max(worst, lhs - rhs)
        if rhs > 0:
            tight = max(tight, lhs / rhs)
        if lhs - rhs > BOUND_TOL:
            violations.append(str(a))
    rep.info["tightest_ratio"] = tight
    rep.add(Check("|psi(a)| <= n_M(a) |psi(1)|", FAIL if violations else PASS, worst, BOUND_TOL, violations[:5]))
    return rep


def random_positive_form(carrier: Carrier, rng: np.random.Generator, rank: int | None = None) -> PositiveForm:
    """``f(a) = trace(C lambda(a))`` with a random PSD density ``C`` on the regular representation."""
    reg = regular_rep(carrier)
    N = reg.dim
    r = N if rank is None else rank
    z = rng.standard_normal((N, r)) + 1j * rng.standard_normal((N, r))
    C = z @ z.conj().T / N
    return PositiveForm(carrier, np.array([np.trace(C @ reg.basis_image(k)) for k in carrier.basis()]))
