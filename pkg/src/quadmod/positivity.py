"""The seminorm n_M, archimedean closure membership and the finite model of A_M.

On a finite-dimensional carrier the completion A_M is realised as the
block-diagonal image of the map ``j: a -> (pi(a))_pi`` over the M-positive
irreducible representations: n_M is the largest block norm, and a symmetric
``x`` lies in the closure of M (resp. its interior) exactly when every block
of ``j(x)`` is PSD (resp. positive definite).

On a free *-algebra only bounds are available: an upper bound from an exact
certificate and a lower bound from M-positive matrix points found by random
search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.linalg import block_diag

from .algebra import (
    Carrier,
    CarrierError,
    FreeStar,
    GroupRing,
    IrrationalModulus,
    StarElement,
    complexify,
    matrix_lift,
    matrix_unit,
)
from .certificates import (
    CertificateError,
    ModulePresentation,
    NormCertificate,
    bound_propagate,
    complex_presentation,
    l1_certificate,
    matrix_presentation,
)
from .irreps import decompose_irreps, model_irreps
from .linalg import MARGINAL, PSD_TOL, YES, min_eigenvalue, operator_norm, psd_status, random_unitary
from .reports import FAIL, PASS, Check, Report, check_residual
from .representations import (
    BasisRepresentation,
    PointRepresentation,
    Representation,
    conjugate_rep,
    generator_min_eigenvalue,
    materialize,
    regular_rep,
    representation_residuals,
)
from .sampling import random_element, random_symmetric

NORM_TOL = 1e-7
INTERIOR, BOUNDARY, OUTSIDE, UNKNOWN = "interior", "boundary_arch", "outside", "unknown"
BOUNDED, INFINITESIMAL, UNBOUNDED = "bounded", "infinitesimal", "unbounded"
DECOMPOSE_LIMIT = 100


class DegeneratePresentation(CarrierError):
    """No M-positive representation exists, so ``-1`` may lie in M."""


# the finite model -------------------------------------------------------------


@lru_cache(maxsize=64)
def _cached_irreps(carrier: Carrier, seed: int, route: str) -> tuple:
    if route == "decompose":
        return tuple(decompose_irreps(carrier, seed))
    return tuple(materialize(r) for r in model_irreps(carrier, seed))


@dataclass
class AMModel:
    """M-positive irreducibles of a finite carrier; ``j(a)`` is the tuple of their images."""

    presentation: ModulePresentation
    irreps: list[BasisRepresentation]
    indices: list[int]
    statuses: list[str]
    min_eigenvalues: list[float]
    tol: float = PSD_TOL
    route: str = "model"

    @property
    def carrier(self) -> Carrier:
        return self.presentation.carrier

    @property
    def is_empty(self) -> bool:
        return not self.irreps

    @property
    def dimensions(self) -> list[int]:
        return [r.dim for r in self.irreps]

    @property
    def marginal(self) -> list[int]:
        return [k for k, s in enumerate(self.statuses) if s == MARGINAL]

    def j(self, a: StarElement) -> list[np.ndarray]:
        return [r.apply(a) for r in self.irreps]

    def block(self, a: StarElement) -> np.ndarray:
        blocks = self.j(a)
        if not blocks:
            return np.zeros((0, 0), dtype=complex)
        return block_diag(*blocks)

    def norm(self, a: StarElement) -> float:
        return max((operator_norm(m) for m in self.j(a)), default=0.0)

    def argmax_norm(self, a: StarElement) -> tuple[int, float]:
        norms = [operator_norm(m) for m in self.j(a)]
        if not norms:
            return -1, 0.0
        k = int(np.argmax(norms))
        return k, norms[k]

    def min_eigenvalue(self, x: StarElement) -> float:
        return min((min_eigenvalue(m) for m in self.j(x)), default=math.inf)

    def direct_sum(self) -> BasisRepresentation:
        """The block-diagonal representation ``j`` itself."""
        if self.is_empty:
            raise DegeneratePresentation("no M-positive representations")
        keys = self.carrier.basis()
        imgs = {k: block_diag(*[r.basis_image(k) for r in self.irreps]) for k in keys}
        return BasisRepresentation(self.carrier, imgs, label="j")

    @property
    def alpha_i(self) -> int:
        """Largest dimension of an M-positive irreducible representation."""
        return max(self.dimensions, default=0)

    @property
    def alpha_c_bound(self) -> int:
        """Upper bound ``sum d_k^2`` for the dimension of an M-positive cyclic representation."""
        return sum(d * d for d in self.dimensions)


def build_AM_model(
    pres: ModulePresentation,
    seed: int = 0,
    tol: float = PSD_TOL,
    allow_empty: bool = False,
    route: str = "model",
) -> AMModel:
    """Filter the irreducibles of a finite carrier by M-positivity.

    ``route="model"`` builds the irreducibles of matrix and complexified
    carriers from those of the underlying group ring; ``route="decompose"``
    splits their regular representations directly (an independent check).
    """
    car = pres.carrier
    if not car.is_finite:
        raise CarrierError(f"{car!r} is not finite-dimensional")
    if route == "decompose" and len(car.basis()) > DECOMPOSE_LIMIT:
        route = "model"
    allirr = _cached_irreps(car, seed, route)
    irreps, indices, statuses, mins = [], [], [], []
    for n, r in enumerate(allirr):
        m = generator_min_eigenvalue(r, pres)
        st = psd_status(m, tol)
        statuses.append(st)
        mins.append(m)
        if st == YES:
            irreps.append(r)
            indices.append(n)
    if not irreps and not allow_empty:
        raise DegeneratePresentation("no M-positive representations")
    return AMModel(pres, irreps, indices, statuses, mins, tol, route)


def cyclic_dimension(rep: BasisRepresentation, vector: np.ndarray) -> int:
    """``dim span {pi(b) v}`` over the basis words ``b``."""
    cols = np.einsum("nij,j->ni", rep.stack, vector)
    return int(np.linalg.matrix_rank(cols, tol=1e-8 * max(1.0, np.abs(cols).max())))


def alpha_c_search(model: AMModel, seed: int = 0, max_dim: int = 2) -> int | None:
    """Largest cyclic dimension found for ``sum_k pi_k^{d_k}`` with a random vector.

    Only run when every block has dimension ``<= max_dim``; returns None otherwise.
    """
    if model.is_empty or model.alpha_i > max_dim:
        return None
    rng = np.random.default_rng(seed)
    keys = model.carrier.basis()
    imgs = {k: block_diag(*[np.kron(np.eye(r.dim), r.basis_image(k)) for r in model.irreps]) for k in keys}
    rep = BasisRepresentation(model.carrier, imgs)
    v = rng.standard_normal(rep.dim) + 1j * rng.standard_normal(rep.dim)
    return cyclic_dimension(rep, v)


# seminorm -------------------------------------------------------------------------


@dataclass
class NormEstimate:
    lower: float
    upper: float
    exact: bool = False
    upper_witness: NormCertificate | None = None
    lower_witness: tuple | None = None
    note: str = ""

    @property
    def value(self) -> float | None:
        return self.upper if self.exact else None

    @property
    def finite(self) -> bool:
        return math.isfinite(self.upper)

    def to_json(self) -> dict:
        up = self.upper if math.isfinite(self.upper) else "inf"
        out = {"lower": self.lower, "upper": up, "exact": self.exact, "note": self.note}
        if self.upper_witness is not None:
            out["certified_upper"] = str(self.upper_witness.bound)
        if self.lower_witness is not None:
            out["lower_witness"] = getattr(self.lower_witness[0], "label", "")
        return out


def _group_witness(a: StarElement, pres: ModulePresentation) -> NormCertificate | None:
    if not isinstance(a.carrier, GroupRing):
        return None
    try:
        return l1_certificate(a, pres)
    except (IrrationalModulus, CertificateError):
        return None


def sample_positive_points(
    pres: ModulePresentation,
    seed: int = 0,
    budget: int = 48,
    dims: Sequence[int] = (1, 2, 3, 4),
    scales: Sequence[float] | None = None,
    tol: float = PSD_TOL,
) -> list[PointRepresentation]:
    """M-positive matrix points on a free carrier.

    Each attempt draws letter images on a quarter-integer grid and keeps the
    largest scaling factor (from ``scales``) at which every generator image is PSD.
    """
    car = pres.carrier
    if not isinstance(car, FreeStar):
        raise CarrierError("matrix points are defined on free carriers")
    if scales is None:
        scales = [2.0 ** e for e in range(3, -9, -1)]
    rng = np.random.default_rng(seed)
    found = []
    for n in range(budget):
        d = dims[n % len(dims)]
        base = [(rng.integers(-4, 5, (d, d)) + 1j * rng.integers(-4, 5, (d, d))) / 4 for _ in range(car.k)]
        for t in scales:
            rep = PointRepresentation(car, [t * x for x in base], label=f"point{n}@{t:g}")
            if psd_status(generator_min_eigenvalue(rep, pres), tol) == YES:
                found.append(rep)
                break
    return found


def seminorm(
    a: StarElement,
    pres: ModulePresentation,
    model: AMModel | None = None,
    points: Sequence[Representation] = (),
    seed: int = 0,
    budget: int = 48,
    scales: Sequence[float] | None = None,
    certify: bool = True,
) -> NormEstimate:
    """``n_M(a)``: exact on finite carriers, an interval on free carriers."""
    car = pres.carrier
    if a.carrier != car:
        raise CarrierError("element and presentation carriers differ")
    if a.is_zero():
        return NormEstimate(0.0, 0.0, car.is_finite, note="zero element")
    if car.is_finite:
        if model is None:
            model = build_AM_model(pres, seed, allow_empty=True)
        if model.is_empty:
            return NormEstimate(0.0, 0.0, True, note="no M-positive representations: every element is infinitesimal")
        k, value = model.argmax_norm(a)
        witness = _group_witness(a, pres) if certify else None
        return NormEstimate(value, value, True, witness, (model.irreps[k], a))

    # free carrier: certificate above, sampled points below
    upper, witness, note = math.inf, None, ""
    try:
        witness = bound_propagate(a, pres)
        upper = float(witness.bound)
    except CertificateError as exc:
        note = f"no derivable bound ({exc}); n_M may be infinite"
    pts = list(points) + sample_positive_points(pres, seed, budget, scales=scales)
    lower, lw = 0.0, None
    for p in pts:
        if psd_status(generator_min_eigenvalue(p, pres)) != YES:
            continue
        v = operator_norm(p.apply(a))
        if v > lower:
            lower, lw = v, (p, a)
    if math.isfinite(upper):
        lower = min(lower, upper)
    return NormEstimate(lower, upper, False, witness, lw, note)


def classify_bounded(
    a: StarElement,
    pres: ModulePresentation,
    thresholds: Sequence[float] = (),
    model: AMModel | None = None,
    seed: int = 0,
) -> str:
    """``bounded`` / ``infinitesimal`` / ``unbounded`` / ``unknown``.

    ``unbounded`` is only reported on a free carrier when sampled M-positive
    points push the lower bound above every requested threshold.
    """
    if a.is_zero():
        return INFINITESIMAL
    if thresholds:
        scales = [2.0 ** e for e in range(12, -9, -1)]
    else:
        scales = None
    est = seminorm(a, pres, model=model, seed=seed, scales=scales, certify=False)
    if est.exact:
        return INFINITESIMAL if est.upper <= NORM_TOL else BOUNDED
    if est.finite:
        return BOUNDED
    if thresholds and est.lower > max(thresholds):
        return UNBOUNDED
    return UNKNOWN


# archimedean closure --------------------------------------------------------------


def _cone_status(m: float, tol: float) -> str:
    if m > tol:
        return INTERIOR
    if m >= -tol:
        return BOUNDARY
    if m < -10 * tol:
        return OUTSIDE
    return UNKNOWN


def arch_membership(
    x: StarElement,
    pres: ModulePresentation,
    tol: float = PSD_TOL,
    model: AMModel | None = None,
    seed: int = 0,
    points: Sequence[Representation] = (),
) -> str:
    """Where a symmetric ``x`` lies relative to the closure of M.

    Finite carriers: by the smallest eigenvalue of ``j(x)``.  Free carriers:
    ``outside`` if some M-positive point sends ``x`` to a matrix with a clearly
    negative eigenvalue, otherwise ``unknown``.
    """
    if x.carrier != pres.carrier:
        raise CarrierError("element and presentation carriers differ")
    if not x.is_symmetric():
        raise ValueError(f"{x} is not symmetric")
    if pres.carrier.is_finite:
        if model is None:
            model = build_AM_model(pres, seed, tol, allow_empty=True)
        return _cone_status(model.min_eigenvalue(x), tol)
    pts = list(points) + sample_positive_points(pres, seed)
    for p in pts:
        if psd_status(generator_min_eigenvalue(p, pres), tol) == YES and min_eigenvalue(p.apply(x)) < -10 * tol:
            return OUTSIDE
    return UNKNOWN


def block_cone_status(x: StarElement, model: AMModel, tol: float = PSD_TOL) -> str:
    """The same trichotomy read off the assembled block-diagonal matrix ``j(x)``:
    PSD and invertible, PSD only, or not PSD."""
    m = model.block(x)
    if m.shape[0] == 0:
        return INTERIOR
    w = np.linalg.eigvalsh((m + m.conj().T) / 2)
    smallest_sv = float(np.min(np.abs(w)))
    if w[0] >= -tol:
        return INTERIOR if smallest_sv > tol else BOUNDARY
    return OUTSIDE if w[0] < -10 * tol else UNKNOWN


def dyadic_shift_psd(x: StarElement, model: AMModel, depth: int = 20, tol: float = PSD_TOL) -> bool:
    """True when every block of ``j(x + 2^-k)`` is PSD for ``k = 0..depth``."""
    for k in range(depth + 1):
        shifted = x + Fraction(1, 2 ** k)
        if model.min_eigenvalue(shifted) < -tol:
            return False
    return True


# character spaces --------------------------------------------------------------


@dataclass
class CharacterSpace:
    """M-positive characters of an abelian group ring.

    Character ``n`` sends group element ``g`` to ``exp(2 pi i exponents[n][g] / order)``.
    The conjugate of ``n`` is the antilinear map ``a -> conj(phi_n(a))``, which is again
    M-positive. ``pairing[n]`` is the index of the linear character agreeing with it on
    group elements, or None when that linear character is not M-positive (possible only
    when some generator has non-real coefficients).
    """

    presentation: ModulePresentation
    order: int
    exponents: list[tuple[int, ...]]
    pairing: list[int | None]
    statuses: list[str]
    generator_values: list[list[float]]
    rejected: list[tuple[int, ...]] = field(default_factory=list)

    def __len__(self):
        return len(self.exponents)

    def value(self, n: int, a: StarElement) -> complex:
        zeta = np.exp(2j * np.pi * np.array(self.exponents[n]) / self.order)
        return complex(sum(complex(c) * zeta[g] for g, c in a.items()))

    def values(self, a: StarElement) -> np.ndarray:
        return np.array([self.value(n, a) for n in range(len(self))])

    def conjugate_value(self, n: int, a: StarElement) -> complex:
        return complex(np.conj(self.value(n, a)))

    @property
    def self_conjugate(self) -> list[int]:
        return [n for n, p in enumerate(self.pairing) if p == n]

    def representation(self, n: int) -> BasisRepresentation:
        car = self.presentation.carrier
        zeta = np.exp(2j * np.pi * np.array(self.exponents[n]) / self.order)
        return BasisRepresentation(car, {g: np.array([[zeta[g]]]) for g in car.basis()}, label=f"chi{n}",
                                   irreducible=True)

    @property
    def boundary(self) -> list[int]:
        """Characters with some generator value within the PSD tolerance of 0."""
        return [n for n, vals in enumerate(self.generator_values) if vals and min(vals) <= PSD_TOL]


def _all_characters(group) -> tuple[int, list[tuple[int, ...]]]:
    """Every homomorphism ``G -> mu_e`` as exponent tuples (``e`` = exponent of G)."""
    e = 1
    for g in range(group.order):
        e = math.lcm(e, _element_order(group, g))
    gens = group.generating_set()
    chars = []
    for choice in np.ndindex(*([e] * len(gens))):
        exps = {group.identity: 0}
        for g, k in zip(gens, choice):
            exps.setdefault(g, int(k))
        frontier = list(exps)
        consistent = True
        while frontier and consistent:
            nxt = []
            for h in frontier:
                for g, k in zip(gens, choice):
                    p = group.mul(h, g)
                    v = (exps[h] + int(k)) % e
                    if p in exps:
                        if exps[p] != v:
                            consistent = False
                            break
                    else:
                        exps[p] = v
                        nxt.append(p)
                if not consistent:
                    break
            frontier = nxt
        if not consistent or len(exps) != group.order:
            continue
        t = tuple(exps[g] for g in range(group.order))
        if all((t[a] + t[b] - t[group.mul(a, b)]) % e == 0 for a in range(group.order) for b in range(group.order)):
            chars.append(t)
    return e, sorted(set(chars))


def _element_order(group, g: int) -> int:
    n, h = 1, g
    while h != group.identity:
        h = group.mul(h, g)
        n += 1
    return n


def character_space(pres: ModulePresentation, tol: float = PSD_TOL, allow_empty: bool = False) -> CharacterSpace:
    """Exact enumeration of the characters of an abelian group, filtered by ``phi(s) >= -tol``."""
    car = pres.carrier
    if not isinstance(car, GroupRing) or not car.group.is_abelian():
        raise CarrierError("character spaces are computed for abelian group rings; use build_AM_model")
    e, chars = _all_characters(car.group)
    kept, statuses, gvals, rejected = [], [], [], []
    for t in chars:
        zeta = np.exp(2j * np.pi * np.array(t) / e)
        vals = [complex(sum(complex(c) * zeta[g] for g, c in s.items())).real for s in pres.generators]
        st = psd_status(min(vals, default=math.inf), tol)
        if st == YES:
            kept.append(t)
            statuses.append(BOUNDARY if vals and min(vals) <= tol else INTERIOR)
            gvals.append(vals)
        else:
            rejected.append(t)
    index = {t: n for n, t in enumerate(kept)}
    pairing = [index.get(tuple((-k) % e for k in t)) for t in kept]
    if not kept and not allow_empty:
        raise DegeneratePresentation("no M-positive representations")
    return CharacterSpace(pres, e, kept, pairing, statuses, gvals, rejected)


# audits ------------------------------------------------------------------------


def _status_band(m: float, tol: float) -> bool:
    """True when ``m`` falls in the marginal band ``[-10 tol, -tol)``."""
    return -10 * tol <= m < -tol


def theorem1_audit(pres: ModulePresentation, samples: int = 100, seed: int = 0, tol: float = PSD_TOL) -> Report:
    """Character positivity versus closure membership on random symmetric elements."""
    rep = Report("character-space")
    car = pres.carrier
    X = character_space(pres, tol, allow_empty=True)
    model = build_AM_model(pres, seed, tol, allow_empty=True)
    rep.info.update({"characters": len(X), "order": X.order, "degenerate": len(X) == 0})

    rep.add(check_residual("character count matches irrep model", abs(len(X) - len(model.irreps)), 0))
    involution = all(p is None or X.pairing[p] == n for n, p in enumerate(X.pairing))
    rep.add(Check("conjugation pairing is an involution", PASS if involution else FAIL))
    rep.info["unpaired"] = sum(p is None for p in X.pairing)

    # conj(phi) is M-positive and matches its linear partner on group elements
    conj_gap = 0.0
    for n, p in enumerate(X.pairing):
        for s in pres.generators:
            conj_gap = max(conj_gap, max(0.0, -X.conjugate_value(n, s).real - tol))
        if p is not None:
            for g in car.basis():
                e = car.basis_element(g)
                conj_gap = max(conj_gap, abs(X.conjugate_value(n, e) - X.value(p, e)))
    rep.add(check_residual("conjugate characters are M-positive", conj_gap, 1e-12))

    hom = 0.0
    for n in range(len(X)):
        z = np.exp(2j * np.pi * np.array(X.exponents[n]) / X.order)
        for a in range(car.group.order):
            for b in range(car.group.order):
                hom = max(hom, abs(z[car.group.mul(a, b)] - z[a] * z[b]))
            hom = max(hom, abs(z[car.group.inverse[a]] - np.conj(z[a])))
    rep.add(check_residual("characters are *-homomorphisms", hom, 1e-12))

    rng = np.random.default_rng(seed)
    xs = [car.one(), -car.one(), car.zero()] + [random_symmetric(car, rng) for _ in range(samples)]
    violations, marginal = [], 0
    for x in xs:
        vals = X.values(x).real if len(X) else np.array([])
        phi_min = float(vals.min()) if vals.size else math.inf
        arch = arch_membership(x, pres, tol, model)
        if arch == UNKNOWN or _status_band(phi_min, tol):
            marginal += 1
            continue
        if (phi_min >= -tol) != (arch in (INTERIOR, BOUNDARY)):
            violations.append(str(x))
    rep.add(Check("positivity on X_M iff closure membership",
                  FAIL if violations else PASS, float(len(violations)), 0.0, violations[:5],
                  f"{len(xs)} samples, {marginal} marginal"))
    return rep


def corollary8_audit(model: AMModel, samples: int = 50, seed: int = 0, tol: float = PSD_TOL) -> Report:
    """Cone, boundedness, closedness and completeness conditions on the block model."""
    rep = Report("completion-conditions")
    if model.is_empty:
        rep.info["vacuous"] = True
        rep.add(Check("model", PASS, detail="vacuous: no M-positive representations"))
        return rep
    pres, car = model.presentation, model.carrier
    rng = np.random.default_rng(seed)
    xs = [random_symmetric(car, rng) for _ in range(samples)]

    # (1) the componentwise PSD cone is pointed
    worst = 0.0
    for x in xs + [car.one(), car.zero()]:
        blocks = model.j(x)
        lo = min(min_eigenvalue(b) for b in blocks)
        hi = -min(min_eigenvalue(-b) for b in blocks)
        if lo >= -tol and -hi >= -tol:
            worst = max(worst, max(operator_norm(b) for b in blocks))
    rep.add(check_residual("cone is pointed", worst, 10 * tol))

    # (2) every sampled element is bounded
    unbounded = [str(x) for x in xs if not math.isfinite(seminorm(x, pres, model, certify=False).upper)]
    rep.add(Check("sampled elements bounded", FAIL if unbounded else PASS, float(len(unbounded)), 0.0, unbounded[:3]))

    # (3) shifting onto the PSD cone gives elements not reported outside
    rejected = []
    for x in xs:
        m = model.min_eigenvalue(x)
        shift = Fraction(-m).limit_denominator(1 << 20) + Fraction(1, 1 << 19) if m < 0 else Fraction(0)
        y = x + shift
        if arch_membership(y, pres, tol, model) == OUTSIDE:
            rejected.append(str(y))
    rep.add(Check("PSD blocks are not outside", FAIL if rejected else PASS, float(len(rejected)), 0.0, rejected[:3]))

    # (4) completeness
    rep.add(Check("complete in the seminorm", PASS, detail=f"finite dimension {sum(d * d for d in model.dimensions)}"))
    return rep


def evaluation_map_audit(
    pres: ModulePresentation,
    a: StarElement | None = None,
    unitaries: int = 20,
    pairs: int = 100,
    seed: int = 0,
    model: AMModel | None = None,
) -> Report:
    """Isometry, *-homomorphism, unitary equivariance and conjugation compatibility of
    ``a -> (pi -> pi(a))`` on the M-positive irreducibles."""
    rep = Report("evaluation-map")
    car = pres.carrier
    rng = np.random.default_rng(seed)
    if model is None:
        model = build_AM_model(pres, seed)
    if a is None:
        a = random_element(car, rng)

    est = seminorm(a, pres, model)
    jnorm = operator_norm(model.block(a))
    rep.add(check_residual("isometry", abs(jnorm - est.upper), NORM_TOL,
                           detail=f"|j(a)| = {jnorm:.9g}, n_M(a) = {est.upper:.9g}"))
    if not pres.generators:
        reg = operator_norm(regular_rep(car).apply(a))
        rep.add(check_residual("isometry against the regular representation", abs(jnorm - reg), NORM_TOL))

    sample_pairs = [(random_element(car, rng), random_element(car, rng)) for _ in range(pairs)]
    res = representation_residuals(model.direct_sum(), sample_pairs)
    rep.add(check_residual("homomorphism", max(res.values()), 1e-9, detail=str(res)))

    eq = 0.0
    for k, pi in enumerate(model.irreps):
        pa = pi.apply(a)
        for _ in range(unitaries):
            u = random_unitary(pi.dim, rng)
            moved = pi.unitary_conjugate(u)
            eq = max(eq, float(np.abs(moved.apply(a) - u.conj().T @ pa @ u).max()))
    rep.add(check_residual("unitary equivariance", eq, 1e-9))

    if a.is_real():
        conj = max((float(np.abs(conjugate_rep(pi).apply(a) - pi.apply(a).conj()).max()) for pi in model.irreps),
                   default=0.0)
        rep.add(check_residual("conjugation compatibility", conj, 1e-12))
    else:
        rep.add(Check("conjugation compatibility", PASS, detail="not applicable: a has non-real coefficients"))
    return rep


def example9_audit(
    pres: ModulePresentation,
    samples: int = 50,
    ns: Sequence[int] = (2, 3),
    seed: int = 0,
) -> Report:
    """Norms of ``(a, 0)`` in the complexification and of embedded ``a`` in matrix rings,
    each computed from an independent irreducible decomposition of the larger carrier."""
    rep = Report("complexification-and-matrix-norms")
    car = pres.carrier
    rng = np.random.default_rng(seed)
    base = build_AM_model(pres, seed)
    cpres = complex_presentation(pres)
    cmodel = build_AM_model(cpres, seed, route="decompose")
    mmodels = {n: build_AM_model(matrix_presentation(pres, n), seed, route="decompose") for n in ns}
    rep.info["routes"] = {"complex": cmodel.route, **{f"mat{n}": m.route for n, m in mmodels.items()}}

    xs = [car.one()] + [random_element(car, rng) for _ in range(samples)]
    cres = mcorner = mdiag = 0.0
    for a in xs:
        na = base.norm(a)
        cres = max(cres, abs(cmodel.norm(complexify(a, cpres.carrier)) - na))
        for n, mm in mmodels.items():
            mcar = mm.carrier
            mcorner = max(mcorner, abs(mm.norm(matrix_unit(mcar, 0, 0, a)) - na))
            diag = matrix_lift([[a if i == j else car.zero() for j in range(n)] for i in range(n)], mcar)
            mdiag = max(mdiag, abs(mm.norm(diag) - na))
    rep.add(check_residual("complexified norm", cres, NORM_TOL))
    rep.add(check_residual("matrix corner norm", mcorner, NORM_TOL))
    rep.add(check_residual("matrix diagonal norm", mdiag, NORM_TOL))
    return rep
