"""Positivity certificates for finitely generated quadratic modules.

A presentation fixes a carrier and a finite list ``S`` of symmetric
generators.  A certificate is a list of terms ``(q, a, c)`` with positive
rational weight ``q``, conjugator ``a`` and generator index ``c`` (``0`` is
the implicit generator ``1``, ``k >= 1`` is ``S[k-1]``); its value is
``sum q * a * c * a^*``.  Every transformer below checks its inputs and its
output exactly and raises :class:`CertificateError` naming the failed stage.

A :class:`NormCertificate` for ``a`` with bound ``r`` certifies
``r^2 - a a^* in M_S``, i.e. ``n_M(a) <= r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import (
    Carrier,
    CarrierError,
    Complexified,
    FreeStar,
    GroupRing,
    IrrationalModulus,
    MatrixRing,
    StarElement,
    complex_pair,
    complexify,
    matrix_lift,
    matrix_unit,
)
from .scalars import GaussianRational, rational_sqrt_upper


class CertificateError(ValueError):
    def __init__(self, message: str, stage: str | None = None):
        if stage:
            message = f"[{stage}] {message}"
        super().__init__(message)
        self.stage = stage


@dataclass(frozen=True)
class ModulePresentation:
    """The quadratic module ``M_S`` generated by ``S`` on ``carrier``."""

    carrier: Carrier
    generators: tuple[StarElement, ...] = ()
    archimedean_witness: int | None = None

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for k, s in enumerate(gens, start=1):
            if s.carrier != self.carrier:
                raise CarrierError(f"generator {k} lives on {s.carrier!r}, not {self.carrier!r}")
            if not s.is_symmetric():
                raise CertificateError(f"generator {k} ({s}) is not symmetric")
        w = self.archimedean_witness
        if w is not None:
            if not 1 <= w <= len(gens):
                raise CertificateError(f"archimedean witness index {w} out of range")
            if not isinstance(self.carrier, FreeStar):
                raise CertificateError("archimedean witnesses are declared on free carriers only")
            shape = _ball_shape(gens[w - 1], self.carrier)
            if shape is None or set(shape[1]) != set(range(self.carrier.k)):
                raise CertificateError(f"generator {w} is not of the form n - sum x_i x_i^*")

    def generator(self, index: int) -> StarElement:
        if index == 0:
            return self.carrier.one()
        if not 1 <= index <= len(self.generators):
            raise CertificateError(f"generator index {index} out of range")
        return self.generators[index - 1]

    def __len__(self):
        return len(self.generators) + 1


@dataclass(frozen=True)
class CertTerm:
    weight: Fraction
    conjugator: StarElement
    generator: int = 0

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))
        if self.weight <= 0:
            raise CertificateError(f"certificate weights must be positive, got {self.weight}")


@dataclass(frozen=True)
class Certificate:
    terms: tuple[CertTerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __add__(self, other: Certificate) -> Certificate:
        return Certificate(self.terms + other.terms)

    def __len__(self):
        return len(self.terms)

    def scaled(self, q) -> Certificate:
        q = Fraction(q)
        return Certificate(tuple(CertTerm(t.weight * q, t.conjugator, t.generator) for t in self.terms))

    def conjugated(self, b: StarElement) -> Certificate:
        """Certificate for ``b * value * b^*``."""
        return Certificate(tuple(CertTerm(t.weight, b * t.conjugator, t.generator) for t in self.terms))

    @classmethod
    def single(cls, weight, conjugator: StarElement, generator: int = 0) -> Certificate:
        return cls((CertTerm(Fraction(weight), conjugator, generator),))


@dataclass(frozen=True)
class NormCertificate:
    """Witness of ``n_M(element) <= bound`` via a certificate for ``bound^2 - a a^*``."""

    bound: Fraction
    element: StarElement
    cert: Certificate = field(default_factory=Certificate)

    def __post_init__(self):
        object.__setattr__(self, "bound", Fraction(self.bound))
        if self.bound <= 0:
            raise CertificateError("norm bounds must be positive rationals")

    def target(self) -> StarElement:
        return self.bound ** 2 - self.element * self.element.star()


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str = ""

    def __bool__(self):
        return self.accepted


# evaluation and verification ------------------------------------------------


def cert_eval(cert: Certificate, pres: ModulePresentation) -> StarElement:
    """``sum q * a * c * a^*`` in normal form."""
    total = pres.carrier.zero()
    for t in cert.terms:
        a = t.conjugator
        if a.carrier != pres.carrier:
            raise CarrierError(f"conjugator lives on {a.carrier!r}, not {pres.carrier!r}")
        if t.generator == 0:
            piece = a * a.star()
        else:
            piece = a * pres.generator(t.generator) * a.star()
        total = total + piece.scale(t.weight)
    return total


def cert_verify(cert: Certificate, target: StarElement, pres: ModulePresentation) -> Verdict:
    """Accept iff the certificate evaluates exactly to ``target``."""
    if target.carrier != pres.carrier:
        return Verdict(False, "target carrier does not match the presentation")
    if not target.is_symmetric():
        return Verdict(False, "target not symmetric")
    for k, t in enumerate(cert.terms):
        if t.weight <= 0:
            return Verdict(False, f"term {k}: weight {t.weight} is not positive")
        if not 0 <= t.generator <= len(pres.generators):
            return Verdict(False, f"term {k}: generator index {t.generator} out of range")
        if t.conjugator.carrier != pres.carrier:
            return Verdict(False, f"term {k}: conjugator on the wrong carrier")
    value = cert_eval(cert, pres)
    if value != target:
        return Verdict(False, "certificate value differs from target")
    return Verdict(True, "ok")


def verify_norm(nc: NormCertificate, pres: ModulePresentation) -> Verdict:
    return cert_verify(nc.cert, nc.target(), pres)


def _require(cert: Certificate, target: StarElement, pres: ModulePresentation, stage: str) -> None:
    v = cert_verify(cert, target, pres)
    if not v:
        raise CertificateError(v.reason, stage)


def _require_norm(nc: NormCertificate, pres: ModulePresentation, stage: str) -> None:
    _require(nc.cert, nc.target(), pres, stage)


# splitting r^2 - c^2 into r + c and r - c -----------------------------------


def lemma3_split(nc: Certificate, r, c: StarElement, pres: ModulePresentation) -> tuple[Certificate, Certificate]:
    """From ``r^2 - c^2 in M`` derive ``r + c`` and ``r - c`` in M.

    Uses ``r +- c = (1/2r) ((r +- c)^2 + (r^2 - c^2))``.
    """
    r = Fraction(r)
    if r <= 0:
        raise CertificateError("r must be a positive rational", "lemma3_split")
    if not c.is_symmetric():
        raise CertificateError("c must be symmetric", "lemma3_split")
    _require(nc, r * r - c * c, pres, "lemma3_split input")
    half = 1 / (2 * r)
    rest = nc.scaled(half)
    plus = Certificate.single(half, r + c) + rest
    minus = Certificate.single(half, r - c) + rest
    _require(plus, r + c, pres, "lemma3_split output r+c")
    _require(minus, r - c, pres, "lemma3_split output r-c")
    return plus, minus


def lemma3_join(cp: Certificate, cm: Certificate, r, c: StarElement, pres: ModulePresentation) -> Certificate:
    """From ``r +- c in M`` derive ``r^2 - c^2 in M``.

    Uses ``r^2 - c^2 = (1/2r) ((r-c)(r+c)(r-c) + (r+c)(r-c)(r+c))``.
    """
    r = Fraction(r)
    if r <= 0:
        raise CertificateError("r must be a positive rational", "lemma3_join")
    if not c.is_symmetric():
        raise CertificateError("c must be symmetric", "lemma3_join")
    _require(cp, r + c, pres, "lemma3_join input r+c")
    _require(cm, r - c, pres, "lemma3_join input r-c")
    half = 1 / (2 * r)
    out = cp.conjugated(r - c).scaled(half) + cm.conjugated(r + c).scaled(half)
    _require(out, r * r - c * c, pres, "lemma3_join output")
    return out


# seminorm transformers --------------------------------------------------------


def trivial_norm_certificate(a: StarElement, bound, pres: ModulePresentation) -> NormCertificate:
    """Bound for an element with ``a a^* = 1`` (e.g. group elements) or ``a = 0``."""
    bound = Fraction(bound)
    aa = a * a.star()
    if aa == 1:
        cert = Certificate() if bound == 1 else Certificate.single(bound * bound - 1, pres.carrier.one())
    elif aa.is_zero():
        cert = Certificate.single(bound * bound, pres.carrier.one())
    else:
        raise CertificateError("element is neither unitary nor zero", "trivial_norm_certificate")
    nc = NormCertificate(bound, a, cert)
    _require_norm(nc, pres, "trivial_norm_certificate")
    return nc


def norm_cert_star(nc: NormCertificate, pres: ModulePresentation) -> NormCertificate:
    """``n(a^*) <= r`` from ``n(a) <= r``.

    ``(r^2/2)^2 - (r^2/2 - a^* a)^2 = a^* (r^2 - a a^*) a`` followed by the split of r^2 - c^2.
    """
    _require_norm(nc, pres, "norm_cert_star input")
    a, r = nc.element, nc.bound
    a_star = a.star()
    if a_star == a:
        return nc
    half = r * r / 2
    c = half - a_star * a
    conj = nc.cert.conjugated(a_star)
    plus, _ = lemma3_split(conj, half, c, pres)
    out = NormCertificate(r, a_star, plus)
    _require_norm(out, pres, "norm_cert_star output")
    return out


def norm_cert_product(na: NormCertificate, nb: NormCertificate, pres: ModulePresentation) -> NormCertificate:
    """``n(ab) <= rs`` via ``r^2 s^2 - (ab)(ab)^* = s (r^2 - aa^*) s + a (s^2 - bb^*) a^*``."""
    _require_norm(na, pres, "norm_cert_product input a")
    _require_norm(nb, pres, "norm_cert_product input b")
    a, r = na.element, na.bound
    b, s = nb.element, nb.bound
    a._check(b)
    out = NormCertificate(r * s, a * b, na.cert.scaled(s * s) + nb.cert.conjugated(a))
    _require_norm(out, pres, "norm_cert_product output")
    return out


def norm_cert_sum(na: NormCertificate, nb: NormCertificate, pres: ModulePresentation) -> NormCertificate:
    """``n(a+b) <= r+s``.

    Pipeline: certificates for ``r^2 s^2 - (ab^*)(ab^*)^*`` and
    ``r^2 s^2 - (ba^*)(ba^*)^*``; the identity
    ``4 r^2 s^2 - c^2 = 2(..) + 2(..) + d d^*`` with ``c = ab^* + ba^*``,
    ``d = ab^* - ba^*``; the split gives ``2rs - c``; finally
    ``(r+s)^2 - (a+b)(a+b)^* = (r^2 - aa^*) + (s^2 - bb^*) + (2rs - c)``.
    """
    _require_norm(na, pres, "norm_cert_sum input a")
    _require_norm(nb, pres, "norm_cert_sum input b")
    a, r = na.element, na.bound
    b, s = nb.element, nb.bound
    a._check(b)
    p1 = norm_cert_product(na, norm_cert_star(nb, pres), pres)
    p2 = norm_cert_product(nb, norm_cert_star(na, pres), pres)
    c = p1.element + p2.element
    d = p1.element - p2.element
    big = p1.cert.scaled(2) + p2.cert.scaled(2) + Certificate.single(1, d)
    _, minus = lemma3_split(big, 2 * r * s, c, pres)
    out = NormCertificate(r + s, a + b, na.cert + nb.cert + minus)
    _require_norm(out, pres, "norm_cert_sum output")
    return out


def norm_cert_sum_many(ncs: Sequence[NormCertificate], pres: ModulePresentation) -> NormCertificate:
    """``n(a_1 + ... + a_m) <= r_1 + ... + r_m`` in one step.

    With ``R = sum r_k`` and ``w_k = r_k / R``::

        R^2 - a a^* = sum_k (R/r_k)(r_k^2 - a_k a_k^*)
                      + sum_{j<k} w_j w_k (a_j/w_j - a_k/w_k)(a_j/w_j - a_k/w_k)^*

    so the certificate grows linearly in the inputs, unlike repeated
    :func:`norm_cert_sum`.
    """
    ncs = list(ncs)
    if not ncs:
        raise CertificateError("empty sum", "norm_cert_sum_many")
    for nc in ncs:
        _require_norm(nc, pres, "norm_cert_sum_many input")
    R = sum((nc.bound for nc in ncs), Fraction(0))
    cert = Certificate()
    for nc in ncs:
        cert = cert + nc.cert.scaled(R / nc.bound)
    for j in range(len(ncs)):
        for k in range(j + 1, len(ncs)):
            rj, rk = ncs[j].bound, ncs[k].bound
            diff = ncs[j].element.scale(R / rj) - ncs[k].element.scale(R / rk)
            if not diff.is_zero():
                cert = cert + Certificate.single(rj * rk / (R * R), diff)
    total = ncs[0].element
    for nc in ncs[1:]:
        total = total + nc.element
    out = NormCertificate(R, total, cert)
    _require_norm(out, pres, "norm_cert_sum_many output")
    return out


def norm_cert_scale(nc: NormCertificate, t, pres: ModulePresentation, denominator: int = 1 << 20) -> NormCertificate:
    """``n(ta) <= |t| n(a)`` for ``t`` in Q(i).

    When ``|t|`` is irrational the bound uses a rational ``T >= |t|`` and the
    slack ``(T^2 - |t|^2) r^2`` is added as a multiple of ``1``.
    """
    _require_norm(nc, pres, "norm_cert_scale input")
    t = GaussianRational.coerce(t)
    if not t:
        raise CertificateError("scaling by zero leaves no positive bound", "norm_cert_scale")
    t2 = t.abs2()
    T = rational_sqrt_upper(t2, denominator)
    cert = nc.cert.scaled(t2)
    slack = (T * T - t2) * nc.bound ** 2
    if slack > 0:
        cert = cert + Certificate.single(slack, pres.carrier.one())
    out = NormCertificate(T * nc.bound, nc.element.scale(t), cert)
    _require_norm(out, pres, "norm_cert_scale output")
    return out


def norm_cert_pair_drop(
    nc: Certificate, r, a: StarElement, b: StarElement, pres: ModulePresentation
) -> Certificate:
    """From ``r - aa^* - bb^* in M`` derive ``r - aa^* in M`` (add the term ``bb^*``)."""
    r = Fraction(r)
    _require(nc, r - a * a.star() - b * b.star(), pres, "norm_cert_pair_drop input")
    out = nc + Certificate.single(1, b)
    _require(out, r - a * a.star(), pres, "norm_cert_pair_drop output")
    return out


def norm_cert_c_star(nc: NormCertificate, pres: ModulePresentation) -> Certificate:
    """Certificate for ``r^4 - (aa^*)(aa^*)^*`` from ``n(a) <= r`` (so ``n(aa^*) <= r^2``)."""
    _require_norm(nc, pres, "norm_cert_c_star input")
    a, r = nc.element, nc.bound
    c = a * a.star()
    R = r * r
    plus = nc.cert + Certificate.single(2, a)  # r^2 + aa^* = (r^2 - aa^*) + 2 aa^*
    return lemma3_join(plus, nc.cert, R, c, pres)


def norm_cert_from_square_sum(
    nc: NormCertificate, a: StarElement, b: StarElement | None, pres: ModulePresentation, bound=None
) -> NormCertificate:
    """``n(a) <= r'`` from a bound ``n(aa^* + bb^*) <= R`` whenever ``r'^2 >= R``.

    The split turns ``R^2 - (aa^*+bb^*)^2`` into ``R - aa^* - bb^*``; the
    ``bb^*`` term is then absorbed and the slack ``r'^2 - R`` added.
    With ``b = None`` this is the converse half of the C*-identity.
    """
    if b is None:
        b = pres.carrier.zero()
    s = a * a.star() + b * b.star()
    if nc.element != s:
        raise CertificateError("norm certificate is not for aa^* + bb^*", "norm_cert_from_square_sum")
    _require_norm(nc, pres, "norm_cert_from_square_sum input")
    R = nc.bound
    _, minus = lemma3_split(nc.cert, R, s, pres)
    dropped = norm_cert_pair_drop(minus, R, a, b, pres)
    r = rational_sqrt_upper(R) if bound is None else Fraction(bound)
    if r * r < R:
        raise CertificateError(f"requested bound {r} has r^2 < {R}", "norm_cert_from_square_sum")
    if r * r > R:
        dropped = dropped + Certificate.single(r * r - R, pres.carrier.one())
    out = NormCertificate(r, a, dropped)
    _require_norm(out, pres, "norm_cert_from_square_sum output")
    return out


# group rings -------------------------------------------------------------


def l1_certificate(a: StarElement, pres: ModulePresentation | None = None) -> NormCertificate:
    """``n(a) <= ||a||_1`` on a group ring, one term per unordered pair of support elements:
    weight ``|a_i a_j|``, conjugator ``1 - (a_i conj(a_j) / |a_i a_j|) g_i g_j^{-1}``."""
    car = a.carrier
    if not isinstance(car, GroupRing):
        raise CarrierError("l1 certificates exist on group rings only")
    if pres is None:
        pres = ModulePresentation(car)
    if a.is_zero():
        raise CertificateError("a = 0 has no positive l1 bound", "l1_certificate")
    support = list(a.items())
    moduli = []
    for _, c in support:
        m = c.modulus()
        if m is None:
            raise IrrationalModulus(c)
        moduli.append(m)
    grp = car.group
    terms = []
    for i in range(len(support)):
        gi, ai = support[i]
        for j in range(i + 1, len(support)):
            gj, aj = support[j]
            w = moduli[i] * moduli[j]
            phase = ai * aj.conjugate() / GaussianRational(w)
            h = grp.mul(gi, grp.inverse[gj])
            conj = car.one() - car.group_element(h).scale(phase)
            terms.append(CertTerm(w, conj, 0))
    nc = NormCertificate(sum(moduli, Fraction(0)), a, Certificate(tuple(terms)))
    _require_norm(nc, pres, "l1_certificate")
    return nc


# free carriers: bounds from ball-shaped generators ------------------------------


def _ball_shape(s: StarElement, car: FreeStar):
    """If ``s = n - sum_{c in C} w_c w_c^*`` with single-letter words ``w_c``,
    return ``(n, C)`` (letter codes); otherwise ``None``."""
    n = s.coefficient(())
    if not n.is_real() or n.re <= 0:
        return None
    codes = []
    for key, coef in s.items():
        if key == ():
            continue
        if len(key) != 2 or coef != -1:
            return None
        c = key[0]
        if car.star_key((c,))[0] != (key[1],):
            return None
        codes.append(c)
    if not codes:
        return None
    return n.re, codes


def letter_bounds(pres: ModulePresentation, denominator: int = 1 << 10) -> dict[int, NormCertificate]:
    """Norm certificates for letters (keyed by letter code, see :mod:`quadmod.algebra`)
    derivable from generators of the form ``n - sum x_i x_i^*``."""
    car = pres.carrier
    if not isinstance(car, FreeStar):
        return {}
    found: dict[int, NormCertificate] = {}
    for idx, s in enumerate(pres.generators, start=1):
        shape = _ball_shape(s, car)
        if shape is None:
            continue
        n, codes = shape
        r = rational_sqrt_upper(n, denominator)
        for c in codes:
            w = StarElement(car, {(c,): 1})
            cert = Certificate.single(1, car.one(), idx)
            for other in codes:
                if other != c:
                    cert = cert + Certificate.single(1, StarElement(car, {(other,): 1}))
            if r * r > n:
                cert = cert + Certificate.single(r * r - n, car.one())
            nc = NormCertificate(r, w, cert)
            if c not in found or nc.bound < found[c].bound:
                found[c] = nc
    for c in list(found):
        partner = car.star_key((c,))[0][0]
        if partner not in found:
            found[partner] = norm_cert_star(found[c], pres)
    for nc in found.values():
        _require_norm(nc, pres, "letter_bounds")
    return found


def bound_propagate(
    a: StarElement, pres: ModulePresentation, base: Mapping[int, NormCertificate] | None = None
) -> NormCertificate:
    """Compositional bound ``sum |coef| * prod(letter bounds)`` with a full certificate.

    Letters are multiplied left to right; the monomial bounds are then combined
    in normal-form order by :func:`norm_cert_sum_many`.
    ``base`` maps letter codes to certificates (free carriers); by default it is
    derived with :func:`letter_bounds`.  Group elements have the bound 1.
    """
    car = pres.carrier
    if a.carrier != car:
        raise CarrierError("element and presentation carriers differ")
    if a.is_zero():
        raise CertificateError("n(0) = 0 has no positive certificate bound", "bound_propagate")
    if isinstance(car, FreeStar):
        if base is None:
            base = letter_bounds(pres)
        base = dict(base)
        for code in range(2 * car.k):
            partner = car.star_key((code,))[0][0]
            if code not in base and partner in base:
                base[code] = norm_cert_star(base[partner], pres)
    elif not isinstance(car, GroupRing):
        raise CarrierError(f"bound propagation is defined on free and group-ring carriers, not {car!r}")

    terms = []
    for key, coef in a.items():
        if isinstance(car, GroupRing):
            word = trivial_norm_certificate(car.group_element(key), 1, pres)
        else:
            word = trivial_norm_certificate(car.one(), 1, pres)
            for code in key:
                if code not in base:
                    raise CertificateError(f"missing base bound for letter code {code}", "bound_propagate")
                word = norm_cert_product(word, base[code], pres) if word.element != 1 else base[code]
        terms.append(norm_cert_scale(word, coef, pres))
    return terms[0] if len(terms) == 1 else norm_cert_sum_many(terms, pres)


# matrix and complexified lifts -------------------------------------------------


def matrix_presentation(pres: ModulePresentation, n: int) -> ModulePresentation:
    """Presentation of ``M_n`` on ``Mat_n(A)``: generators ``s`` placed at position (1,1)."""
    car = MatrixRing(n, pres.carrier)
    gens = tuple(matrix_unit(car, 0, 0, s) for s in pres.generators)
    return ModulePresentation(car, gens)


def complex_presentation(pres: ModulePresentation) -> ModulePresentation:
    """Presentation of ``M°`` on ``A°``: generators ``(s, 0)``."""
    car = Complexified(pres.carrier)
    return ModulePresentation(car, tuple(complexify(s, car) for s in pres.generators))


def lift_matrix_cert(
    cert: Certificate,
    column: Sequence[StarElement],
    pres: ModulePresentation,
    mpres: ModulePresentation | None = None,
) -> Certificate:
    """Each term ``(q, a, c)`` becomes ``(q, C_a, c)`` where ``C_a`` has first column
    ``column * a`` and zeros elsewhere, so its value is ``sum q (col a) c (col a)^*``."""
    n = len(column)
    if mpres is None:
        mpres = matrix_presentation(pres, n)
    mcar = mpres.carrier
    if not isinstance(mcar, MatrixRing) or mcar.n != n:
        raise CertificateError(f"column of length {n} does not fit {mcar!r}", "lift_matrix_cert")
    zero = pres.carrier.zero()
    terms = []
    for t in cert.terms:
        grid = [[zero] * n for _ in range(n)]
        for i, x in enumerate(column):
            grid[i] = [x * t.conjugator] + [zero] * (n - 1)
        terms.append(CertTerm(t.weight, matrix_lift(grid, mcar), t.generator))
    return Certificate(tuple(terms))


def matrix_column_value(value: StarElement, column: Sequence[StarElement], mcar: MatrixRing) -> StarElement:
    """The matrix ``col * value * col^*`` (entry ``(i,j)`` is ``col_i value col_j^*``)."""
    return matrix_lift([[ci * value * cj.star() for cj in column] for ci in column], mcar)


def lift_complex_cert(
    cert: Certificate,
    pres: ModulePresentation,
    imag: Sequence[StarElement] | None = None,
    cpres: ModulePresentation | None = None,
) -> Certificate:
    """Each term ``(q, a, c)`` becomes ``(q, (a, b), c)`` in ``A°``; ``b`` defaults to 0."""
    if cpres is None:
        cpres = complex_presentation(pres)
    ccar = cpres.carrier
    if imag is not None and len(imag) != len(cert.terms):
        raise CertificateError("one imaginary part per term is required", "lift_complex_cert")
    terms = []
    for k, t in enumerate(cert.terms):
        b = imag[k] if imag is not None else pres.carrier.zero()
        terms.append(CertTerm(t.weight, complex_pair(t.conjugator, b, ccar), t.generator))
    return Certificate(tuple(terms))


def presentation(carrier: Carrier, generators: Iterable[StarElement] = (), archimedean_witness=None) -> ModulePresentation:
    return ModulePresentation(carrier, tuple(generators), archimedean_witness)
