from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from quadmod.algebra import IrrationalModulus, complex_pair, complexify, matrix_lift
from quadmod.certificates import (
    Certificate,
    CertificateError,
    CertTerm,
    ModulePresentation,
    NormCertificate,
    bound_propagate,
    cert_eval,
    cert_verify,
    complex_presentation,
    l1_certificate,
    lemma3_join,
    lemma3_split,
    letter_bounds,
    lift_complex_cert,
    lift_matrix_cert,
    matrix_column_value,
    matrix_presentation,
    norm_cert_c_star,
    norm_cert_from_square_sum,
    norm_cert_pair_drop,
    norm_cert_product,
    norm_cert_scale,
    norm_cert_star,
    norm_cert_sum,
    norm_cert_sum_many,
    presentation,
    trivial_norm_certificate,
    verify_norm,
)
from quadmod.expressions import parse_carrier, parse_expression as P
from quadmod.scalars import GaussianRational as Q
from tests.strategies import group_elements, pythagorean, seeded_elements

C2, C3, C4 = (parse_carrier(f"cyclic:{n}") for n in (2, 3, 4))
F1, F2 = parse_carrier("free:1"), parse_carrier("free:2")


def one_term(carrier, text, weight=1, gen=0):
    return Certificate.single(weight, P(text, carrier), gen)


# evaluation and verification ------------------------------------------------


def test_cert_eval_examples():
    pres = presentation(C2)
    assert cert_eval(Certificate(), pres).is_zero()
    assert cert_eval(one_term(C2, "1"), pres) == C2.one()
    assert cert_eval(one_term(C2, "1 - g1"), pres) == P("2 - 2·g1", C2)


def test_cert_verify_examples():
    pres = presentation(C2)
    cert = one_term(C2, "1 - g1")
    assert cert_verify(cert, P("2 - 2·g1", C2), pres)
    assert not cert_verify(cert, P("2 - g1", C2), pres)
    v = cert_verify(cert, P("2 - i·g1", C2), pres)
    assert not v and v.reason == "target not symmetric"


def test_generator_terms():
    pres = presentation(C2, [P("1 + g1", C2)])
    cert = Certificate.single(Fraction(1, 2), P("g1", C2), 1)
    assert cert_eval(cert, pres) == P("1/2 + 1/2·g1", C2)
    with pytest.raises(CertificateError):
        cert_eval(Certificate.single(1, C2.one(), 5), pres)


def test_presentation_rejects_nonsymmetric():
    with pytest.raises(CertificateError):
        presentation(C3, [P("g1", C3)])
    with pytest.raises(CertificateError):
        presentation(F1, [P("1 - x1", F1)], archimedean_witness=1)


def test_weights_positive():
    with pytest.raises(CertificateError):
        CertTerm(Fraction(0), C2.one())
    with pytest.raises(CertificateError):
        NormCertificate(Fraction(0), C2.one(), Certificate())


# splitting r^2 - c^2 into r + c and r - c -------------------------------------


def test_split_degenerate():
    pres = presentation(C2)
    plus, minus = lemma3_split(one_term(C2, "1"), 1, C2.zero(), pres)
    assert cert_eval(plus, pres) == 1 and cert_eval(minus, pres) == 1
    joined = lemma3_join(plus, minus, 1, C2.zero(), pres)
    assert cert_eval(joined, pres) == 1


def test_split_c3_example():
    pres = presentation(C3)
    c = P("g1 + g2", C3)
    assert c * c == P("2 + g1 + g2", C3)
    # 4 - c^2 = 2 - g - g^2 = (1 - g)(1 - g)^*
    nc = one_term(C3, "1 - g1")
    assert cert_verify(nc, 4 - c * c, pres)
    plus, minus = lemma3_split(nc, 2, c, pres)
    assert cert_eval(plus, pres) == P("2 + g1 + g2", C3)
    assert cert_eval(minus, pres) == P("2 - g1 - g2", C3)
    back = lemma3_join(plus, minus, 2, c, pres)
    assert cert_eval(back, pres) == cert_eval(nc, pres)


@given(group_elements("cyclic:4", pythagorean))
def test_split_join_round_trip_random(a):
    assume(not a.is_zero())
    try:
        nc = l1_certificate(a + a.star()) if not (a + a.star()).is_zero() else None
    except IrrationalModulus:
        nc = None
    assume(nc is not None)
    pres = presentation(C4)
    c = nc.element
    r = nc.bound
    # r^2 - c c^* with c symmetric is r^2 - c^2
    plus, minus = lemma3_split(nc.cert, r, c, pres)
    back = lemma3_join(plus, minus, r, c, pres)
    assert cert_eval(back, pres) == r * r - c * c
    assert lemma3_split(back, r, c, pres)[0].terms  # and split again


def test_split_join_reject_bad_input():
    pres = presentation(C3)
    with pytest.raises(CertificateError):
        lemma3_split(one_term(C3, "1"), 2, P("g1 + g2", C3), pres)
    with pytest.raises(CertificateError):
        lemma3_split(one_term(C3, "1"), 0, C3.zero(), pres)


# seminorm transformers ---------------------------------------------------------


def test_star_examples():
    pres = presentation(C3)
    nc = l1_certificate(P("1 + g1", C3))
    assert nc.bound == 2
    out = norm_cert_star(nc, pres)
    assert out.element == P("1 + g2", C3) and out.bound == 2 and verify_norm(out, pres)
    sym = l1_certificate(P("g1 + g2", C3))
    assert norm_cert_star(sym, pres) is sym

    fp = presentation(F1, [P("1 - x1 x1*", F1)], 1)
    x = NormCertificate(Fraction(1), F1.letter(1), Certificate.single(1, F1.one(), 1))
    xs = norm_cert_star(x, fp)
    assert xs.element == F1.letter(1, True) and xs.bound == 1 and verify_norm(xs, fp)


def test_product_examples():
    pres = presentation(C2)
    na = l1_certificate(P("1 + g1", C2))
    unit = trivial_norm_certificate(C2.one(), 1, pres)
    same = norm_cert_product(na, unit, pres)
    assert same.element == na.element and same.bound == na.bound
    sq = norm_cert_product(na, na, pres)
    assert sq.bound == 4 and sq.target() == 16 - (P("(1+g1)^2", C2) * P("(1+g1)^2", C2).star())
    assert verify_norm(sq, pres)

    fp = presentation(F2, [P("1 - x1 x1*", F2), P("1 - x2 x2*", F2)])
    b1 = NormCertificate(Fraction(1), F2.letter(1), Certificate.single(1, F2.one(), 1))
    b2 = NormCertificate(Fraction(1), F2.letter(2), Certificate.single(1, F2.one(), 2))
    p = norm_cert_product(b1, b2, fp)
    assert p.bound == 1 and p.element == P("x1 x2", F2) and verify_norm(p, fp)


def test_sum_examples():
    pres = presentation(C2)
    na = l1_certificate(P("1 + g1", C2))
    zero = NormCertificate(Fraction(3), C2.zero(), Certificate.single(9, C2.one()))
    s = norm_cert_sum(na, zero, pres)
    assert s.bound == 5 and s.element == na.element

    one = trivial_norm_certificate(C2.one(), 1, pres)
    g = trivial_norm_certificate(P("g1", C2), 1, pres)
    s = norm_cert_sum(one, g, pres)
    assert s.bound == 2 and s.target() == P("2 - 2·g1", C2) and verify_norm(s, pres)

    fp = presentation(F1, [P("1 - x1 x1*", F1)], 1)
    x = NormCertificate(Fraction(1), F1.letter(1), Certificate.single(1, F1.one(), 1))
    s = norm_cert_sum(x, norm_cert_star(x, fp), fp)
    assert s.bound == 2 and s.element == P("x1 + x1*", F1)


def test_sum_many_matches_pairwise_sum():
    pres = presentation(C4)
    pieces = [l1_certificate(P(t, C4)) for t in ("1 + g1", "i g2", "3/5 g3 - 4/5 g1")]
    many = norm_cert_sum_many(pieces, pres)
    chained = norm_cert_sum(norm_cert_sum(pieces[0], pieces[1], pres), pieces[2], pres)
    assert many.bound == chained.bound == Fraction(22, 5)
    assert many.element == chained.element and verify_norm(many, pres)
    assert len(many.cert) < len(chained.cert)
    with pytest.raises(CertificateError):
        norm_cert_sum_many([], pres)


@given(st.lists(seeded_elements("free:2"), min_size=1, max_size=4))
def test_sum_many_random_free(elements):
    pres = presentation(F2, [P("2 - x1 x1* - x2 x2*", F2)], 1)
    pieces = [bound_propagate(a, pres) for a in elements if not a.is_zero()]
    assume(pieces)
    out = norm_cert_sum_many(pieces, pres)
    assert out.bound == sum(p.bound for p in pieces) and verify_norm(out, pres)


def test_pair_drop_examples():
    pres = presentation(C2)
    a, b = C2.one(), P("g1", C2)
    cert = one_term(C2, "1")  # 3 - 1 - g g^* = 1
    out = norm_cert_pair_drop(cert, 3, a, b, pres)
    assert cert_eval(out, pres) == 2
    out0 = norm_cert_pair_drop(one_term(C2, "1"), 2, a, C2.zero(), pres)
    assert cert_eval(out0, pres) == 1

    fp = presentation(F2, [P("2 - x1 x1* - x2 x2*", F2)], 1)
    out = norm_cert_pair_drop(Certificate.single(1, F2.one(), 1), 2, F2.letter(1), F2.letter(2), fp)
    assert cert_eval(out, fp) == P("2 - x1 x1*", F2)


def test_scale_rational_and_gaussian():
    pres = presentation(C3)
    nc = l1_certificate(P("1 + g1", C3))
    s = norm_cert_scale(nc, Fraction(-3, 2), pres)
    assert s.bound == 3 and s.element == P("-3/2 - 3/2·g1", C3)
    s = norm_cert_scale(nc, Q(Fraction(3, 5), Fraction(4, 5)), pres)
    assert s.bound == 2
    s = norm_cert_scale(nc, Q(1, 1), pres)  # |t| = sqrt 2, rational upper bound used
    assert s.bound >= 2 * Fraction(14142, 10000) and verify_norm(s, pres)


def test_c_star_identity_and_converse():
    pres = presentation(C3)
    a = P("1 + 2·g1", C3)
    nc = l1_certificate(a)
    cert = norm_cert_c_star(nc, pres)
    aa = a * a.star()
    assert cert_verify(cert, nc.bound ** 4 - aa * aa.star(), pres)
    # converse: bound r^2 for aa^* gives bound r' for a whenever r'^2 >= r^2
    big = NormCertificate(nc.bound ** 2, aa, cert)
    back = norm_cert_from_square_sum(big, a, None, pres, bound=nc.bound)
    assert back.bound == nc.bound and verify_norm(back, pres)
    looser = norm_cert_from_square_sum(big, a, None, pres, bound=nc.bound + Fraction(1, 7))
    assert verify_norm(looser, pres)


def test_square_sum_with_pair():
    pres = presentation(C2)
    a, b = P("1", C2), P("g1", C2)
    s = a * a.star() + b * b.star()  # = 2
    nc = trivial_norm_certificate(s.scale(Fraction(1, 2)), 1, pres)
    nc = norm_cert_scale(nc, 2, pres)
    out = norm_cert_from_square_sum(nc, a, b, pres)
    assert out.element == a and out.bound * out.bound >= 2 and verify_norm(out, pres)


# l1 and propagation ------------------------------------------------------------


def test_l1_examples():
    single = l1_certificate(P("3/5·g1", C4))
    assert len(single.cert) == 0 and single.bound == Fraction(3, 5)
    nc = l1_certificate(P("1 + g1", C2))
    assert nc.bound == 2
    assert [(t.weight, t.conjugator, t.generator) for t in nc.cert.terms] == [(1, P("1 - g1", C2), 0)]
    assert nc.target() == P("2 - 2·g1", C2)
    nc = l1_certificate(P("1 + i·g1", C4))
    assert nc.bound == 2 and nc.cert.terms[0].weight == 1
    assert nc.cert.terms[0].conjugator == P("1 + i·g3", C4)
    with pytest.raises(IrrationalModulus):
        l1_certificate(P("1 + (1 + i)·g1", C4))
    with pytest.raises(CertificateError):
        l1_certificate(C4.zero())


@given(group_elements("symmetric:3", pythagorean))
def test_l1_matches_propagation(a):
    assume(not a.is_zero())
    pres = presentation(a.carrier)
    l1 = l1_certificate(a, pres)
    bp = bound_propagate(a, pres)
    assert l1.bound == bp.bound == a.l1_norm()
    assert verify_norm(bp, pres)


def test_propagate_examples():
    assert bound_propagate(C2.one(), presentation(C2)).bound == 1
    fp = presentation(F1, [P("1 - x1 x1*", F1)], 1)
    nc = bound_propagate(P("x1 x1 + x1", F1), fp)
    assert nc.bound == 2 and verify_norm(nc, fp)
    with pytest.raises(CertificateError):
        bound_propagate(P("x1", F1), presentation(F1))


def test_letter_bounds_irrational_radius():
    fp = presentation(F2, [P("2 - x1 x1* - x2 x2*", F2)], 1)
    lb = letter_bounds(fp)
    assert set(lb) == {0, 1, 2, 3}
    assert all(nc.bound ** 2 >= 2 and nc.bound < Fraction(1416, 1000) for nc in lb.values())
    assert all(verify_norm(nc, fp) for nc in lb.values())


# lifts ---------------------------------------------------------------------------


def test_matrix_lift_examples():
    pres = presentation(C2, [P("1 + g1", C2)])
    cert = Certificate.single(1, P("g1", C2), 1) + one_term(C2, "1 - g1")
    m = cert_eval(cert, pres)
    assert lift_matrix_cert(cert, [C2.one()], pres) is not None
    m1 = matrix_presentation(pres, 1)
    assert cert_eval(lift_matrix_cert(cert, [C2.one()], pres, m1), m1) == matrix_lift([[m]], m1.carrier)

    m2 = matrix_presentation(pres, 2)
    lifted = lift_matrix_cert(cert, [C2.one(), C2.zero()], pres, m2)
    assert cert_verify(lifted, matrix_lift([[m, C2.zero()], [C2.zero(), C2.zero()]], m2.carrier), m2)

    ones = lift_matrix_cert(one_term(C2, "1"), [C2.one(), C2.one()], pres, m2)
    assert cert_eval(ones, m2) == matrix_lift([[C2.one(), C2.one()], [C2.one(), C2.one()]], m2.carrier)

    col = [P("g1", C2), P("1 - i·g1", C2)]
    lifted = lift_matrix_cert(cert, col, pres, m2)
    assert cert_verify(lifted, matrix_column_value(m, col, m2.carrier), m2)
    with pytest.raises(CertificateError):
        lift_matrix_cert(cert, [C2.one()] * 3, pres, m2)


def test_complex_lift_examples():
    pres = presentation(C3)
    cp = complex_presentation(pres)
    car = cp.carrier
    lifted = lift_complex_cert(one_term(C3, "1"), pres, cpres=cp)
    assert cert_eval(lifted, cp) == car.one()
    # (0, 1)(1, 0)(0, 1)^* = i * i^* = 1
    icert = lift_complex_cert(one_term(C3, "0 + 0"), pres, imag=[C3.one()], cpres=cp) if False else \
        Certificate.single(1, car.imaginary_unit())
    assert cert_eval(icert, cp) == car.one()
    a = P("1 + 2·g1", C3)
    nc = l1_certificate(a)
    lifted = lift_complex_cert(nc.cert, pres, cpres=cp)
    assert cert_verify(lifted, complexify(nc.target(), car), cp)
    imag = [P("g2", C3)] * len(nc.cert.terms)
    mixed = lift_complex_cert(nc.cert, pres, imag=imag, cpres=cp)
    expect = sum((complex_pair(t.conjugator, P("g2", C3), car) * complex_pair(t.conjugator, P("g2", C3), car).star())
                 .scale(t.weight) for t in nc.cert.terms)
    assert cert_verify(mixed, expect, cp)


# master soundness property -----------------------------------------------------


@pytest.mark.parametrize("spec", ["cyclic:3", "symmetric:3", "mat:2:cyclic:2", "complex:cyclic:2", "free:2"])
@given(data=st.data())
def test_random_certificates_evaluate_to_symmetric_elements(spec, data):
    car = parse_carrier(spec)
    a = data.draw(seeded_elements(spec))
    b = data.draw(seeded_elements(spec, symmetric=True))
    pres = ModulePresentation(car, (b,) if not b.is_zero() else ())
    w = data.draw(st.fractions(min_value=Fraction(1, 10), max_value=10))
    cert = Certificate.single(w, a, len(pres.generators))
    value = cert_eval(cert, pres)
    assert value.is_symmetric()
    assert cert_verify(cert, value, pres)
    if not value.is_zero():
        assert not cert_verify(cert, value + car.one(), pres)
