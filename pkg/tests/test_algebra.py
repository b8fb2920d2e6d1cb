from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from quadmod.algebra import (
    CarrierError,
    Complexified,
    IrrationalModulus,
    MatrixRing,
    StarElement,
    complex_pair,
    complex_parts,
    complexify,
    matrix_entries,
    matrix_lift,
    matrix_unit,
)
from quadmod.expressions import parse_carrier, parse_expression as P
from quadmod.scalars import GaussianRational as Q
from tests.oracles import convolve, s3_table
from tests.strategies import CARRIERS, free_elements, group_elements, pythagorean, seeded_elements


def test_group_ring_examples():
    c2 = parse_carrier("cyclic:2")
    one_g = P("1 + g1", c2)
    assert one_g * one_g == P("2 + 2·g1", c2)
    a = P("3·g1 - 1/2", c2)
    assert (a + (-a)).is_zero() and len(a - a) == 0
    c3 = parse_carrier("cyclic:3")
    assert P("i·g1", c3).star() == P("-i·g2", c3)


def test_free_examples():
    f = parse_carrier("free:2")
    x1, x2 = f.letter(1), f.letter(2)
    prod = x1 * x2
    assert list(prod.items()) == [((0, 1), Q(1))]
    assert prod.star() == f.letter(2, True) * f.letter(1, True)
    assert P("(x1 + x1^*)^*", f) == P("x1 + x1*", f)


def test_complexified_examples():
    car = Complexified(parse_carrier("symmetric:3"))
    one = complexify(car.inner.one(), car)
    assert one == car.one()
    i = car.imaginary_unit()
    assert i * i == -car.one()
    assert i.star() == -i
    a = complexify(P("2·g1 + g3", car.inner), car)
    assert a * i == i * a
    x, y = complex_parts(complex_pair(P("g1", car.inner), P("g2", car.inner), car))
    assert x == P("g1", car.inner) and y == P("g2", car.inner)


def test_matrix_examples():
    c2 = parse_carrier("cyclic:2")
    m2 = MatrixRing(2, c2)
    eye = matrix_lift([[c2.one(), c2.zero()], [c2.zero(), c2.one()]], m2)
    assert eye == m2.one() and eye.is_symmetric()
    a = P("1 + i·g1", c2)
    assert matrix_unit(m2, 0, 0, a).star() == matrix_unit(m2, 0, 0, a.star())
    # hand expansion: [[1, g],[0, 1]] [[g, 0],[1, 1]] = [[g + g, g],[1, 1]] = [[2g, g],[1, 1]]
    A = matrix_lift([[P("1", c2), P("g1", c2)], [c2.zero(), P("1", c2)]], m2)
    B = matrix_lift([[P("g1", c2), c2.zero()], [P("1", c2), P("1", c2)]], m2)
    assert matrix_entries(A * B) == [[P("2·g1", c2), P("g1", c2)], [P("1", c2), P("1", c2)]]
    with pytest.raises(CarrierError):
        matrix_lift([[c2.one()], [c2.one(), c2.one()]], m2)


def test_carrier_mismatch_and_nesting():
    with pytest.raises(CarrierError):
        P("g1", parse_carrier("cyclic:2")) + P("g1", parse_carrier("cyclic:3"))
    with pytest.raises(CarrierError):
        Complexified(Complexified(parse_carrier("cyclic:2")))
    with pytest.raises(CarrierError):
        MatrixRing(2, MatrixRing(2, parse_carrier("cyclic:2")))


@pytest.mark.parametrize("spec", CARRIERS)
@given(data=st.data())
def test_star_is_involutive_antiautomorphism(spec, data):
    a = data.draw(seeded_elements(spec))
    b = data.draw(seeded_elements(spec))
    assert (a * b).star() == b.star() * a.star()
    assert (a + b).star() == a.star() + b.star()
    assert a.star().star() == a
    assert (a * a.star()).is_symmetric()


@pytest.mark.parametrize("spec", ["symmetric:3", "mat:2:cyclic:2", "complex:cyclic:3", "free:2"])
@given(data=st.data())
def test_associative_and_distributive(spec, data):
    a, b, c = (data.draw(seeded_elements(spec)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(group_elements("symmetric:3"), group_elements("symmetric:3"))
def test_group_ring_product_matches_convolution(a, b):
    table = s3_table()
    expected = convolve(table, dict(a.items()), dict(b.items()))
    got = {g: complex(c) for g, c in (a * b).items()}
    assert set(got) == set(expected)
    assert all(abs(got[g] - expected[g]) < 1e-12 for g in got)


@given(seeded_elements("cyclic:4"), seeded_elements("cyclic:4"))
def test_complexify_is_homomorphism(a, b):
    car = Complexified(a.carrier)
    assert complexify(a * b, car) == complexify(a, car) * complexify(b, car)
    assert complexify(a.star(), car) == complexify(a, car).star()


@given(group_elements("symmetric:3", pythagorean), group_elements("symmetric:3", pythagorean))
def test_l1_norm_submultiplicative(a, b):
    try:
        ab = (a * b).l1_norm()
    except IrrationalModulus:
        assume(False)
    assert ab <= a.l1_norm() * b.l1_norm()
    assert a.star().l1_norm() == a.l1_norm()


def test_l1_irrational():
    c2 = parse_carrier("cyclic:2")
    with pytest.raises(IrrationalModulus):
        P("1 + i", c2).l1_norm()
    assert P("3/5 + 4/5·i", c2).l1_norm() == 1


@given(free_elements())
def test_free_normal_form_unique(a):
    assert StarElement(a.carrier, dict(a.items())) == a
    assert all(c != 0 for _, c in a.items())


def test_scale_and_power():
    c3 = parse_carrier("cyclic:3")
    g = P("g1", c3)
    assert g ** 3 == c3.one()
    assert g.scale(Fraction(1, 2)) == P("1/2·g1", c3)
    assert (g * Q(0, 1)).star() == P("-i·g2", c3)
