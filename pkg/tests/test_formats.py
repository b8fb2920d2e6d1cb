import json

import numpy as np
import pytest

from quadmod import formats
from quadmod.certificates import (
    bound_propagate,
    cert_verify,
    l1_certificate,
    lift_matrix_cert,
    matrix_column_value,
    matrix_presentation,
    presentation,
    verify_norm,
)
from quadmod.expressions import parse_carrier, parse_expression as P
from quadmod.forms import random_positive_form
from quadmod.irreps import decompose_irreps
from quadmod.sampling import random_element


def roundtrip_cert(nc, pres):
    text = formats.dumps(formats.certificate_to_json(nc, pres))
    pres2, cert, target, nc2 = formats.certificate_from_json(text)
    assert formats.dumps(formats.certificate_to_json(nc2, pres2)) == text
    return pres2, cert, target, nc2


@pytest.mark.parametrize("spec,gens,expr", [
    ("cyclic:4", [], "1 + i g1"),
    ("symmetric:3", ["g1"], "2 g1 - 1/3 g4"),
    ("free:2", ["2 - x1 x1* - x2 x2*"], "x1 x2 + 1/2 x2*"),
])
def test_certificate_roundtrip(spec, gens, expr):
    car = parse_carrier(spec)
    witness = 1 if spec.startswith("free") else None
    pres = presentation(car, [P(g, car) for g in gens], witness)
    a = P(expr, car)
    nc = l1_certificate(a, pres) if not spec.startswith("free") else bound_propagate(a, pres)
    pres2, cert, target, nc2 = roundtrip_cert(nc, pres)
    assert pres2.generators == pres.generators and pres2.archimedean_witness == witness
    assert nc2.element == a and nc2.bound == nc.bound
    assert cert_verify(cert, target, pres2) and verify_norm(nc2, pres2)


def test_matrix_certificate_roundtrip():
    inner = parse_carrier("cyclic:2")
    pres = presentation(inner, [P("1 + g1", inner)])
    mpres = matrix_presentation(pres, 2)
    rng = np.random.default_rng(4)
    for _ in range(10):
        nc = l1_certificate(P("2 + g1", inner), pres)
        column = [random_element(inner, rng), random_element(inner, rng)]
        cert = lift_matrix_cert(nc.cert, column, pres, mpres)
        target = matrix_column_value(nc.target(), column, mpres.carrier)
        text = formats.dumps(formats.certificate_to_json(cert, mpres, target))
        p2, c2, t2, nc2 = formats.certificate_from_json(text)
        assert nc2 is None and t2 == target and cert_verify(c2, t2, p2)
        assert formats.dumps(formats.certificate_to_json(c2, p2, t2)) == text


def test_certificate_format_errors():
    pres = presentation(parse_carrier("cyclic:2"))
    obj = formats.certificate_to_json(l1_certificate(P("1 + g1", pres.carrier), pres), pres)
    del obj["claims"]
    with pytest.raises(formats.FormatError, match="claims"):
        formats.certificate_from_json(obj)
    with pytest.raises(formats.FormatError, match="invalid JSON"):
        formats.certificate_from_json("{not json")


@pytest.mark.parametrize("spec", ["cyclic:4", "symmetric:3", "quaternion:8", "mat:2:cyclic:2"])
def test_irreps_roundtrip(spec):
    car = parse_carrier(spec)
    irr = decompose_irreps(car, seed=1)
    text = formats.dumps(formats.irreps_to_json(irr))
    car2, reps, seed = formats.irreps_from_json(text)
    assert car2 == car and seed == 1 and len(reps) == len(irr.irreps)
    for r, r2 in zip(irr.irreps, reps):
        for k in car.basis():
            assert np.allclose(r.basis_image(k), r2.basis_image(k), atol=1e-11)
    # stable under a second pass
    assert formats.dumps(json.loads(text)) == text


@pytest.mark.parametrize("spec", ["cyclic:4", "symmetric:3", "mat:2:cyclic:2", "complex:cyclic:2"])
def test_form_roundtrip(spec):
    car = parse_carrier(spec)
    f = random_positive_form(car, np.random.default_rng(0))
    text = formats.dumps(formats.form_to_json(f))
    g = formats.form_from_json(text)
    assert np.allclose(f.values, g.values, atol=1e-11)
    assert formats.dumps(formats.form_to_json(g)) == text


def test_form_json_defaults_and_errors():
    f = formats.form_from_json({"carrier": "cyclic:2", "values": {"1": 2}})
    assert np.allclose(f.values, [2, 0])
    with pytest.raises(formats.FormatError, match="basis word"):
        formats.form_from_json({"carrier": "cyclic:2", "values": {"1 + g1": 2}})
    with pytest.raises(formats.FormatError, match="missing"):
        formats.form_from_json({"values": {}})
