import numpy as np
import pytest

from quadmod.expressions import parse_carrier
from quadmod.irreps import decompose_irreps, irreducibility_residual, model_irreps
from quadmod.linalg import operator_norm
from quadmod.representations import regular_rep, representation_residuals
from quadmod.sampling import random_element
from tests.oracles import IRREP_DIMENSIONS, cyclic_characters


def _rows_match(a, b, tol=1e-6):
    used = set()
    for row in a:
        for k, other in enumerate(b):
            if k not in used and np.abs(row - other).max() < tol:
                used.add(k)
                break
        else:
            return False
    return len(used) == len(b)


@pytest.mark.parametrize("spec", sorted(IRREP_DIMENSIONS))
def test_dimensions_and_orthogonality(spec):
    irr = decompose_irreps(parse_carrier(spec), seed=0)
    assert sorted(irr.dimensions) == IRREP_DIMENSIONS[spec]
    assert sum(d * d for d in irr.dimensions) == parse_carrier(spec).group.order
    assert irr.orthogonality_residual() < 1e-6
    assert irr.multiplicities == irr.dimensions
    for rep in irr:
        assert irreducibility_residual(rep) < 1e-7


@pytest.mark.parametrize("spec", ["symmetric:3", "dihedral:4", "quaternion:8", "symmetric:4"])
def test_seed_independence(spec):
    car = parse_carrier(spec)
    a, b = decompose_irreps(car, seed=1), decompose_irreps(car, seed=99)
    assert _rows_match(a.characters, b.characters)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_cyclic_characters_match_formula(n):
    irr = decompose_irreps(parse_carrier(f"cyclic:{n}"))
    assert _rows_match(irr.characters, np.array(cyclic_characters(n)))


def test_z2_and_z4_examples():
    irr = decompose_irreps(parse_carrier("cyclic:2"))
    assert sorted(round(float(r.basis_image(1)[0, 0].real), 9) for r in irr) == [-1, 1]
    irr = decompose_irreps(parse_carrier("cyclic:4"))
    vals = sorted((round(r.basis_image(1)[0, 0].real), round(r.basis_image(1)[0, 0].imag)) for r in irr)
    assert vals == [(-1, 0), (0, -1), (0, 1), (1, 0)]


@pytest.mark.parametrize("spec", ["symmetric:3", "dihedral:4", "quaternion:8"])
def test_regular_norm_is_max_irrep_norm(spec):
    car = parse_carrier(spec)
    irr = decompose_irreps(car)
    reg = regular_rep(car)
    rng = np.random.default_rng(2)
    for _ in range(20):
        a = random_element(car, rng)
        best = max(operator_norm(r.apply(a)) for r in irr)
        assert abs(best - operator_norm(reg.apply(a))) < 1e-7


@pytest.mark.parametrize("spec,dims", [
    ("mat:2:cyclic:2", [2, 2]),
    ("complex:cyclic:3", [1] * 6),
    ("mat:3:cyclic:3", [3, 3, 3]),
    ("complex:symmetric:3", [1, 1, 1, 1, 2, 2]),
])
def test_composite_carriers(spec, dims):
    car = parse_carrier(spec)
    irr = decompose_irreps(car)
    assert sorted(irr.dimensions) == dims
    model = model_irreps(car)
    assert sorted(r.dim for r in model) == dims
    rng = np.random.default_rng(0)
    pairs = [(random_element(car, rng), random_element(car, rng)) for _ in range(10)]
    for rep in list(irr) + list(model):
        assert max(representation_residuals(rep, pairs).values()) < 1e-9
