"""Seminorms on group rings.

On a finite group ring the seminorm of the archimedean module is the largest
operator norm over the irreducible representations that respect the module.
This script computes it three ways for a few elements of C[S3] and shows how
extra module generators shrink the set of admissible representations.
"""

from quadmod import build_AM_model, decompose_irreps, l1_certificate, parse_carrier, parse_expression, presentation
from quadmod.certificates import verify_norm
from quadmod.linalg import operator_norm
from quadmod.representations import regular_rep

car = parse_carrier("symmetric:3")
irr = decompose_irreps(car, seed=0)
print(f"C[S3] splits into irreps of dimensions {irr.dimensions}")
print(f"character orthogonality residual {irr.orthogonality_residual():.1e}\n")

model = build_AM_model(presentation(car))
reg = regular_rep(car)
for text in ["1 + g1", "g1 + g2 + g3", "2 - g4 - g5", "1 + i g1 - 1/2 g3"]:
    a = parse_expression(text, car)
    nc = l1_certificate(a)
    print(f"a = {text}")
    print(f"  max over irreps      {model.norm(a):.6f}")
    print(f"  regular rep norm     {operator_norm(reg.apply(a)):.6f}")
    print(f"  l1 bound (certified) {nc.bound}  verified={bool(verify_norm(nc, presentation(car)))}")

# a generator removes the irreps where it is not PSD
for gens in (["g1"], ["-g1"]):
    pres = presentation(car, [parse_expression(g, car) for g in gens])
    m = build_AM_model(pres)
    a = parse_expression("g1 + g2 + g3", car)
    print(f"\nS = {gens}: admissible irreps {m.dimensions}, n(g1 + g2 + g3) = {m.norm(a):.4f}")
