"""Exact certificates and the seminorm calculus.

A certificate is a list of terms q * a * s * a^* whose sum is checked against a
claimed element with exact Gaussian-rational arithmetic.  Norm certificates
witness r^2 - a a^* in M, and the transformers combine them the way the
triangle inequality, submultiplicativity and the star identity combine norms.
"""

from fractions import Fraction

from quadmod import formats, parse_carrier, parse_expression, presentation
from quadmod.certificates import (
    bound_propagate,
    cert_eval,
    l1_certificate,
    lemma3_join,
    lemma3_split,
    norm_cert_c_star,
    norm_cert_product,
    norm_cert_star,
    norm_cert_sum,
    verify_norm,
)

car = parse_carrier("cyclic:4")
pres = presentation(car)
P = lambda text: parse_expression(text, car)

a = l1_certificate(P("1 + i g1"))
print(f"n(1 + i g) <= {a.bound} with {len(a.cert)} term(s): value {cert_eval(a.cert, pres)}")
b = l1_certificate(P("g2 - 1/2 g3"))
print(f"n(g^2 - g^3/2) <= {b.bound}")

for name, nc in [
    ("star", norm_cert_star(a, pres)),
    ("product", norm_cert_product(a, b, pres)),
    ("sum", norm_cert_sum(a, b, pres)),
]:
    print(f"{name:8s} n({nc.element}) <= {nc.bound}  terms={len(nc.cert)}  ok={bool(verify_norm(nc, pres))}")

# from r^2 - c^2 in M to r +- c in M and back
c = P("g1 + g3")
nc = l1_certificate(c)
plus, minus = lemma3_split(nc.cert, nc.bound, c, pres)
print(f"\nsplit: {nc.bound} + c = {cert_eval(plus, pres)}")
print(f"       {nc.bound} - c = {cert_eval(minus, pres)}")
print(f"join reproduces r^2 - c^2: {cert_eval(lemma3_join(plus, minus, nc.bound, c, pres), pres) == nc.target()}")
print(f"C*-identity certificate has {len(norm_cert_c_star(a, pres))} terms")

# bounds on a free algebra with a ball generator 2 - x1 x1^* - x2 x2^*
free = parse_carrier("free:2")
fpres = presentation(free, [parse_expression("2 - x1 x1* - x2 x2*", free)], archimedean_witness=1)
x = parse_expression("x1 x2 + 1/2 x2*", free)
fb = bound_propagate(x, fpres)
print(f"\nfree algebra: n({x}) <= {fb.bound} = {float(fb.bound):.4f}, {len(fb.cert)} terms")

text = formats.dumps(formats.certificate_to_json(fb, fpres))
print(f"serialised certificate: {len(text)} bytes, first claim line:")
print("  " + next(line for line in text.splitlines() if '"bound"' in line).strip())
back = formats.certificate_from_json(text)[3]
print(f"reloaded and verified: {bool(verify_norm(back, fpres))}; bound {back.bound == Fraction(fb.bound)}")
