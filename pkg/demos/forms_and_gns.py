"""Positive forms, module positivity and the GNS construction.

A positive form is stored by its values on the basis.  It respects the module
when f(a s a^*) >= 0 for every generator s; then |f(a)| <= n(a) f(1), and its
GNS representation is admissible.  When it does not, a concrete module element
with negative value is produced.
"""

import numpy as np

from quadmod import build_AM_model, formats, parse_carrier, parse_expression, presentation
from quadmod.forms import (
    form_from_values,
    form_respects_module,
    gns,
    gns_residual,
    negative_witness,
    prop9_audit,
    prop10_audit,
    random_positive_form,
    vector_form,
)

car = parse_carrier("cyclic:2")
pres = presentation(car, [parse_expression("g1", car)])

trace = form_from_values(car, {0: 2, 1: 0})
g = gns(trace)
print(f"trace form: GNS dimension {g.dim}, Omega = {np.round(g.omega, 6)}, residual {gns_residual(g, trace):.1e}")
print(f"  respects S = {{g}}: {form_respects_module(trace, pres)}")
cert, m, value = negative_witness(trace, pres)
print(f"  witness m = {m} with f(m) = {value:+.3f}")

try:
    form_from_values(car, {0: 1, 1: 2})
except ValueError as exc:
    print(f"f(1) = 1, f(g) = 2 rejected: {exc}")

s3 = parse_carrier("symmetric:3")
spres = presentation(s3, [parse_expression("g1", s3)])
rng = np.random.default_rng(0)
f = random_positive_form(s3, rng, rank=2)
print(f"\nrandom rank-2 form on C[S3]: GNS dimension {gns(f).dim}")
print(prop9_audit(f, spres, samples=20).summary())

# a vector state of an admissible irrep respects the module
model = build_AM_model(spres)
rep = model.irreps[0]
h = vector_form(rep, np.full(rep.dim, 1.5))
print(f"\nvector state on the admissible irrep respects S: {form_respects_module(h, spres)}")
print(prop10_audit(gns(h), spres, samples=20).summary())
text = formats.dumps(formats.form_to_json(h))
back = formats.form_from_json(text)
print(f"form JSON is {len(text)} bytes and reloads to the same values: {np.allclose(back.values, h.values)}")
