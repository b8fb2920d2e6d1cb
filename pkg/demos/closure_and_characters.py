"""Closure of the module and character spaces.

On a finite carrier a symmetric x lies in the closure of M exactly when every
admissible irrep sends it to a PSD matrix; it is an interior point when those
matrices are positive definite.  For abelian groups the admissible irreps are
characters and the test reads off their values.
"""

from quadmod import arch_membership, character_space, parse_carrier, parse_expression, presentation
from quadmod.positivity import theorem1_audit

car = parse_carrier("cyclic:4")
P = lambda text: parse_expression(text, car)

for gens in ([], ["g1 + g3"]):
    pres = presentation(car, [P(g) for g in gens])
    X = character_space(pres)
    print(f"S = {gens}: {len(X)} characters, statuses {X.statuses}, pairing {X.pairing}")
    for text in ["1", "g1 + g3", "1 + g2", "g2", "2 - g1 - g3"]:
        x = P(text)
        vals = ", ".join(f"{round(v.real, 9) + 0.0:+.2f}" for v in X.values(x))
        print(f"  {text:12s} values [{vals}] -> {arch_membership(x, pres)}")
    print(theorem1_audit(pres, samples=40).summary())
    print()

# a symmetric generator with non-real coefficients breaks the symmetry g -> g^-1
pres = presentation(car, [P("i g1 - i g3")])
X = character_space(pres)
print(f"S = [i g1 - i g3]: exponents {X.exponents}, pairing {X.pairing}")
