"""Two-sided seminorm estimates on a free *-algebra.

With the generator 1 - x x^* the admissible matrix points are contractions, so
n(a) is the supremum of |a(X)| over contractions X.  Certificates give the
upper bound; sampled contractions give the lower bound.
"""

import numpy as np

from quadmod import parse_carrier, parse_expression, presentation, seminorm
from quadmod.positivity import classify_bounded
from quadmod.representations import matrix_point_rep

car = parse_carrier("free:1")
pres = presentation(car, [parse_expression("1 - x1 x1*", car)], archimedean_witness=1)

for text in ["x1 x1 + x1", "x1 - x1*", "1 + x1 x1* x1"]:
    a = parse_expression(text, car)
    est = seminorm(a, pres, seed=1)
    print(f"n({text}) in [{est.lower:.4f}, {est.upper:.4f}]")

# supplying the right point closes the gap
a = parse_expression("x1 x1 + x1", car)
est = seminorm(a, pres, points=[matrix_point_rep(car, [np.eye(1)])])
print(f"with the point x1 -> 1: [{est.lower:.4f}, {est.upper:.4f}]")

# without a bounding generator nothing is certified
bare = presentation(car)
x = car.letter(1)
print(f"\nno generators: n(x1) estimate {seminorm(x, bare).upper}, "
      f"classified {classify_bounded(x, bare)!r}, with threshold 100: {classify_bounded(x, bare, thresholds=[100])!r}")
