"""Seeded random elements for audits and property tests."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .algebra import Carrier, Complexified, FreeStar, MatrixRing, StarElement, complex_pair, matrix_lift
from .scalars import GaussianRational

# unit Gaussian rationals with rational modulus
_PHASES = [
    GaussianRational(1), GaussianRational(-1), GaussianRational(0, 1), GaussianRational(0, -1),
    GaussianRational(Fraction(3, 5), Fraction(4, 5)), GaussianRational(Fraction(-4, 5), Fraction(3, 5)),
    GaussianRational(Fraction(5, 13), Fraction(-12, 13)), GaussianRational(Fraction(8, 17), Fraction(15, 17)),
]


def random_scalar(rng: np.random.Generator, complex_: bool = True, rational_modulus: bool = True) -> GaussianRational:
    """A nonzero small Gaussian rational; with ``rational_modulus`` its modulus is rational."""
    mag = Fraction(int(rng.integers(1, 7)), int(rng.integers(1, 5)))
    if not complex_:
        return GaussianRational(mag if rng.random() < 0.6 else -mag)
    if rational_modulus:
        return _PHASES[int(rng.integers(len(_PHASES)))] * mag
    return GaussianRational(mag, Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))))


def random_element(
    carrier: Carrier,
    rng: np.random.Generator,
    terms: int | None = None,
    complex_: bool = True,
    rational_modulus: bool = True,
    max_word: int = 2,
) -> StarElement:
    """A random element with a few terms (a random number when ``terms`` is None)."""
    if isinstance(carrier, MatrixRing):
        n = carrier.n
        grid = [[random_element(carrier.inner, rng, None if terms is None else max(1, terms // (n * n)),
                                complex_, rational_modulus, max_word) if rng.random() < 0.7 else carrier.inner.zero()
                 for _ in range(n)] for _ in range(n)]
        return matrix_lift(grid, carrier)
    if isinstance(carrier, Complexified):
        x = random_element(carrier.inner, rng, terms, complex_, rational_modulus, max_word)
        y = random_element(carrier.inner, rng, terms, complex_, rational_modulus, max_word)
        return complex_pair(x, y if rng.random() < 0.7 else carrier.inner.zero(), carrier)
    if isinstance(carrier, FreeStar):
        count = int(rng.integers(1, 4)) if terms is None else terms
        out = {}
        for _ in range(count):
            length = int(rng.integers(0, max_word + 1))
            word = tuple(int(c) for c in rng.integers(0, 2 * carrier.k, size=length))
            out[word] = random_scalar(rng, complex_, rational_modulus)
        return StarElement(carrier, out)
    basis = carrier.basis()
    count = int(rng.integers(1, len(basis) + 1)) if terms is None else min(terms, len(basis))
    chosen = rng.choice(len(basis), size=count, replace=False)
    return StarElement(carrier, {basis[int(k)]: random_scalar(rng, complex_, rational_modulus) for k in chosen})


def random_symmetric(carrier: Carrier, rng: np.random.Generator, **kw) -> StarElement:
    a = random_element(carrier, rng, **kw)
    return (a + a.star()).scale(Fraction(1, 2))


def random_rational(rng: np.random.Generator, positive: bool = False) -> Fraction:
    q = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 5)))
    if positive or rng.random() < 0.5:
        return q
    return -q
