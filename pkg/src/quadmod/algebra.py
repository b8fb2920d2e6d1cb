"""Concrete unital *-rings over Q(i) and their exact elements.

Four carrier kinds are available: the free *-algebra on ``k`` letters, the
group ring of a finite group, ``n x n`` matrices over one of those, and the
complexification ``A x A`` of any of the previous ones.  Elements are finite
sums of basis words with Gaussian rational coefficients, kept in a canonical
normal form (no zero coefficients), so equality is comparison of term maps.

Basis keys per carrier:

* ``FreeStar``: tuple of letter codes; code ``c < k`` is ``x_{c+1}``, code
  ``k + c`` is ``x_{c+1}*``.  The empty tuple is the unit.
* ``GroupRing``: the group element index.
* ``MatrixRing``: ``(row, col, inner_key)``.
* ``Complexified``: ``(part, inner_key)`` where part 0 is the real slot and
  part 1 is the slot multiplied by the central unit ``(0, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .groups import FiniteGroup
from .scalars import GaussianRational, ONE, ZERO


class CarrierError(ValueError):
    pass


class Carrier:
    """Base class; concrete carriers are frozen dataclasses."""

    kind: str = ""

    def unit_terms(self) -> dict:
        raise NotImplementedError

    def mul_key(self, k1, k2):
        """Product of two basis words: ``(key, sign)`` or ``None`` for zero."""
        raise NotImplementedError

    def star_key(self, k):
        """Involution of a basis word: ``(key, sign)``."""
        raise NotImplementedError

    def sort_key(self, k):
        raise NotImplementedError

    def validate_key(self, k) -> None:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return False

    def basis(self) -> list:
        raise CarrierError(f"{self.kind} carrier has no finite basis")

    @property
    def dimension(self) -> int:
        return len(self.basis())

    # element helpers ----------------------------------------------------

    def zero(self) -> StarElement:
        return StarElement(self, {})

    def one(self) -> StarElement:
        return StarElement(self, self.unit_terms())

    def scalar(self, t) -> StarElement:
        t = GaussianRational.coerce(t)
        return StarElement(self, {k: c * t for k, c in self.unit_terms().items()})

    def basis_element(self, key) -> StarElement:
        self.validate_key(key)
        return StarElement(self, {key: ONE})

    def element(self, terms: Mapping) -> StarElement:
        for k in terms:
            self.validate_key(k)
        return StarElement(self, terms)


@dataclass(frozen=True, eq=True)
class FreeStar(Carrier):
    """Free *-algebra ``Q(i)<x_1, .., x_k, x_1*, .., x_k*>`` without relations."""

    k: int
    kind = "free"

    def __post_init__(self):
        if self.k < 1:
            raise CarrierError("free *-algebra needs at least one letter")

    def unit_terms(self):
        return {(): ONE}

    def mul_key(self, k1, k2):
        return (k1 + k2, 1)

    def star_key(self, w):
        k = self.k
        return (tuple(c + k if c < k else c - k for c in reversed(w)), 1)

    def sort_key(self, w):
        return (len(w), w)

    def validate_key(self, w):
        if not isinstance(w, tuple) or any(not (isinstance(c, int) and 0 <= c < 2 * self.k) for c in w):
            raise CarrierError(f"invalid word {w!r} for free:{self.k}")

    def letter(self, j: int, starred: bool = False) -> StarElement:
        """The letter ``x_j`` (1-based), or ``x_j*``."""
        if not 1 <= j <= self.k:
            raise CarrierError(f"letter x{j} not in free:{self.k}")
        return StarElement(self, {((j - 1) + (self.k if starred else 0),): ONE})

    def __repr__(self):
        return f"FreeStar({self.k})"


@dataclass(frozen=True, eq=True)
class GroupRing(Carrier):
    """Group ring ``Q(i)[G]`` with ``(sum a_g g)* = sum conj(a_g) g^-1``."""

    group: FiniteGroup
    kind = "group"

    def unit_terms(self):
        return {self.group.identity: ONE}

    def mul_key(self, a, b):
        return (self.group.table[a][b], 1)

    def star_key(self, g):
        return (self.group.inverse[g], 1)

    def sort_key(self, g):
        return g

    def validate_key(self, g):
        if not isinstance(g, int) or not 0 <= g < self.group.order:
            raise CarrierError(f"invalid group element {g!r}")

    @property
    def is_finite(self):
        return True

    def basis(self):
        return list(range(self.group.order))

    def group_element(self, g: int) -> StarElement:
        return self.basis_element(g)

    def __repr__(self):
        return f"GroupRing({self.group.label or self.group.order})"


@dataclass(frozen=True, eq=True)
class MatrixRing(Carrier):
    """``Mat_n(A)`` with ``[a_ij]* = [a_ji*]``; ``A`` is free or a group ring."""

    n: int
    inner: Carrier
    kind = "matrix"

    def __post_init__(self):
        if self.n < 1:
            raise CarrierError("matrix size must be positive")
        if not isinstance(self.inner, (FreeStar, GroupRing)):
            raise CarrierError("matrix rings nest only over free or group-ring carriers")

    def unit_terms(self):
        (e, c), = self.inner.unit_terms().items()
        return {(i, i, e): c for i in range(self.n)}

    def mul_key(self, k1, k2):
        i, j, w = k1
        j2, l, v = k2
        if j != j2:
            return None
        key, sign = self.inner.mul_key(w, v)
        return ((i, l, key), sign)

    def star_key(self, k):
        i, j, w = k
        key, sign = self.inner.star_key(w)
        return ((j, i, key), sign)

    def sort_key(self, k):
        return (k[0], k[1], self.inner.sort_key(k[2]))

    def validate_key(self, k):
        if not (isinstance(k, tuple) and len(k) == 3 and 0 <= k[0] < self.n and 0 <= k[1] < self.n):
            raise CarrierError(f"invalid matrix key {k!r}")
        self.inner.validate_key(k[2])

    @property
    def is_finite(self):
        return self.inner.is_finite

    def basis(self):
        return [(i, j, w) for i in range(self.n) for j in range(self.n) for w in self.inner.basis()]

    def __repr__(self):
        return f"MatrixRing({self.n}, {self.inner!r})"


@dataclass(frozen=True, eq=True)
class Complexified(Carrier):
    """``A° = A x A`` with ``(x,y)(u,v) = (xu - yv, xv + yu)`` and ``(x,y)* = (x*, -y*)``."""

    inner: Carrier
    kind = "complex"

    def __post_init__(self):
        if isinstance(self.inner, Complexified):
            raise CarrierError("complexification nests at most one level")

    def unit_terms(self):
        return {(0, k): c for k, c in self.inner.unit_terms().items()}

    def mul_key(self, k1, k2):
        p, w = k1
        q, v = k2
        r = self.inner.mul_key(w, v)
        if r is None:
            return None
        key, sign = r
        if p and q:
            sign = -sign
        return (((p + q) % 2, key), sign)

    def star_key(self, k):
        p, w = k
        key, sign = self.inner.star_key(w)
        return ((p, key), -sign if p else sign)

    def sort_key(self, k):
        return (k[0], self.inner.sort_key(k[1]))

    def validate_key(self, k):
        if not (isinstance(k, tuple) and len(k) == 2 and k[0] in (0, 1)):
            raise CarrierError(f"invalid complexified key {k!r}")
        self.inner.validate_key(k[1])

    @property
    def is_finite(self):
        return self.inner.is_finite

    def basis(self):
        return [(p, w) for p in (0, 1) for w in self.inner.basis()]

    def imaginary_unit(self) -> StarElement:
        """The central element ``(0, 1)``."""
        return StarElement(self, {(1, k): c for k, c in self.inner.unit_terms().items()})

    def __repr__(self):
        return f"Complexified({self.inner!r})"


def _scalar_or_none(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


class StarElement:
    """An exact element of a carrier, stored as ``{basis key: coefficient}``."""

    __slots__ = ("carrier", "_terms", "_hash")

    def __init__(self, carrier: Carrier, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for k, c in items:
            c = GaussianRational.coerce(c)
            if c:
                clean[k] = c
        self.carrier = carrier
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, carrier, terms: dict) -> StarElement:
        obj = cls.__new__(cls)
        obj.carrier = carrier
        obj._terms = terms
        obj._hash = None
        return obj

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping:
        return dict(self._terms)

    def items(self) -> Iterator:
        """Terms in canonical order."""
        sk = self.carrier.sort_key
        for k in sorted(self._terms, key=sk):
            yield k, self._terms[k]

    def coefficient(self, key) -> GaussianRational:
        return self._terms.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, StarElement):
            return (self.carrier is other.carrier or self.carrier == other.carrier) and self._terms == other._terms
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return self._terms == self.carrier.scalar(s)._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        from .expressions import format_element

        return f"StarElement({format_element(self)!r} on {self.carrier!r})"

    def __str__(self):
        from .expressions import format_element

        return format_element(self)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: StarElement):
        if self.carrier is not other.carrier and self.carrier != other.carrier:
            raise CarrierError(f"carrier mismatch: {self.carrier!r} vs {other.carrier!r}")

    def _lift(self, other) -> StarElement | None:
        if isinstance(other, StarElement):
            self._check(other)
            return other
        s = _scalar_or_none(other)
        if s is None:
            return None
        return self.carrier.scalar(s)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return StarElement._raw(self.carrier, out)

    __radd__ = __add__

    def __neg__(self):
        return StarElement._raw(self.carrier, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, t) -> StarElement:
        t = GaussianRational.coerce(t)
        if not t:
            return self.carrier.zero()
        return StarElement._raw(self.carrier, {k: c * t for k, c in self._terms.items()})

    def __mul__(self, other):
        s = _scalar_or_none(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, StarElement):
            return NotImplemented
        self._check(other)
        mul_key = self.carrier.mul_key
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                r = mul_key(k1, k2)
                if r is None:
                    continue
                key, sign = r
                c = c1 * c2
                if sign < 0:
                    c = -c
                v = out.get(key)
                out[key] = c if v is None else v + c
        return StarElement._raw(self.carrier, {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = self.carrier.one()
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> StarElement:
        star_key = self.carrier.star_key
        out = {}
        for k, c in self._terms.items():
            key, sign = star_key(k)
            c = c.conjugate()
            out[key] = -c if sign < 0 else c
        return StarElement._raw(self.carrier, out)

    def is_symmetric(self) -> bool:
        return self.star() == self

    def l1_norm(self) -> Fraction:
        """``sum |alpha_g|`` for group-ring elements; needs rational moduli."""
        if not isinstance(self.carrier, GroupRing):
            raise CarrierError("the l1 norm is defined on group rings only")
        total = Fraction(0)
        for c in self._terms.values():
            m = c.modulus()
            if m is None:
                raise IrrationalModulus(c)
            total += m
        return total

    def is_real(self) -> bool:
        """All coefficients are real rationals."""
        return all(c.is_real() for c in self._terms.values())


class IrrationalModulus(ArithmeticError):
    def __init__(self, value):
        super().__init__(f"irrational modulus: |{value}| is not rational")
        self.value = value


def star(a: StarElement) -> StarElement:
    return a.star()


def complexify(a: StarElement, carrier: Complexified | None = None) -> StarElement:
    """``a -> (a, 0)`` in the complexification of ``a``'s carrier."""
    if isinstance(a.carrier, Complexified):
        raise CarrierError("complexification nests at most one level")
    if carrier is None:
        carrier = Complexified(a.carrier)
    elif carrier.inner != a.carrier:
        raise CarrierError("target complexification has a different inner carrier")
    return StarElement._raw(carrier, {(0, k): c for k, c in a._terms.items()})


def complex_pair(x: StarElement, y: StarElement, carrier: Complexified | None = None) -> StarElement:
    """The element ``(x, y)`` of the complexification."""
    x._check(y)
    if carrier is None:
        carrier = Complexified(x.carrier)
    terms = {(0, k): c for k, c in x._terms.items()}
    terms.update({(1, k): c for k, c in y._terms.items()})
    return StarElement._raw(carrier, terms)


def complex_parts(z: StarElement) -> tuple[StarElement, StarElement]:
    if not isinstance(z.carrier, Complexified):
        raise CarrierError("not a complexified element")
    inner = z.carrier.inner
    x = {k: c for (p, k), c in z._terms.items() if p == 0}
    y = {k: c for (p, k), c in z._terms.items() if p == 1}
    return StarElement._raw(inner, x), StarElement._raw(inner, y)


def matrix_lift(entries, carrier: MatrixRing | None = None) -> StarElement:
    """Build the matrix ``[entries[i][j]]`` as an element of ``Mat_n(A)``."""
    rows = [list(r) for r in entries]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise CarrierError("matrix entries must form a nonempty square grid")
    inner = rows[0][0].carrier
    for r in rows:
        for e in r:
            if e.carrier is not inner and e.carrier != inner:
                raise CarrierError("matrix entries live on different carriers")
    if carrier is None:
        carrier = MatrixRing(n, inner)
    elif carrier.n != n or carrier.inner != inner:
        raise CarrierError("entries do not match the target matrix ring")
    terms = {}
    for i, r in enumerate(rows):
        for j, e in enumerate(r):
            for k, c in e._terms.items():
                terms[(i, j, k)] = c
    return StarElement._raw(carrier, terms)


def matrix_entries(m: StarElement) -> list[list[StarElement]]:
    car = m.carrier
    if not isinstance(car, MatrixRing):
        raise CarrierError("not a matrix element")
    grid = [[{} for _ in range(car.n)] for _ in range(car.n)]
    for (i, j, k), c in m._terms.items():
        grid[i][j][k] = c
    return [[StarElement._raw(car.inner, t) for t in row] for row in grid]


def matrix_unit(carrier: MatrixRing, i: int, j: int, entry: StarElement | None = None) -> StarElement:
    """``entry`` placed at position ``(i, j)`` (0-based), zeros elsewhere."""
    if entry is None:
        entry = carrier.inner.one()
    grid = [[carrier.inner.zero() for _ in range(carrier.n)] for _ in range(carrier.n)]
    grid[i][j] = entry
    return matrix_lift(grid, carrier)
