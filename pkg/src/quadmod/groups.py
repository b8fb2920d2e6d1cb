"""Finite groups given by multiplication tables, plus the built-in families."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on the index set ``0..n-1``.

    ``table[a][b]`` is the index of the product ``a*b``.  Associativity,
    the identity and inverses are checked at construction.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    names: tuple[str, ...] = ()
    label: str = ""
    inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise GroupError("empty group table")
        if any(len(row) != n for row in table):
            raise GroupError("group table must be square")
        if any(not 0 <= x < n for row in table for x in row):
            raise GroupError("group table entry out of range")
        e = self.identity
        if not 0 <= e < n:
            raise GroupError("identity index out of range")
        for a in range(n):
            if table[e][a] != a or table[a][e] != a:
                raise GroupError(f"declared identity fails on element {a}")
        inverse = []
        for a in range(n):
            inv = [b for b in range(n) if table[a][b] == e]
            if len(inv) != 1 or table[inv[0]][a] != e:
                raise GroupError(f"element {a} has no two-sided inverse")
            inverse.append(inv[0])
        object.__setattr__(self, "inverse", tuple(inverse))
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupError(f"table is not associative at ({a}, {b}, {c})")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"g{k}" for k in range(n)))
        elif len(self.names) != n:
            raise GroupError("names must match the group order")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def conjugacy_classes(self) -> list[list[int]]:
        seen: set[int] = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            cls = sorted({self.mul(self.mul(h, g), self.inverse[h]) for h in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def generating_set(self) -> list[int]:
        """A small generating set, picked greedily."""
        gens: list[int] = []
        span = {self.identity}
        for g in range(self.order):
            if g in span:
                continue
            gens.append(g)
            span = self._closure(gens)
            if len(span) == self.order:
                break
        return gens

    def _closure(self, gens) -> set[int]:
        span = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in span:
                        span.add(b)
                        nxt.append(b)
            frontier = nxt
        return span


def _from_elements(elements, mul, label) -> FiniteGroup:
    index = {x: k for k, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, identity=0, label=label)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, f"cyclic:{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; index ``k + n*e`` is r^k s^e."""
    if n < 1:
        raise GroupError("dihedral parameter must be positive")
    elements = [(k, e) for e in (0, 1) for k in range(n)]

    def mul(a, b):
        (k1, e1), (k2, e2) = a, b
        return ((k1 + (-k2 if e1 else k2)) % n, (e1 + e2) % 2)

    return _from_elements(elements, mul, f"dihedral:{n}")


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 4:
        raise GroupError("symmetric:n is supported for 1 <= n <= 4")
    elements = list(itertools.permutations(range(n)))
    # (p*q)(x) = p(q(x))
    return _from_elements(elements, lambda p, q: tuple(p[q[x]] for x in range(n)), f"symmetric:{n}")


def quaternion() -> FiniteGroup:
    """Q8 with index order 1, -1, i, -i, j, -j, k, -k."""
    # unit quaternions as (sign, axis) with axis in {1, i, j, k}
    unit_products = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, ax) for ax in "1ijk" for s in (1, -1)]

    def mul(a, b):
        s, ax = unit_products[(a[1], b[1])]
        return (a[0] * b[0] * s, ax)

    return _from_elements(elements, mul, "quaternion:8")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """``G x H`` with index ``a * |H| + b`` for the pair (a, b)."""
    m = h.order
    elements = [(a, b) for a in range(g.order) for b in range(m)]
    # keep the identity at index 0 only when both factors have it there
    grp = _from_elements(
        elements,
        lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
        f"{g.label} x {h.label}",
    )
    return FiniteGroup(grp.table, identity=g.identity * m + h.identity, label=grp.label)


def from_table_file(path: str | Path) -> FiniteGroup:
    """Load a group from JSON ``{"elements": [...], "table": [[name, ...]], "identity": name}``.

    Table entries may be element names or indices.
    """
    data = json.loads(Path(path).read_text())
    names = [str(x) for x in data["elements"]]
    index = {name: k for k, name in enumerate(names)}

    def resolve(x):
        if isinstance(x, int):
            return x
        if x not in index:
            raise GroupError(f"unknown element name {x!r} in table")
        return index[x]

    table = [[resolve(x) for x in row] for row in data["table"]]
    identity = resolve(data["identity"])
    return FiniteGroup(table, identity=identity, names=tuple(names), label=f"table:{path}")


def parse_group(spec: str) -> FiniteGroup:
    """Parse ``cyclic:n``, ``dihedral:n``, ``symmetric:n``, ``quaternion:8``,
    ``klein:4``, ``table:<path>`` or a product ``A x B``."""
    spec = spec.strip()
    if spec.startswith("table:"):
        return from_table_file(spec[len("table:"):])
    if " x " in spec:
        parts = [parse_group(p) for p in spec.split(" x ")]
        grp = parts[0]
        for p in parts[1:]:
            grp = direct_product(grp, p)
        return grp
    kind, _, arg = spec.partition(":")
    try:
        n = int(arg)
    except ValueError:
        raise GroupError(f"bad group specification {spec!r}") from None
    if kind == "cyclic":
        return cyclic(n)
    if kind == "dihedral":
        return dihedral(n)
    if kind == "symmetric":
        return symmetric(n)
    if kind == "quaternion":
        if n != 8:
            raise GroupError("only quaternion:8 is available")
        return quaternion()
    if kind == "klein":
        if n != 4:
            raise GroupError("only klein:4 is available")
        return FiniteGroup(direct_product(cyclic(2), cyclic(2)).table, label="klein:4")
    raise GroupError(f"unknown group family {kind!r}")
