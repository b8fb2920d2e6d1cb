"""Text forms for carriers and elements.

Expression grammar (free and group-ring carriers)::

    expr    := [+|-] term ((+|-) term)*
    term    := factor ((· | juxtaposition) factor)*
    factor  := atom ('*' | '^*' | '^' INT)*
    atom    := INT | INT/INT | 'i' | x<k> | g<k> | '(' expr ')'

``x1..xk`` are free letters, ``g0..g(n-1)`` group elements by index, a
postfix ``*`` is the involution and ``i`` the imaginary unit of Q(i).
``1`` denotes the unit.  Matrix and complexified elements are written as
nested JSON values (a grid of expressions, resp. ``{"re": .., "im": ..}``).

Carrier specifications: ``free:k``, the group strings understood by
:func:`quadmod.groups.parse_group`, ``mat:n:<inner>`` and ``complex:<inner>``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import (
    Carrier,
    CarrierError,
    Complexified,
    FreeStar,
    GroupRing,
    MatrixRing,
    StarElement,
    complex_pair,
    complex_parts,
    matrix_entries,
    matrix_lift,
)
from .groups import FiniteGroup, GroupError, parse_group
from .scalars import GaussianRational


class ExpressionError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# carriers ---------------------------------------------------------------


def parse_carrier(spec) -> Carrier:
    if isinstance(spec, Carrier):
        return spec
    if isinstance(spec, dict):
        if "table" in spec:
            names = tuple(str(x) for x in spec.get("elements", ()))
            index = {n: k for k, n in enumerate(names)}

            def res(x):
                return index[x] if isinstance(x, str) else int(x)

            table = [[res(x) for x in row] for row in spec["table"]]
            return GroupRing(FiniteGroup(table, identity=res(spec.get("identity", 0)), names=names))
        raise CarrierError(f"unrecognised carrier object {spec!r}")
    spec = str(spec).strip()
    if spec.startswith("free:"):
        try:
            return FreeStar(int(spec[5:]))
        except ValueError:
            raise CarrierError(f"bad free carrier {spec!r}") from None
    if spec.startswith("mat:"):
        n, _, inner = spec[4:].partition(":")
        try:
            size = int(n)
        except ValueError:
            raise CarrierError(f"bad matrix carrier {spec!r}") from None
        return MatrixRing(size, parse_carrier(inner))
    if spec.startswith("complex:"):
        return Complexified(parse_carrier(spec[len("complex:"):]))
    try:
        return GroupRing(parse_group(spec))
    except GroupError as exc:
        raise CarrierError(str(exc)) from None


def carrier_spec(carrier: Carrier):
    """Inverse of :func:`parse_carrier` (a string, or a dict for unlabeled groups)."""
    if isinstance(carrier, FreeStar):
        return f"free:{carrier.k}"
    if isinstance(carrier, GroupRing):
        g = carrier.group
        if g.label:
            return g.label
        return {"elements": list(g.names), "table": [list(r) for r in g.table], "identity": g.identity}
    if isinstance(carrier, MatrixRing):
        inner = carrier_spec(carrier.inner)
        if not isinstance(inner, str):
            raise CarrierError("matrix carriers need a labeled inner carrier")
        return f"mat:{carrier.n}:{inner}"
    if isinstance(carrier, Complexified):
        inner = carrier_spec(carrier.inner)
        if not isinstance(inner, str):
            raise CarrierError("complexified carriers need a labeled inner carrier")
        return f"complex:{inner}"
    raise CarrierError(f"unknown carrier {carrier!r}")


# printing ---------------------------------------------------------------


def format_scalar(c: GaussianRational) -> str:
    """Parseable text for a coefficient."""
    return str(c)


def _word_str(carrier: Carrier, key) -> str:
    if isinstance(carrier, FreeStar):
        if not key:
            return "1"
        k = carrier.k
        return " ".join(f"x{c + 1}" if c < k else f"x{c - k + 1}*" for c in key)
    if isinstance(carrier, GroupRing):
        if key == carrier.group.identity:
            return "1"
        return f"g{key}"
    raise CarrierError(f"no word syntax for {carrier!r}")


def format_element(a: StarElement) -> str:
    car = a.carrier
    if isinstance(car, MatrixRing):
        return "[" + "; ".join(", ".join(format_element(e) for e in row) for row in matrix_entries(a)) + "]"
    if isinstance(car, Complexified):
        x, y = complex_parts(a)
        return f"({format_element(x)}, {format_element(y)})"
    if a.is_zero():
        return "0"
    pieces = []
    for key, c in a.items():
        word = _word_str(car, key)
        if word == "1":
            s = format_scalar(c)
        elif c == 1:
            s = word
        elif c == -1:
            s = "-" + word
        else:
            s = f"{format_scalar(c)}·{word}"
        pieces.append(s)
    out = pieces[0]
    for s in pieces[1:]:
        out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return out


# parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[xg]\d+)|(?P<imag>i)(?![A-Za-z0-9])|(?P<op>\^\*|\^|[-+*()·]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character {text[pos:pos + 1]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, carrier: Carrier):
        if not isinstance(carrier, (FreeStar, GroupRing)):
            raise ExpressionError(f"expressions are defined for free and group-ring carriers, not {carrier!r}")
        self.carrier = carrier
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> StarElement:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected token {text!r}", pos)
        return value

    def expr(self):
        kind, text, _ = self.peek()
        negate = False
        if kind == "op" and text in "+-":
            self.take()
            negate = text == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def _starts_atom(self, tok):
        kind, text, _ = tok
        return kind in ("num", "ident", "imag") or (kind == "op" and text == "(")

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "·":
                self.take()
                value = value * self.factor()
            elif self._starts_atom(tok):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text in ("*", "^*"):
                self.take()
                value = value.star()
            elif kind == "op" and text == "^":
                self.take()
                k2, t2, p2 = self.take()
                if k2 != "num" or "/" in t2:
                    raise ExpressionError("exponent must be a nonnegative integer", p2)
                value = value ** int(t2)
            else:
                return value

    def atom(self):
        kind, text, pos = self.take()
        car = self.carrier
        if kind == "num":
            try:
                return car.scalar(Fraction(text))
            except ZeroDivisionError:
                raise ExpressionError("division by zero in a literal", pos) from None
        if kind == "imag":
            return car.scalar(GaussianRational(0, 1))
        if kind == "ident":
            idx = int(text[1:])
            if text[0] == "x":
                if not isinstance(car, FreeStar) or not 1 <= idx <= car.k:
                    raise ExpressionError(f"unknown identifier {text!r} for this carrier", pos)
                return car.letter(idx)
            if not isinstance(car, GroupRing) or not 0 <= idx < car.group.order:
                raise ExpressionError(f"unknown identifier {text!r} for this carrier", pos)
            return car.group_element(idx)
        if kind == "op" and text == "(":
            value = self.expr()
            k2, t2, p2 = self.take()
            if k2 != "op" or t2 != ")":
                raise ExpressionError("expected ')'", p2)
            return value
        raise ExpressionError(f"unexpected token {text!r}" if text else "unexpected end of input", pos)


def parse_expression(text: str, carrier: Carrier) -> StarElement:
    """Parse ``text`` into a canonical element of ``carrier``."""
    return _Parser(text, carrier).parse()


def element_to_json(a: StarElement):
    car = a.carrier
    if isinstance(car, MatrixRing):
        return [[format_element(e) for e in row] for row in matrix_entries(a)]
    if isinstance(car, Complexified):
        x, y = complex_parts(a)
        return {"re": element_to_json(x), "im": element_to_json(y)}
    return format_element(a)


def element_from_json(value, carrier: Carrier) -> StarElement:
    if isinstance(carrier, MatrixRing):
        if isinstance(value, str):
            raise ExpressionError("matrix elements are written as a grid of expressions")
        grid = [[element_from_json(e, carrier.inner) for e in row] for row in value]
        return matrix_lift(grid, carrier)
    if isinstance(carrier, Complexified):
        if not isinstance(value, dict):
            raise ExpressionError('complexified elements are written as {"re": .., "im": ..}')
        return complex_pair(
            element_from_json(value.get("re", "0"), carrier.inner),
            element_from_json(value.get("im", "0"), carrier.inner),
            carrier,
        )
    return parse_expression(str(value), carrier)
