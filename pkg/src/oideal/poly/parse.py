"""Text front end for rings, polynomials and matrices.

    ring    := ("QQ" | "GF(" int ")") "[" name ("," name)* "]" [weights=(...)] [order=...] [mod=(poly, ...)]
    poly    := term (("+"|"-") term)*
    term    := [int "*"?] factor ("*" factor)*
    factor  := name ["^" int] | "(" poly ")" ["^" int] | int ["/" int]
    matrix  := "[" row ("," row)* "]" ;  row := "[" poly ("," poly)* "]"

Whitespace is insignificant.  Offsets in errors are character offsets into
the original text.
"""

from __future__ import annotations

import re

from .field import QQ, PrimeField
from .order import MonomialOrder
from .polynomial import FreeElement, PolyMatrix, Polynomial
from .ring import Ring, RingError


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],=]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring | None = None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    # -- token helpers ------------------------------------------------------
    def peek(self, ahead: int = 0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        tok = self.peek()
        if tok[0] in ("op", "name") and tok[1] == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        tok = self.peek()
        if not self.accept(value):
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])

    def expect_int(self) -> int:
        tok = self.next()
        if tok[0] != "int":
            raise ParseError(f"expected an integer, found {tok[1] or 'end of input'!r}", tok[2])
        return int(tok[1])

    def expect_name(self) -> str:
        tok = self.next()
        if tok[0] != "name":
            raise ParseError(f"expected a name, found {tok[1] or 'end of input'!r}", tok[2])
        return tok[1]

    def at_end(self) -> bool:
        return self.peek()[0] == "end"

    def finish(self):
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])

    # -- ring ---------------------------------------------------------------
    def ring_spec(self) -> Ring:
        tok = self.peek()
        name = self.expect_name()
        if name == "QQ":
            field = QQ
        elif name == "GF":
            self.expect("(")
            p_tok = self.peek()
            p = self.expect_int()
            self.expect(")")
            try:
                field = PrimeField(p)
            except ValueError as exc:
                raise ParseError(f"non-prime modulus {p}", p_tok[2]) from exc
        else:
            raise ParseError(f"unknown coefficient field {name!r}", tok[2])
        self.expect("[")
        names = []
        while True:
            tok = self.peek()
            v = self.expect_name()
            if v in names:
                raise ParseError(f"duplicate variable {v!r}", tok[2])
            names.append(v)
            if not self.accept(","):
                break
        self.expect("]")
        weights: tuple[int, ...] = ()
        order = MonomialOrder()
        mod_start = None
        seen = set()
        while not self.at_end():
            tok = self.peek()
            key = self.expect_name()
            if key in seen or key not in ("weights", "order", "mod"):
                raise ParseError(f"unexpected option {key!r}", tok[2])
            seen.add(key)
            self.expect("=")
            if key == "weights":
                self.expect("(")
                ws = []
                while True:
                    wt = self.peek()
                    if wt[1] == "-":
                        raise ParseError("weights must be positive", wt[2])
                    w = self.expect_int()
                    if w <= 0:
                        raise ParseError("weights must be positive", wt[2])
                    ws.append(w)
                    if not self.accept(","):
                        break
                self.expect(")")
                if len(ws) != len(names):
                    raise ParseError("need one weight per variable", tok[2])
                weights = tuple(ws)
            elif key == "order":
                kind = self.expect_name()
                if kind == "elim":
                    self.expect("(")
                    order = MonomialOrder.elim(self.expect_int())
                    self.expect(")")
                elif kind in ("lex", "grlex", "grevlex"):
                    order = MonomialOrder(kind)
                else:
                    raise ParseError(f"unknown order {kind!r}", tok[2])
            else:
                self.expect("(")
                mod_start = self.i
                depth = 1
                while depth:
                    t = self.next()
                    if t[0] == "end":
                        raise ParseError("unterminated mod=(...)", t[2])
                    if t[1] == "(":
                        depth += 1
                    elif t[1] == ")":
                        depth -= 1
        try:
            ring = Ring(field, tuple(names), weights, order)
        except RingError as exc:
            raise ParseError(str(exc), 0) from exc
        if mod_start is not None:
            saved = self.i
            self.i = mod_start
            self.ring = ring
            polys = []
            while True:
                tok = self.peek()
                q = self.poly()
                if q.is_zero():
                    raise ParseError("quotient generators must be nonzero", tok[2])
                polys.append(q)
                if not self.accept(","):
                    break
            self.expect(")")
            self.i = saved
            ring = ring.with_quotient(polys)
        return ring

    # -- polynomials --------------------------------------------------------------
    def poly(self) -> Polynomial:
        ring = self.ring
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        total = self.term() * sign
        while True:
            if self.accept("+"):
                total = total + self.term()
            elif self.accept("-"):
                total = total - self.term()
            else:
                return total if isinstance(total, Polynomial) else ring.constant(total)

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            tok = self.peek()
            if self.accept("*"):
                value = value * self.factor()
            elif tok[0] in ("name", "int") or tok[1] == "(":
                # juxtaposition after a leading integer, e.g. "2x"
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Polynomial:
        ring = self.ring
        tok = self.next()
        if tok[0] == "int":
            c = ring.field(int(tok[1]))
            if self.accept("/"):
                den_tok = self.peek()
                den = self.expect_int()
                if den == 0:
                    raise ParseError("division by zero", den_tok[2])
                c = ring.field(c) * ring.field.inv(ring.field(den))
            base = ring.constant(c)
        elif tok[0] == "name":
            try:
                base = ring.var(tok[1])
            except RingError:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2]) from None
        elif tok[1] == "(":
            base = self.poly()
            self.expect(")")
        else:
            raise ParseError(f"unexpected {tok[1] or 'end of input'!r}", tok[2])
        if self.accept("^"):
            base = base ** self.expect_int()
        return base

    def poly_list(self, close: str) -> list[Polynomial]:
        items = [self.poly()]
        while self.accept(","):
            items.append(self.poly())
        self.expect(close)
        return items


def parse_ring(text: str) -> Ring:
    p = _Parser(text)
    ring = p.ring_spec()
    p.finish()
    return ring


def parse_poly(ring: Ring, text: str) -> Polynomial:
    p = _Parser(text, ring)
    f = p.poly()
    p.finish()
    return f


def parse_poly_list(ring: Ring, text: str) -> list[Polynomial]:
    """Comma-separated polynomials, e.g. ``"a, b*c - d"``; empty text gives an empty list."""
    if not text.strip():
        return []
    p = _Parser(text, ring)
    items = [p.poly()]
    while p.accept(","):
        items.append(p.poly())
    p.finish()
    return items


def parse_vector(ring: Ring, text: str) -> FreeElement:
    p = _Parser(text, ring)
    p.expect("[")
    items = p.poly_list("]")
    p.finish()
    return FreeElement(ring, items)


def parse_matrix(ring: Ring, text: str) -> PolyMatrix:
    p = _Parser(text, ring)
    p.expect("[")
    rows = []
    while True:
        p.expect("[")
        rows.append(p.poly_list("]"))
        if not p.accept(","):
            break
    p.expect("]")
    p.finish()
    return PolyMatrix(ring, rows)
