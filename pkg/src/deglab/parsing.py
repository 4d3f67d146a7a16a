"""Text grammar for polynomials, points, and map documents.

Grammar (whitespace insignificant):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('+'|'-')* power
    power  := atom ('^' INT)*
    atom   := INT | IDENT | '(' expr ')'

'^' binds tightest, then '*', then the additive operators.  The parser
evaluates straight into sparse integer polynomials over a declared
variable list; homogeneity is the caller's check, not the grammar's.
"""

from fractions import Fraction

from . import intpoly
from .errors import NotHomogeneous, PolySyntaxError
from .hompoly import HomPoly
from .intpoly import ZZ

_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789")


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text, var_index):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vars = var_index
        self.nvars = len(var_index)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise PolySyntaxError(f"expected {kind}, got {tok[0]}", tok[2])
        return tok

    def parse(self):
        raw = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[0]} after expression",
                                  tok[2])
        return raw

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            if op == "-":
                rhs = intpoly.p_neg(ZZ, rhs)
            acc = intpoly.p_add(ZZ, acc, rhs)
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = intpoly.p_mul(ZZ, acc, self.factor())
        return acc

    def factor(self):
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        raw = self.power()
        if sign < 0:
            raw = intpoly.p_neg(ZZ, raw)
        return raw

    def power(self):
        acc = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            acc = intpoly.p_pow(ZZ, acc, tok[1], self.nvars)
        return acc

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return intpoly.p_const(value, self.nvars)
        if kind == "ident":
            idx = self.vars.get(value)
            if idx is None:
                raise PolySyntaxError(f"unknown variable {value!r}", pos)
            e = tuple(1 if j == idx else 0 for j in range(self.nvars))
            return {e: 1}
        if kind == "(":
            raw = self.expr()
            self.expect(")")
            return raw
        raise PolySyntaxError(f"unexpected {kind}", pos)


def parse_polynomial_raw(text, var_names):
    """Parse to a raw (possibly inhomogeneous) sparse polynomial."""
    var_index = {name: i for i, name in enumerate(var_names)}
    if len(var_index) != len(var_names):
        raise ValueError("duplicate variable names")
    return _Parser(text, var_index).parse()


def parse_homogeneous(text, var_names, coordinate_index=None):
    """Parse and require homogeneity; NotHomogeneous carries the index."""
    raw = parse_polynomial_raw(text, var_names)
    degrees = {sum(e) for e in raw}
    if len(degrees) > 1:
        raise NotHomogeneous(
            f"mixed total degrees {sorted(degrees)} in {text!r}",
            index=coordinate_index)
    return HomPoly(len(var_names), raw,
                   degrees.pop() if degrees else 0)


def parse_point(text):
    """Parse "a,b,c" with integer or rational entries into a tuple."""
    parts = [p.strip() for p in str(text).split(",")]
    if any(not p for p in parts):
        raise PolySyntaxError("empty coordinate", 0)
    out = []
    for p in parts:
        try:
            out.append(Fraction(p))
        except (ValueError, ZeroDivisionError) as exc:
            raise PolySyntaxError(f"bad coordinate {p!r}: {exc}", 0) from None
    return tuple(out)
