"""Parser for the plain-text rendering of ring elements and polynomials.

Grammar (whitespace ignored)::

    expr     := sign? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' exponent)?
    exponent := '-'? (INT | NAME | '(' expr ')')
    atom     := NUMBER | NAME | '(' expr ')'

Names ``t<i>`` are even variables, ``x<i>x<j>...`` odd words (product in the
written order), anything else an unknown. A symbolic exponent is only allowed
on a pure even monomial.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .superalg import Poly, SuperElement, invert_unit, lf_scale

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_EVEN = re.compile(r"t(\d+)$")
_ODD = re.compile(r"(?:x\d+)+$")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"bad input at {pos}: {text[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        elif op.strip():
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        out = self.expr()
        if self.peek()[0] is not None:
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return out

    def expr(self):
        neg = False
        if self.peek() in (("op", "-"), ("op", "+")):
            neg = self.take()[1] == "-"
        total = self.term()
        if neg:
            total = -total
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            total = total + rhs if op == "+" else total - rhs
        return total

    def term(self):
        out = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            out = out * self.factor()
        return out

    def factor(self):
        base = self.atom()
        if self.peek() != ("op", "^"):
            return base
        self.take()
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        kind, val = self.peek()
        if kind == "num":
            self.take()
            form = (("", int(val)),)
        elif kind == "name":
            self.take()
            form = ((val, 1),)
        elif (kind, val) == ("op", "("):
            self.take()
            form = _as_linear_form(self.expr())
            self.take(")")
        else:
            raise ParseError(f"bad exponent {val!r}")
        if neg:
            form = lf_scale(form, -1)
        return _power(base, form)

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return SuperElement.scalar(Fraction(val))
        if kind == "name":
            self.take()
            m = _EVEN.match(val)
            if m:
                return SuperElement.t(int(m.group(1)))
            if _ODD.match(val):
                return SuperElement.xi(*(int(k) for k in re.findall(r"\d+", val)))
            return SuperElement.scalar(Poly.var(val))
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def _as_linear_form(el):
    items = el.items()
    if len(items) > 1 or (items and items[0][0] != ((), ())):
        raise ParseError("exponent must be an integer-linear expression")
    if not items:
        return ()
    poly = items[0][1]
    if poly.degree() > 1:
        raise ParseError("exponent must be linear")
    form = []
    for mono, c in poly.items():
        if c.denominator != 1:
            raise ParseError("exponent coefficients must be integers")
        form.append((mono[0][0] if mono else "", int(c)))
    return tuple(sorted(form))


def _power(base, form):
    if len(form) == 1 and form[0][0] == "" or not form:
        k = form[0][1] if form else 0
        return base ** k if k >= 0 else invert_unit(base) ** (-k)
    items = base.items()
    if len(items) != 1 or items[0][0][1] != () or items[0][1] != Poly.const(1):
        raise ParseError("symbolic exponents need a pure even monomial base")
    even = items[0][0][0]
    from .superalg import lf_add
    new = {}
    for i, f in even:
        scaled = ()
        for name, v in f:
            if name:
                raise ParseError("nested symbolic exponents are not supported")
            scaled = lf_add(scaled, lf_scale(form, v))
        if scaled:
            new[i] = scaled
    return SuperElement({(tuple(sorted(new.items())), ()): Poly.const(1)})


def parse_element(text):
    return _Parser(text).parse()


def parse_poly(text):
    """Parse a polynomial in unknowns only."""
    el = parse_element(text)
    items = el.items()
    if not items:
        return Poly()
    if len(items) != 1 or items[0][0] != ((), ()):
        raise ParseError(f"{text!r} is not a polynomial in the unknowns")
    return items[0][1]
