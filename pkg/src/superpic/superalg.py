"""Grassmann-Laurent ring with symbolic unknowns.

Elements live in ``Q[unknowns] (x) Q[t_1^{+-1}, ..., t_n^{+-1}] (x) Lambda(xi_1, ..., xi_n)``.
Even exponents may be integer-linear forms in integer unknowns, so that powers
``(t_i t_j^{-1})^l`` with symbolic ``l`` can be written down exactly.

Internally an element maps ``(even_exponent, odd_word)`` to a :class:`Poly`
coefficient in the unknowns.  ``even_exponent`` is a sorted tuple of
``(variable_index, linear_form)`` pairs and a linear form is a sorted tuple of
``(name, int)`` pairs, the empty name holding the constant part.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import (InvalidDirection, MissingAssignment, NonIntegerForIntegerUnknown,
                     NotAUnit)

INTEGER = "integer"
COMPLEX = "complex"


@dataclass(frozen=True, order=True)
class Unknown:
    name: str
    kind: str = COMPLEX

    def __post_init__(self):
        if self.kind not in (INTEGER, COMPLEX):
            raise ValueError(f"unknown kind {self.kind!r}")


# ---------------------------------------------------------------- linear forms

def lf(value):
    """Linear form from an int, an unknown name or an Unknown."""
    if isinstance(value, Unknown):
        return ((value.name, 1),)
    if isinstance(value, str):
        return ((value, 1),)
    if isinstance(value, Rational) and Fraction(value).denominator == 1:
        return (("", int(value)),) if value else ()
    raise TypeError(f"cannot use {value!r} as an exponent")


def lf_add(a, b):
    acc = dict(a)
    for k, v in b:
        acc[k] = acc.get(k, 0) + v
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def lf_scale(a, k):
    return tuple((n, v * k) for n, v in a if v * k)


def lf_names(a):
    return {n for n, _ in a if n}


def lf_eval(a, assignment):
    """Substitute integers for (some of) the names of a linear form."""
    out = ()
    for n, v in a:
        if n and n in assignment:
            out = lf_add(out, (("", v * assignment[n]),))
        else:
            out = lf_add(out, ((n, v),))
    return out


def _lf_text(a):
    if not a:
        return "0"
    parts = []
    for n, v in sorted(a, key=lambda nv: (nv[0] == "", nv[0])):
        if n == "":
            body = str(abs(v))
        elif abs(v) == 1:
            body = n
        else:
            body = f"{abs(v)}*{n}"
        if not parts:
            parts.append(body if v > 0 else "-" + body)
        else:
            parts.append((" + " if v > 0 else " - ") + body)
    return "".join(parts)


# ---------------------------------------------------------------- polynomials

def _mono_mul(a, b):
    acc = dict(a)
    for k, v in b:
        acc[k] = acc.get(k, 0) + v
    return tuple(sorted(acc.items()))


class Poly:
    """Polynomial in named unknowns with rational coefficients (immutable)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, value):
        return cls({(): value})

    @classmethod
    def var(cls, name):
        if isinstance(name, Unknown):
            name = name.name
        return cls({((name, 1),): 1})

    @staticmethod
    def coerce(value):
        if isinstance(value, Poly):
            return value
        if isinstance(value, (Unknown, str)):
            return Poly.var(value)
        if isinstance(value, Rational):
            return Poly.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Poly")

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(m == () for m in self._terms)

    def constant_term(self):
        return self._terms.get((), Fraction(0))

    def variables(self):
        return {n for m in self._terms for n, _ in m}

    def degree(self):
        return max((sum(p for _, p in m) for m in self._terms), default=-1)

    def __add__(self, other):
        if isinstance(other, SuperElement):
            return NotImplemented
        other = Poly.coerce(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Poly(acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, SuperElement):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, SuperElement):
            return NotImplemented
        other = Poly.coerce(other)
        acc = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Poly(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, mapping):
        """Replace names by polynomials or numbers; other names are kept."""
        mapping = {(k.name if isinstance(k, Unknown) else k): Poly.coerce(v)
                   for k, v in mapping.items()}
        out = Poly()
        cache = {}
        for mono, c in self._terms.items():
            term = Poly.const(c)
            for name, p in mono:
                if name in mapping:
                    key = (name, p)
                    if key not in cache:
                        cache[key] = mapping[name] ** p
                    term = term * cache[key]
                else:
                    term = term * Poly({((name, p),): 1})
            out = out + term
        return out

    def linear_part(self):
        """Map name -> coefficient for a polynomial of degree <= 1."""
        if self.degree() > 1:
            raise ValueError("polynomial is not linear")
        return {m[0][0]: c for m, c in self._terms.items() if m}

    def normalized(self):
        """Scale to coprime integer coefficients with positive leading term."""
        if not self._terms:
            return self
        from math import gcd
        den = 1
        for c in self._terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {m: int(c * den) for m, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, abs(v))
        lead = max(ints, key=_mono_order_key)
        sign = 1 if ints[lead] > 0 else -1
        return Poly({m: Fraction(v * sign, g) for m, v in ints.items()})

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return render_poly(self)


def _mono_order_key(mono):
    """Graded order: total degree first, then names."""
    return (sum(p for _, p in mono), tuple((n, p) for n, p in mono))


def _mono_text(mono):
    return "*".join(n if p == 1 else f"{n}^{p}" for n, p in mono)


def _coef_text(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_signed(pieces):
    """pieces: list of (negative, body) -> 'a - b + c'."""
    if not pieces:
        return "0"
    out = []
    for k, (neg, body) in enumerate(pieces):
        if k == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def render_poly(p):
    pieces = []
    for mono, c in sorted(p._terms.items(), key=lambda mc: _mono_order_key(mc[0]), reverse=True):
        body = _scaled_text(abs(c), [_mono_text(mono)] if mono else [])
        pieces.append((c < 0, body))
    return _join_signed(pieces)


def _scaled_text(absc, factors):
    if not factors:
        return _coef_text(absc)
    if absc == 1:
        return "*".join(factors)
    return "*".join([_coef_text(absc)] + factors)


# ---------------------------------------------------------------- words

def word_mul(w1, w2):
    """Product of increasing index tuples: (sign, word), sign 0 if it vanishes."""
    if set(w1) & set(w2):
        return 0, ()
    inversions = 0
    j = 0
    for a in w1:
        while j < len(w2) and w2[j] < a:
            j += 1
        inversions += j
    return (-1 if inversions % 2 else 1), tuple(sorted(w1 + w2))


def _even_mul(e1, e2):
    acc = dict(e1)
    for i, form in e2:
        acc[i] = lf_add(acc.get(i, ()), form)
    return tuple(sorted((i, f) for i, f in acc.items() if f))


def _even_neg(e):
    return tuple((i, lf_scale(f, -1)) for i, f in e)


# ---------------------------------------------------------------- elements

class SuperElement:
    """Immutable element of the Grassmann-Laurent ring."""

    __slots__ = ("_data", "_hash")

    def __init__(self, data=None):
        clean = {}
        for key, coef in (data or {}).items():
            coef = Poly.coerce(coef)
            if not coef.is_zero():
                clean[key] = coef
        self._data = clean
        self._hash = None

    # constructors
    @classmethod
    def one(cls):
        return cls({((), ()): Poly.const(1)})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def scalar(cls, value):
        return cls({((), ()): Poly.coerce(value)})

    @classmethod
    def t(cls, i, exponent=1):
        return cls({(((i, lf(exponent)),) if lf(exponent) else (), ()): Poly.const(1)})

    @classmethod
    def xi(cls, *indices):
        """Product xi_{i1} xi_{i2} ... in the order given."""
        out = cls.one()
        for i in indices:
            out = out * cls({((), (i,)): Poly.const(1)})
        return out

    # views
    def terms(self):
        """Flat view: {(even_exponent, word, unknown_monomial): Fraction}."""
        return {(e, w, m): c for (e, w), p in self._data.items() for m, c in p._terms.items()}

    def items(self):
        return sorted(self._data.items(), key=lambda kv: kv[0])

    def coefficient(self, even=(), word=()):
        return self._data.get((even, tuple(word)), Poly())

    def is_zero(self):
        return not self._data

    def unknown_names(self):
        names = set()
        for (e, _), p in self._data.items():
            for _, form in e:
                names |= lf_names(form)
            names |= p.variables()
        return names

    def exponent_names(self):
        names = set()
        for (e, _) in self._data:
            for _, form in e:
                names |= lf_names(form)
        return names

    def odd_degree(self):
        return max((len(w) for (_, w) in self._data), default=0)

    def is_even(self):
        return all(len(w) % 2 == 0 for (_, w) in self._data)

    def is_odd(self):
        return all(len(w) % 2 == 1 for (_, w) in self._data)

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        acc = dict(self._data)
        for k, p in other._data.items():
            acc[k] = acc[k] + p if k in acc else p
        return SuperElement(acc)

    __radd__ = __add__

    def __neg__(self):
        return SuperElement({k: -p for k, p in self._data.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        return multiply(self, _coerce(other))

    def __rmul__(self, other):
        return multiply(_coerce(other), self)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("symbolic powers only exist for canonical units")
        if k < 0:
            return invert_unit(self) ** (-k)
        out = SuperElement.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self):
        return f"SuperElement({render(self)!r})"

    def __str__(self):
        return render(self)


def _coerce(value):
    if isinstance(value, SuperElement):
        return value
    return SuperElement.scalar(value)


def multiply(a, b):
    """Product with the Koszul sign on odd words."""
    acc = {}
    for (e1, w1), p1 in a._data.items():
        for (e2, w2), p2 in b._data.items():
            sign, w = word_mul(w1, w2)
            if not sign:
                continue
            key = (_even_mul(e1, e2), w)
            prod = p1 * p2
            if sign < 0:
                prod = -prod
            acc[key] = acc[key] + prod if key in acc else prod
    return SuperElement(acc)


def invert_unit(a):
    """Inverse of ``m (1 + nu)`` with m an invertible monomial and nu nilpotent."""
    heads = [(e, p) for (e, w), p in a._data.items() if w == ()]
    if len(heads) != 1:
        raise NotAUnit(f"even constant part of {render(a)} is not a single monomial")
    even, coef = heads[0]
    if not coef.is_constant():
        raise NotAUnit(f"leading coefficient {coef} of {render(a)} involves unknowns")
    c = coef.constant_term()
    m_inv = SuperElement({(_even_neg(even), ()): Poly.const(1 / c)})
    nu = m_inv * a - SuperElement.one()
    if any(w == () for (_, w) in nu._data):
        raise NotAUnit(f"{render(a)} has a non-nilpotent remainder")
    # geometric series; nu^k vanishes once k exceeds the odd indices present
    total = SuperElement.one()
    power = SuperElement.one()
    neg_nu = -nu
    while True:
        power = power * neg_nu
        if power.is_zero():
            break
        total = total + power
    return total * m_inv


def canonical_unit_power(direction, exponent):
    """Power of the canonical even unit along an edge direction.

    ``direction`` is an integer vector (0-based positions, 1-based variable
    names): ``e_i`` gives ``t_i^l`` and ``e_i - e_j`` gives
    ``(t_i t_j^{-1})^l (1 - l xi_i xi_j)``.
    """
    i, j = _parse_direction(direction)
    form = lf(exponent)
    if j is None:
        return SuperElement({(((i, form),) if form else (), ()): Poly.const(1)})
    even = tuple(sorted(((i, form), (j, lf_scale(form, -1))))) if form else ()
    if isinstance(exponent, Unknown):
        coeff = Poly.var(exponent.name)
    elif isinstance(exponent, str):
        coeff = Poly.var(exponent)
    else:
        coeff = Poly.const(exponent)
    # (1 - xi_i xi_j)^l = 1 - l xi_i xi_j because (xi_i xi_j)^2 = 0
    sign, word = word_mul((i,), (j,))
    body = {(even, ()): Poly.const(1)}
    if not coeff.is_zero():
        body[(even, word)] = -coeff * sign
    return SuperElement(body)


def odd_direction(direction):
    """xi_i for e_i, xi_i - xi_j for e_i - e_j."""
    i, j = _parse_direction(direction)
    out = SuperElement.xi(i)
    if j is not None:
        out = out - SuperElement.xi(j)
    return out


def _parse_direction(direction):
    """Return 1-based (i, j) with j None for a coordinate direction."""
    plus = [k + 1 for k, v in enumerate(direction) if v == 1]
    minus = [k + 1 for k, v in enumerate(direction) if v == -1]
    if sum(1 for v in direction if v) != len(plus) + len(minus):
        raise InvalidDirection(f"{tuple(direction)} is not x_i or x_i - x_j")
    if len(plus) == 1 and not minus:
        return plus[0], None
    if len(plus) == 1 and len(minus) == 1:
        return plus[0], minus[0]
    raise InvalidDirection(f"{tuple(direction)} is not x_i or x_i - x_j")


def substitute(a, assignment, partial=False):
    """Evaluate unknowns. Keys are Unknowns or names; values exact rationals.

    Unknowns occurring in even exponents, or declared integer-valued, must
    receive integers.
    """
    names = {}
    for k, v in assignment.items():
        name = k.name if isinstance(k, Unknown) else k
        value = v if isinstance(v, Poly) else Fraction(v)
        if isinstance(k, Unknown) and k.kind == INTEGER and (
                isinstance(value, Poly) or value.denominator != 1):
            raise NonIntegerForIntegerUnknown(f"{name} = {v}")
        names[name] = value
    exp_names = a.exponent_names()
    for n in exp_names & set(names):
        if isinstance(names[n], Poly) or names[n].denominator != 1:
            raise NonIntegerForIntegerUnknown(f"{n} = {names[n]} appears in an exponent")
    if not partial:
        missing = a.unknown_names() - set(names)
        if missing:
            raise MissingAssignment(", ".join(sorted(missing)))
    ints = {n: int(v) for n, v in names.items() if n in exp_names}
    acc = {}
    for (e, w), p in a._data.items():
        e2 = tuple(sorted((i, f) for i, f in ((i, lf_eval(f, ints)) for i, f in e) if f))
        p2 = p.substitute({n: v for n, v in names.items()})
        key = (e2, w)
        acc[key] = acc[key] + p2 if key in acc else p2
    return SuperElement(acc)


# ---------------------------------------------------------------- text form

def _even_text(e):
    parts = []
    for i, form in e:
        if form == (("", 1),):
            parts.append(f"t{i}")
        elif len(form) == 1 and form[0][0] == "":
            parts.append(f"t{i}^{form[0][1]}")
        elif len(form) == 1 and abs(form[0][1]) == 1:
            parts.append(f"t{i}^{'-' if form[0][1] < 0 else ''}{form[0][0]}")
        else:
            parts.append(f"t{i}^({_lf_text(form)})")
    return "*".join(parts)


def _word_text(w):
    return "".join(f"x{i}" for i in w)


def render(a):
    """Plain-text form, e.g. ``t1^l*t2^-l*(1 - l*x1x2)``."""
    groups = {}
    for (e, w), p in a._data.items():
        for m, c in p._terms.items():
            groups.setdefault(e, []).append((w, m, c))
    pieces = []
    for e in sorted(groups):
        inner = sorted(groups[e], key=lambda wmc: (len(wmc[0]), wmc[0], _mono_order_key(wmc[1])))
        et = _even_text(e)
        if len(inner) == 1:
            w, m, c = inner[0]
            factors = ([_mono_text(m)] if m else []) + ([et] if et else []) + ([_word_text(w)] if w else [])
            pieces.append((c < 0, _scaled_text(abs(c), factors)))
            continue
        inner_text = _join_signed([
            (c < 0, _scaled_text(abs(c), ([_mono_text(m)] if m else []) + ([_word_text(w)] if w else [])))
            for w, m, c in inner])
        pieces.append((False, f"{et}*({inner_text})" if et else inner_text))
    return _join_signed(pieces)


def parse(text):
    """Inverse of :func:`render`; accepts general +, -, *, ^ and parentheses."""
    from .textform import parse_element
    return parse_element(text)
