"""A deliberately naive Grassmann-Laurent algebra used as an oracle.

Elements are dicts ``(even_exponents, word) -> Fraction`` with concrete
integer exponents.  Words are sorted by explicit bubble sort, counting
transpositions, so the sign rule is computed independently of the library.
"""

import random
from fractions import Fraction

from superpic.superalg import SuperElement

N_EVEN = 3


def sort_word(word):
    w = list(word)
    sign = 1
    for i in range(len(w)):
        for j in range(len(w) - 1 - i):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                sign = -sign
    if len(set(w)) != len(w):
        return 0, ()
    return sign, tuple(w)


def mul(a, b):
    out = {}
    for (e1, w1), c1 in a.items():
        for (e2, w2), c2 in b.items():
            sign, w = sort_word(w1 + w2)
            if not sign:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            out[(e, w)] = out.get((e, w), 0) + sign * c1 * c2
    return {k: v for k, v in out.items() if v}


def from_element(x):
    """Library element with concrete exponents -> oracle dict."""
    out = {}
    for (even, word, mono), c in x.terms().items():
        assert mono == ()
        e = [0] * N_EVEN
        for i, form in even:
            (name, v), = form
            assert name == ""
            e[i - 1] = v
        key = (tuple(e), word)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def to_element(d):
    x = SuperElement.zero()
    for (e, w), c in d.items():
        term = SuperElement.scalar(c)
        for i, v in enumerate(e):
            if v:
                term = term * SuperElement.t(i + 1, v)
        x = x + term * SuperElement.xi(*w)
    return x


def random_dict(rng, n_odd, terms=3, homogeneous=None):
    out = {}
    for _ in range(rng.randint(1, terms)):
        e = tuple(rng.randint(-2, 2) for _ in range(N_EVEN))
        k = homogeneous if homogeneous is not None else rng.randint(0, min(3, n_odd))
        w = tuple(sorted(rng.sample(range(1, n_odd + 1), k)))
        out[(e, w)] = out.get((e, w), 0) + Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
    return {k: v for k, v in out.items() if v}


def random_unit(rng, n_odd):
    """monomial * (1 + nilpotent)."""
    e = tuple(rng.randint(-2, 2) for _ in range(N_EVEN))
    head = {(e, ()): Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))}
    nil = {}
    for _ in range(rng.randint(1, 4)):
        k = rng.randint(1, n_odd)
        w = tuple(sorted(rng.sample(range(1, n_odd + 1), k)))
        nil[((0,) * N_EVEN, w)] = Fraction(rng.randint(-3, 3))
    nil[((0,) * N_EVEN, ())] = Fraction(1)
    return mul(head, {k: v for k, v in nil.items() if v})


def rng_for(seed):
    return random.Random(seed)
