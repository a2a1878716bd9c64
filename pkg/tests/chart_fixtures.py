"""Even coordinate rings of the three affine charts of the Pi-projective plane.

Kept as fixtures: the cocycle ansatz does not search over correction terms
1 + sum b_m t^m x1x2, and these rings show why the constant term of such a
correction can never absorb a nonzero exponent.
"""

from superpic.superalg import SuperElement, invert_unit

t, xi, one = SuperElement.t, SuperElement.xi, SuperElement.one()
N = xi(1, 2)

# (generator, invertible on the chart)
CHARTS = {
    "U0": [(t(1), False), (t(2), False), (t(1) * t(2) * N, False)],
    "U1": [(t(1, -1), False), (t(1, -1) * t(2) * (one + N), False), (t(1, -2) * t(2) * N, False)],
    "U2": [(t(2, -1), False), (t(1) * t(2, -1) * (one - N), False), (t(1) * t(2, -2) * N, False)],
    "U01": [(t(1), True), (t(2), False), (t(2) * N, False)],
    "U02": [(t(1), False), (t(2), True), (t(1) * N, False)],
    "U12": [(t(1, -1), False), (t(1, -1) * t(2) * (one + N), True), (t(1, -1) * N, False)],
}


def exponent(even):
    """Integer exponent vector (a, b) of t1^a t2^b from an even key."""
    out = [0, 0]
    for i, form in even:
        out[i - 1] = dict(form)[""]
    return tuple(out)


def nilpotent_support(chart, depth=3):
    """Exponents of x1x2 coefficients of nilpotent ring elements, up to depth factors.

    A product is nilpotent when it uses at least one x1x2 generator.
    """
    gens = []
    for g, inv in CHARTS[chart]:
        gens.append(g)
        if inv:
            gens.append(invert_unit(g))
    frontier = [g for g, _ in CHARTS[chart] if g.coefficient(*_body(g)).is_zero()]
    support = set()
    for _ in range(depth):
        for x in frontier:
            support |= {exponent(even) for (even, word), _ in x.items() if word == (1, 2)}
        frontier = [x * g for x in frontier for g in gens]
    return support


def _body(g):
    """Key of the reduced (x-free) term of g, if any."""
    even = g.items()[0][0][0]
    return even, ()
