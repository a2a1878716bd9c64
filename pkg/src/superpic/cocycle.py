"""Cech cocycle conditions for the edge transition-function ansatz.

Every skeleton edge ``k`` carries a reference orientation ``v -> w`` (with
``v - w`` a positive multiple of the normalized direction unless the edge is
flipped) and a transition function

* even mode: ``f_k = u_k^{l_k}``
* pi mode:   ``f_k = u_k^{l_k} (1 + c_k delta_k)``

where ``u_k`` is the canonical even unit of the direction and ``delta_k`` its
odd partner.  Travelling an edge against its orientation uses the inverse.
The product around every 2-face must be 1; the even exponent of that product
gives integer-linear relations and each Grassmann word coefficient gives a
polynomial relation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import InvalidDirections, InvariantFailure, ModeMismatch, NotAUnit
from .linalg import integer_kernel, rref, sign_normalize
from .polytope import affine_dim, skeleton, two_faces, validate_edge_directions, hypersimplex
from .superalg import (INTEGER, Poly, SuperElement, Unknown, _mono_order_key,
                       canonical_unit_power, invert_unit, odd_direction, render_poly,
                       substitute)

EVEN = "even"
PI = "pi"


@dataclass(frozen=True)
class EdgeAnsatz:
    tail: int
    head: int
    direction: tuple
    mode: str
    exponent: Unknown
    odd_coeff: Unknown = None

    def function(self):
        return _ansatz_value(self)


@dataclass
class ConstraintSystem:
    mode: str
    edges: tuple                       # EdgeAnsatz per edge
    cycles: tuple                      # vertex cycles that were imposed
    integer_part: list                 # dicts name -> int, each = 0
    polynomial_part: list              # Polys, each = 0
    order: tuple = field(default=())   # unknown names, elimination order

    @property
    def exponent_names(self):
        return [e.exponent.name for e in self.edges]

    @property
    def odd_names(self):
        return [e.odd_coeff.name for e in self.edges if e.odd_coeff is not None]


# ---------------------------------------------------------------- assembly

def _ansatz_edges(vertices, edge_list, mode, flip=()):
    out = []
    for k, (a, b) in enumerate(edge_list):
        diff = [y - x for x, y in zip(vertices[a], vertices[b])]
        d = sign_normalize(diff)
        # reference orientation: tail - head is a positive multiple of d
        if next(x for x in diff if x) > 0:
            a, b = b, a
        if k in flip:
            a, b = b, a
        l_k = Unknown(f"l{k + 1}", INTEGER)
        c_k = Unknown(f"c{k + 1}") if mode == PI else None
        out.append(EdgeAnsatz(a, b, d, mode, l_k, c_k))
    return tuple(out)


def _edge_table(edges, functions=None):
    """(tail, head) -> transition function for both orientations."""
    table = {}
    for k, e in enumerate(edges):
        f = functions[k] if functions is not None else e.function()
        table[(e.tail, e.head)] = f
        table[(e.head, e.tail)] = invert_unit(f)
    return table


def cycle_product(table, cycle):
    prod = SuperElement.one()
    for i in range(len(cycle)):
        a, b = cycle[i], cycle[(i + 1) % len(cycle)]
        prod = prod * table[(a, b)]
    return prod


def _split_product(prod):
    """Return (even exponent linear relations, word coefficient polys)."""
    lin, polys = [], []
    keys = {e for (e, _) in prod._data}
    if len(keys) != 1:
        raise InvariantFailure("cycle product is not a single even monomial times a unipotent")
    even = keys.pop()
    for _, form in even:
        rel = {n: v for n, v in form}
        if rel:
            lin.append(rel)
    for (e, w), p in prod._data.items():
        if w == ():
            p = p - 1
        if not p.is_zero():
            polys.append(p)
    return lin, polys


def build_system_from_faces(vertices, faces, mode, flip=(), extra_cycles=()):
    """Constraint system of a polyhedral complex given by vertex cycles."""
    if mode not in (EVEN, PI):
        raise ModeMismatch(f"mode must be even or pi, got {mode!r}")
    edge_set = set()
    for cyc in list(faces) + list(extra_cycles):
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            edge_set.add((min(a, b), max(a, b)))
    return _assemble(vertices, sorted(edge_set), list(faces) + list(extra_cycles), mode, flip)


def _assemble(vertices, edge_list, cycles, mode, flip):
    edges = _ansatz_edges(vertices, edge_list, mode, set(flip))
    try:
        table = _edge_table(edges)
    except Exception as exc:
        raise InvalidDirections(str(exc)) from exc
    integer_part, polynomial_part = [], []
    for cyc in cycles:
        lin, polys = _split_product(cycle_product(table, cyc))
        integer_part.extend(lin)
        polynomial_part.extend(polys)
    order = tuple(e.exponent.name for e in edges) + tuple(e.odd_coeff.name for e in edges if e.odd_coeff)
    return ConstraintSystem(mode, edges, tuple(tuple(c) for c in cycles),
                            integer_part, polynomial_part, order)


def build_system(p, mode, flip=(), extra_cycles=()):
    """Cocycle conditions over all 2-faces of p (or the single edge of a segment)."""
    if mode not in (EVEN, PI):
        raise ModeMismatch(f"mode must be even or pi, got {mode!r}")
    report = validate_edge_directions(p)
    if not report.ok:
        raise InvalidDirections(f"edges with inadmissible directions: {list(report.offending)}")
    sk = skeleton(p)
    cycles = [f.vertex_indices for f in two_faces(p)] if affine_dim(p) >= 2 else []
    return _assemble(p.vertices, list(sk.edges), cycles + list(extra_cycles), mode, flip)


def fundamental_cycles(p):
    """A cycle basis of the skeleton graph from a BFS spanning tree."""
    sk = skeleton(p)
    nv = p.num_vertices
    parent = {0: None}
    depth = {0: 0}
    queue = [0]
    tree = set()
    while queue:
        v = queue.pop(0)
        for w in sorted(sk.neighbors(v)):
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                tree.add((min(v, w), max(v, w)))
                queue.append(w)
    assert len(parent) == nv
    cycles = []
    for a, b in sk.edges:
        if (a, b) in tree:
            continue
        pa, pb = [a], [b]
        while pa[-1] != pb[-1]:
            if depth[pa[-1]] >= depth[pb[-1]]:
                pa.append(parent[pa[-1]])
            else:
                pb.append(parent[pb[-1]])
        # a -> ... -> lca <- ... <- b, closed by the edge b -> a
        cycles.append(tuple(pa + pb[-2::-1]))
    return cycles


# ---------------------------------------------------------------- solving

@dataclass
class Solution:
    mode: str
    substitutions: dict        # eliminated name -> Poly in free names
    free: tuple                # surviving unknown names
    forced_zero: tuple         # names forced to 0
    residual: tuple            # normalized nonlinear equations (Polys)
    lattice_basis: tuple       # integer basis of the exponent solution lattice
    exponent_names: tuple

    @property
    def lattice_rank(self):
        return len(self.lattice_basis)

    @property
    def is_trivial(self):
        return not self.free

    def to_json(self):
        return {
            "mode": self.mode,
            "lattice_rank": self.lattice_rank,
            "lattice_basis": [dict(zip(self.exponent_names, v)) for v in self.lattice_basis],
            "forced_zero": list(self.forced_zero),
            "free": list(self.free),
            "substitutions": {k: render_poly(v) for k, v in sorted(self.substitutions.items())},
            "residual": [render_poly(r) for r in self.residual],
        }


def _linear_rows(eqs, index):
    """Linear Polys -> rows over columns (reversed variable order, then const)."""
    n = len(index)
    rows = []
    for p in eqs:
        row = [Fraction(0)] * (n + 1)
        for mono, c in p._terms.items():
            if mono == ():
                row[n] += c
            else:
                (name, _), = mono
                row[n - 1 - index[name]] += c
        rows.append(row)
    return rows


def _eliminate(linear, order):
    """RREF of linear equations pivoting on the latest variables."""
    index = {name: k for k, name in enumerate(order)}
    n = len(order)
    red, pivots = rref(_linear_rows(linear, index), n + 1) if linear else ([], [])
    subs = {}
    for row, col in zip(red, pivots):
        if col == n:
            raise InvariantFailure("inconsistent linear cocycle relations")
        name = order[n - 1 - col]
        expr = Poly.const(-row[n])
        for j in range(col + 1, n):
            if row[j]:
                expr = expr - Poly({((order[n - 1 - j], 1),): row[j]})
        subs[name] = expr
    return subs


def _apply(p, subs):
    if not p.variables() & set(subs):
        return p
    return p.substitute(subs)


def _nonlinear_pass(eqs):
    """Row-reduce with nonlinear monomials first.

    Returns (new linear equations, residual nonlinear equations).
    """
    monos = sorted({m for p in eqs for m in p._terms}, key=lambda m: (-sum(e for _, e in m), _mono_order_key(m)))
    col = {m: k for k, m in enumerate(monos)}
    rows = []
    for p in eqs:
        row = [Fraction(0)] * len(monos)
        for m, c in p._terms.items():
            row[col[m]] = c
        rows.append(row)
    red, pivots = rref(rows, len(monos))
    linear, residual = [], []
    for row, pc in zip(red, pivots):
        poly = Poly({monos[k]: c for k, c in enumerate(row) if c})
        if poly.degree() <= 1:
            linear.append(poly)
            continue
        terms = list(poly._terms)
        if len(terms) == 1 and len(terms[0]) == 1:
            # v^k = 0 forces v = 0
            linear.append(Poly.var(terms[0][0][0]))
            continue
        residual.append(poly)
    return linear, residual


def _solve(system):
    order = system.order
    polys = [Poly({((n, 1),): v for n, v in rel.items()}) for rel in system.integer_part]
    polys += list(system.polynomial_part)
    linear = [p for p in polys if p.degree() <= 1]
    nonlinear = [p for p in polys if p.degree() > 1]
    subs = {}
    residual = []
    while True:
        subs = _eliminate(linear, order)
        reduced = [q for q in (_apply(p, subs) for p in nonlinear) if not q.is_zero()]
        new_linear, residual = _nonlinear_pass(reduced) if reduced else ([], [])
        if not new_linear:
            break
        linear = linear + new_linear
        nonlinear = residual
    residual = sorted({r.normalized() for r in residual}, key=lambda r: (r.degree(), render_poly(r)))
    free = tuple(n for n in order if n not in subs)
    forced = tuple(n for n in order if n in subs and subs[n].is_zero())
    lnames = tuple(system.exponent_names)
    basis = _exponent_lattice(linear, lnames)
    return Solution(system.mode, subs, free, forced, tuple(residual), basis, lnames)


def _exponent_lattice(linear, lnames):
    """Integer solutions in the exponents of the linear relations touching only them."""
    lset = set(lnames)
    idx = {n: k for k, n in enumerate(lnames)}
    # project the linear span onto pure exponent relations by eliminating the rest
    others = sorted({n for p in linear for n in p.variables()} - lset)
    order = list(lnames) + others
    pos = {n: k for k, n in enumerate(order)}
    rows = []
    for p in linear:
        row = [Fraction(0)] * (len(order) + 1)
        for m, c in p._terms.items():
            if m == ():
                row[-1] += c
            else:
                row[pos[m[0][0]]] += c
        # put the non-exponent columns first so elimination clears them
        rows.append(row[len(lnames):-1] + row[:len(lnames)] + [row[-1]])
    red, pivots = rref(rows, len(order) + 1) if rows else ([], [])
    pure = []
    for row, pc in zip(red, pivots):
        if pc < len(others):
            continue
        vals = row[len(others):len(others) + len(lnames)]
        den = 1
        for v in vals:
            den = den * v.denominator // gcd(den, v.denominator)
        pure.append([int(v * den) for v in vals])
    if not pure:
        return tuple(tuple(int(i == k) for i in range(len(lnames))) for k in range(len(lnames)))
    return tuple(integer_kernel(pure, len(lnames)))


def solve_even(system):
    """Rank of the lattice of exponent solutions."""
    if system.mode != EVEN:
        raise ModeMismatch("solve_even needs an even-mode system")
    sol = _solve(system)
    if sol.residual:
        raise InvariantFailure("even-mode relations are not linear on their solution lattice")
    return sol.lattice_rank


def solve_even_report(system):
    if system.mode != EVEN:
        raise ModeMismatch("solve_even needs an even-mode system")
    return _solve(system)


def solve_pi(system):
    if system.mode != PI:
        raise ModeMismatch("solve_pi needs a pi-mode system")
    return _solve(system)


# ---------------------------------------------------------------- checks

def verify_cocycle(p, assignment, cycles=None, reduce=None):
    """True iff every face cycle multiplies to 1.

    ``assignment`` maps vertex-index pairs ``(a, b)`` to the transition
    function for travelling from a to b; a missing orientation uses the
    inverse of the other one.  ``reduce`` optionally rewrites polynomial
    coefficients (e.g. modulo c^2 = l) before testing for zero.
    """
    table = {}
    for (a, b), f in assignment.items():
        table[(a, b)] = f
    for (a, b), f in list(table.items()):
        if (b, a) not in table:
            table[(b, a)] = invert_unit(f)
    if cycles is None:
        sk = skeleton(p)
        missing = [e for e in sk.edges if e not in table]
        if missing:
            raise NotAUnit(f"no transition function on edges {missing}")
        cycles = [f.vertex_indices for f in two_faces(p)] if affine_dim(p) >= 2 else []
    one = SuperElement.one()
    for cyc in cycles:
        prod = cycle_product(table, cyc)
        if reduce is not None:
            prod = SuperElement({k: reduce(v) for k, v in prod._data.items()})
        if prod != one:
            return False
    return True


def reduce_square(c, l):
    """Rewriter for Poly coefficients modulo c^2 = l."""
    def rewrite(p):
        out = Poly()
        for mono, coef in p._terms.items():
            term = Poly.const(coef)
            for name, e in mono:
                if name == c:
                    term = term * Poly.coerce(l) ** (e // 2) * (Poly.var(c) if e % 2 else Poly.const(1))
                else:
                    term = term * Poly({((name, e),): 1})
            out = out + term
        return out
    return rewrite


def tautological_power(n, ell):
    """Transition data of O_Pi(ell) on the simplex Delta_{1,n+1}.

    Every edge carries the same exponent ``ell`` and the same symbolic odd
    coefficient ``c`` (with c^2 = ell understood), oriented along its
    normalized direction.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    simplex = hypersimplex(1, n + 1)
    sk = skeleton(simplex)
    c = Unknown("c")
    out = []
    for a, b in sk.edges:
        e = _ansatz_edges(simplex.vertices, [(a, b)], PI)[0]
        out.append(EdgeAnsatz(e.tail, e.head, e.direction, PI, ell, c))
    return simplex, out


def ansatz_assignment(edges):
    return {(e.tail, e.head): _ansatz_value(e) for e in edges}


def _ansatz_value(e):
    f = canonical_unit_power(e.direction, e.exponent)
    if e.mode == PI:
        coeff = Poly.var(e.odd_coeff.name) if isinstance(e.odd_coeff, Unknown) else Poly.coerce(e.odd_coeff)
        f = f * (SuperElement.one() + SuperElement.scalar(coeff) * odd_direction(e.direction))
    return f


def substitute_assignment(assignment, values):
    return {k: substitute(v, values) for k, v in assignment.items()}


# ---------------------------------------------------------------- ideal comparison

def _monomials_upto(names, degree):
    out = [()]
    frontier = [()]
    for _ in range(degree):
        nxt = set()
        for m in frontier:
            for n in names:
                nxt.add(tuple(sorted(dict(_bump(m, n)).items())))
        out.extend(sorted(nxt))
        frontier = sorted(nxt)
    return out


def _bump(mono, name):
    acc = dict(mono)
    acc[name] = acc.get(name, 0) + 1
    return acc


def truncated_ideal_contains(generators, targets, degree=2):
    """Is every target in the span of {m * g : deg(m * g) <= degree}?"""
    names = sorted({n for p in list(generators) + list(targets) for n in p.variables()})
    span = []
    for g in generators:
        if g.is_zero():
            continue
        room = degree - g.degree()
        for m in _monomials_upto(names, max(room, 0)):
            if sum(e for _, e in m) <= room:
                span.append(g * Poly({m: 1}))
    monos = sorted({m for p in span + list(targets) for m in p._terms}, key=_mono_order_key)
    col = {m: k for k, m in enumerate(monos)}

    def row(p):
        r = [Fraction(0)] * len(monos)
        for m, c in p._terms.items():
            r[col[m]] = c
        return r

    from .linalg import in_span
    rows = [row(p) for p in span]
    return all(in_span(row(t), rows) for t in targets if not t.is_zero())


def same_truncated_ideal(first, second, degree=2):
    """Mutual membership of generators in degree <= ``degree``."""
    return truncated_ideal_contains(first, second, degree) and truncated_ideal_contains(second, first, degree)


def system_generators(system):
    polys = [Poly({((n, 1),): v for n, v in rel.items()}) for rel in system.integer_part]
    return polys + list(system.polynomial_part)
