"""Exact two-phase simplex over the rationals (Bland's rule).

Only what the polytope code needs: ``minimize c.x  s.t.  A x = b, x >= 0``.
Problems here are tiny (tens of variables), so a dense exact-rational tableau is fine.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

try:  # exact rationals; gmpy2 is much faster than fractions in the pivot loop
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None


def _pivot(tab, basis, r, c):
    inv = 1 / tab[r][c]
    tab[r] = [v * inv for v in tab[r]]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [a - f * b for a, b in zip(row, tab[r])]
    basis[r] = c


def _run(tab, basis, cost, allowed):
    """Minimize cost over the tableau. Last column is the rhs."""
    m = len(tab)
    while True:
        # reduced costs
        enter = None
        for j in allowed:
            if j in basis:
                continue
            red = cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(m))
            if red < 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(tab, basis, best[1], enter)


def linprog_eq(a_eq, b_eq, cost=None):
    """Exact LP: minimize cost.x subject to a_eq x = b_eq, x >= 0.

    With ``cost=None`` only feasibility is decided (phase I).
    """
    m = len(a_eq)
    n = len(a_eq[0]) if m else (len(cost) if cost else 0)
    rows = []
    for row, b in zip(a_eq, b_eq):
        row = [_q(v) for v in row]
        b = _q(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row + [b])
    # artificial variables n .. n+m-1
    tab = [r[:-1] + [Q(int(i == k)) for k in range(m)] + [r[-1]] for i, r in enumerate(rows)]
    basis = [n + i for i in range(m)]
    phase1 = [Q(0)] * n + [Q(1)] * m
    _run(tab, basis, phase1, range(n + m))
    if sum(tab[i][-1] for i in range(m) if basis[i] >= n) != 0:
        return LPResult(INFEASIBLE)
    # drive remaining (zero-valued) artificials out of the basis
    for i in range(m):
        if basis[i] >= n:
            j = next((j for j in range(n) if tab[i][j] != 0), None)
            if j is not None:
                _pivot(tab, basis, i, j)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    if cost is not None:
        c = [_q(v) for v in cost]
        status = _run(tab, basis, c, range(n))
        if status == UNBOUNDED:
            return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        x[b] = _frac(tab[i][-1])
    value = sum(Fraction(ci) * xi for ci, xi in zip(cost, x)) if cost is not None else None
    return LPResult(OPTIMAL, tuple(x), value)


def _q(v):
    if isinstance(v, Fraction):
        return Q(v.numerator, v.denominator)
    return Q(v)


def _frac(v):
    return Fraction(int(v.numerator), int(v.denominator))


def find_separating_functional(points, face, free_dim):
    """Find an integer-scalable functional a with a.p = a.face[0] on the face
    and a.p <= a.face[0] - 1 off it.

    ``points`` are vectors of length ``free_dim``; ``face`` is a set of
    indices. Returns the rational functional or None when no such functional
    exists (the index set is not a face).
    """
    face = sorted(face)
    base = points[face[0]]
    a_eq, b_eq = [], []
    others = [i for i in range(len(points)) if i not in face]
    nslack = len(others)
    # variables: a+ (free_dim), a- (free_dim), slacks
    for i in face[1:]:
        d = [p - q for p, q in zip(points[i], base)]
        a_eq.append(d + [-x for x in d] + [0] * nslack)
        b_eq.append(0)
    for k, i in enumerate(others):
        d = [p - q for p, q in zip(points[i], base)]
        slack = [0] * nslack
        slack[k] = 1
        a_eq.append(d + [-x for x in d] + slack)
        b_eq.append(-1)
    if not a_eq:
        return tuple(Fraction(0) for _ in range(free_dim))
    res = linprog_eq(a_eq, b_eq)
    if res.status != OPTIMAL:
        return None
    x = res.x
    return tuple(x[j] - x[free_dim + j] for j in range(free_dim))
