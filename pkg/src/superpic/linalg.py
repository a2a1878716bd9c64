"""Exact linear algebra over Q and Z on plain lists.

Matrices are lists of rows. Entries may be ints or Fractions; results are
Fractions (rational routines) or ints (lattice routines).
"""

from fractions import Fraction
from math import gcd

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


def _q(x):
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    return _Q(x)


def _f(x):
    return Fraction(int(x.numerator), int(x.denominator))


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (reduced_rows, pivot_columns)."""
    red, pivots = _rref(rows, ncols)
    return [[_f(x) for x in row] for row in red], pivots


def _rref(rows, ncols=None):
    m = [[_q(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    if not rows:
        return 0
    return len(_rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows . x = 0} over Q."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def in_span(vector, generators):
    if not any(vector):
        return True
    if not generators:
        return False
    return rank(list(generators) + [vector]) == rank(generators)


def primitive(vec):
    """Scale a rational vector to a primitive integer vector (sign kept)."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def sign_normalize(vec):
    """Primitive integer vector with first nonzero entry positive."""
    p = primitive(vec)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def integer_kernel(rows, ncols):
    """Basis of the lattice {x in Z^ncols : rows . x = 0}.

    Column-style Hermite reduction: unimodular column operations bring the
    matrix to echelon form while the same operations are applied to an
    identity matrix; the columns of that matrix matching zero columns of the
    reduced matrix span the kernel lattice.
    """
    a = [[int(x) for x in row] for row in rows]
    for row in a:
        assert len(row) == ncols
    # u holds columns of the transform, stored as rows for convenience
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    cols = [[row[j] for row in a] for j in range(ncols)]
    start = 0
    for r in range(len(a)):
        if start >= ncols:
            break
        while True:
            nz = [j for j in range(start, ncols) if cols[j][r] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][r]))
            for j in nz:
                if j == j0:
                    continue
                q = cols[j][r] // cols[j0][r]
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[j0])]
                u[j] = [x - q * y for x, y in zip(u[j], u[j0])]
        nz = [j for j in range(start, ncols) if cols[j][r] != 0]
        if not nz:
            continue
        j0 = nz[0]
        cols[start], cols[j0] = cols[j0], cols[start]
        u[start], u[j0] = u[j0], u[start]
        start += 1
    return [tuple(u[j]) for j in range(start, ncols)]
