"""Reference pentagon system and the orientation dictionary onto our edges.

Reference variables (l1..l4, c1..c4) live on the arrows D->E, E->A, A->B, B->C
with A=(0,0), B=(2,0), C=(2,1), D=(1,2), E=(0,2); each maps to one of our
edge unknowns with sign +1 when orientations agree and -1 otherwise.  The
slanted edge D->C carries (l1 + l3, c1 + c3).
"""

from superpic.catalog import CATALOG
from superpic.superalg import Poly

v = Poly.var
PENTAGON = CATALOG["pentagon"].polytope


def pentagon_dictionary(sys_):
    verts = PENTAGON.vertices
    A, B, C, D, E = (verts.index(x) for x in [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    arrows = [(D, E), (E, A), (A, B), (B, C)]
    Ls, Cs = [], []
    for tail, head in arrows:
        k, e = next((k, e) for k, e in enumerate(sys_.edges) if {e.tail, e.head} == {tail, head})
        s = 1 if (e.tail, e.head) == (tail, head) else -1
        Ls.append(s * v(f"l{k + 1}"))
        Cs.append(s * v(f"c{k + 1}"))
    k, e = next((k, e) for k, e in enumerate(sys_.edges) if {e.tail, e.head} == {D, C})
    s = 1 if (e.tail, e.head) == (D, C) else -1
    return Ls, Cs, s * v(f"l{k + 1}"), s * v(f"c{k + 1}")


def pentagon_reference_equations(sys_, rhs_sign=1):
    (l1, l2, l3, l4), (c1, c2, c3, c4), fl, fc = pentagon_dictionary(sys_)
    return [
        l1 + l2 + l3 + l4,
        c1 + c2 + c3 + c4,
        c1 * c2 + c1 * c4 - c2 * c3 + c3 * c4 - rhs_sign * (l2 + l4),
        fl - (l1 + l3),
        fc - (c1 + c3),
    ]
