"""Brute-force face enumeration: collect the maximizer sets of every integer
functional with small coefficients.  Independent of the LP-based code."""

from itertools import product

from superpic.linalg import rank


def maximizer_sets(vertices, box=2):
    n = len(vertices[0])
    sets = set()
    for a in product(range(-box, box + 1), repeat=n):
        vals = [sum(x * y for x, y in zip(a, v)) for v in vertices]
        top = max(vals)
        sets.add(frozenset(i for i, v in enumerate(vals) if v == top))
    return sets


def faces_of_dim(vertices, dim, box=2):
    out = []
    for s in maximizer_sets(vertices, box):
        pts = [vertices[i] for i in sorted(s)]
        d = rank([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]) if len(pts) > 1 else 0
        if d == dim:
            out.append(s)
    return sorted(out, key=sorted)
