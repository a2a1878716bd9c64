"""Coordinate-split product decompositions and simplex factor detection."""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .polytope import LatticePolytope, affine_dim, skeleton, validate_edge_directions


@dataclass(frozen=True)
class Factorization:
    blocks: tuple           # tuples of 0-based coordinate indices
    factors: tuple          # LatticePolytope per block
    simplex_tags: tuple     # Optional[int] per block: d for simplex(d)

    @property
    def simplex_dims(self):
        return [d for d in self.simplex_tags if d is not None]

    def nonpoint_factors(self):
        return [(b, f, t) for b, f, t in zip(self.blocks, self.factors, self.simplex_tags)
                if f.num_vertices > 1]

    def to_json(self):
        return {
            "blocks": [[i + 1 for i in b] for b in self.blocks],
            "factors": [[list(v) for v in f.vertices] for f in self.factors],
            "simplex_tags": [None if t is None else f"simplex({t})" for t in self.simplex_tags],
        }


def project(vertices, block):
    return sorted({tuple(v[i] for i in block) for v in vertices})


def _is_product(vertices, blocks):
    size = 1
    for b in blocks:
        size *= len(project(vertices, b))
    return size == len(vertices)


def factorize(p):
    """Finest coordinate partition with V(P) = prod_blocks proj_block V(P)."""
    n = p.ambient_dim
    verts = p.vertices
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(n), 2):
        if len(project(verts, (i, j))) < len(project(verts, (i,))) * len(project(verts, (j,))):
            parent[find(i)] = find(j)

    def blocks_now():
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return sorted(tuple(g) for g in groups.values())

    # pairwise independence is not enough: merge the smallest dependent
    # family of blocks until the global product test passes
    while not _is_product(verts, blocks_now()):
        bl = blocks_now()
        fam = next(f for k in range(2, len(bl) + 1) for f in combinations(bl, k) if _dependent(verts, f))
        for b in fam[1:]:
            parent[find(b[0])] = find(fam[0][0])

    blocks = blocks_now()
    factors = tuple(LatticePolytope(len(b), tuple(project(verts, b)), name=f"{p.name}[{','.join(str(i + 1) for i in b)}]")
                    for b in blocks)
    tags = tuple(is_simplex_factor(f) for f in factors)
    return Factorization(tuple(blocks), factors, tags)


def _dependent(vertices, family):
    size = 1
    for b in family:
        size *= len(project(vertices, b))
    return len(project(vertices, tuple(i for b in family for i in b))) < size


def is_simplex_factor(f) -> Optional[int]:
    """d when f is a d-simplex with admissible edge directions, else None."""
    nv = f.num_vertices
    if nv < 2:
        return None
    d = affine_dim(f)
    if d != nv - 1:
        return None
    sk = skeleton(f)
    if len(sk.edges) != nv * (nv - 1) // 2:
        return None
    if not validate_edge_directions(f).ok:
        return None
    return d


def reassemble(fact):
    """Vertex set rebuilt from the factors (coordinate order respected)."""
    n = sum(len(b) for b in fact.blocks)
    out = [[0] * n]
    for b, f in zip(fact.blocks, fact.factors):
        new = []
        for partial in out:
            for v in f.vertices:
                w = list(partial)
                for i, x in zip(b, v):
                    w[i] = x
                new.append(w)
        out = new
    return sorted(tuple(v) for v in out)

