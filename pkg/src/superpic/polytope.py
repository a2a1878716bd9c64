"""Vertex-presented lattice polytopes: 1-skeleton, parallel classes, 2-faces.

Everything is decided by exact rational linear programming, so results are
certified rather than approximated.  Sizes are desk scale (tens of vertices).
"""

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .errors import (DegeneratePolytope, InvalidPolytope, InvariantFailure,
                     OutOfRange, TooLargeForEnumeration)
from .linalg import rank, sign_normalize
from .lp import OPTIMAL, find_separating_functional, linprog_eq

DEFAULT_MAX_VERTICES = 60
COLORING_LIMIT = 24


def max_vertices():
    try:
        return int(os.environ.get("SUPERPIC_MAX_VERTICES", DEFAULT_MAX_VERTICES))
    except ValueError:
        return DEFAULT_MAX_VERTICES


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integer vertices in Z^n.

    ``kind`` is ``"qgr"`` for subpolytopes of a hypersimplex (then ``r`` is
    the common coordinate sum) and ``"general"`` otherwise.
    """

    ambient_dim: int
    vertices: tuple
    kind: str = "general"
    r: Optional[int] = None
    name: str = ""

    def __post_init__(self):
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if self.ambient_dim < 1:
            raise InvalidPolytope("ambient dimension must be positive")
        if not verts:
            raise InvalidPolytope("vertex list is empty")
        if any(len(v) != self.ambient_dim for v in verts):
            raise InvalidPolytope("vertex length differs from ambient dimension")
        if len(set(verts)) != len(verts):
            raise InvalidPolytope("vertices are not distinct")
        if self.kind not in ("qgr", "general"):
            raise InvalidPolytope(f"unknown kind {self.kind!r}")
        if self.kind == "qgr":
            sums = {sum(v) for v in verts}
            if any(x not in (0, 1) for v in verts for x in v) or len(sums) != 1:
                raise InvalidPolytope("qgr polytopes need 0/1 vertices with a common coordinate sum")
            if self.r is None:
                object.__setattr__(self, "r", sums.pop())
            elif sums != {self.r}:
                raise InvalidPolytope(f"vertex sums {sorted(sums)} differ from r={self.r}")

    @property
    def num_vertices(self):
        return len(self.vertices)

    def to_json(self):
        out = {"name": self.name, "ambient_dim": self.ambient_dim,
               "vertices": [list(v) for v in self.vertices], "kind": self.kind}
        if self.r is not None:
            out["r"] = self.r
        return out

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            verts = data["vertices"]
            n = data.get("ambient_dim", len(verts[0]) if verts else 0)
            if any(not isinstance(x, int) or isinstance(x, bool) for v in verts for x in v):
                raise InvalidPolytope("vertex coordinates must be integers")
            return cls(n, tuple(tuple(v) for v in verts), data.get("kind", "general"),
                       data.get("r"), data.get("name", ""))
        except (KeyError, TypeError, IndexError) as exc:
            raise InvalidPolytope(f"malformed polytope JSON: {exc}") from exc


def hypersimplex(r, n):
    """All 0/1 vectors of length n with exactly r ones."""
    if n < 1 or not 0 <= r <= n:
        raise OutOfRange(f"hypersimplex needs 0 <= r <= n, n >= 1 (got r={r}, n={n})")
    verts = []
    for ones in combinations(range(n), r):
        verts.append(tuple(1 if i in ones else 0 for i in range(n)))
    verts.sort(reverse=True)
    return LatticePolytope(n, tuple(verts), "qgr", r, f"hypersimplex-{r}-{n}")


def product(p, q, name=""):
    """Cartesian product, coordinates of p first."""
    verts = tuple(u + v for u in p.vertices for v in q.vertices)
    kind, r = "general", None
    if p.kind == "qgr" and q.kind == "qgr":
        kind, r = "qgr", p.r + q.r
    return LatticePolytope(p.ambient_dim + q.ambient_dim, verts, kind, r, name)


def is_qgr_kind(p):
    """True when p sits in some hypersimplex: 0/1 vertices, constant sum."""
    return (all(x in (0, 1) for v in p.vertices for x in v)
            and len({sum(v) for v in p.vertices}) == 1)


def affine_dim(p):
    base = p.vertices[0]
    return rank([[a - b for a, b in zip(v, base)] for v in p.vertices[1:]])


# ---------------------------------------------------------------- skeleton

@dataclass(frozen=True)
class Skeleton:
    edges: tuple                      # sorted (i, j) with i < j
    direction_of: dict = field(hash=False)   # edge -> primitive sign-normalized direction
    parallel_classes: dict = field(hash=False)  # direction -> tuple of edges
    certificates: dict = field(hash=False, default_factory=dict)

    def neighbors(self, i):
        return [b if a == i else a for a, b in self.edges if i in (a, b)]


def _midpoint_is_extreme(verts, i, j):
    """Edge test: can the midpoint of v_i v_j use weight on other vertices?

    Maximizes the total weight that a convex representation of the midpoint
    puts on vertices other than v_i, v_j.  The pair spans an edge iff that
    maximum is zero.
    """
    n = len(verts[0])
    mid = [Fraction(a + b, 2) for a, b in zip(verts[i], verts[j])]
    a_eq = [[v[k] for v in verts] for k in range(n)]
    a_eq.append([1] * len(verts))
    b_eq = mid + [1]
    cost = [0 if k in (i, j) else -1 for k in range(len(verts))]
    res = linprog_eq(a_eq, b_eq, cost)
    if res.status != OPTIMAL:
        raise InvariantFailure("midpoint LP failed")
    return res.value == 0


def _check_size(p):
    if p.num_vertices > max_vertices():
        raise TooLargeForEnumeration(
            f"{p.num_vertices} vertices exceeds the limit {max_vertices()} (SUPERPIC_MAX_VERTICES)")


@lru_cache(maxsize=256)
def skeleton(p):
    """Exact 1-skeleton; every edge carries a certifying functional."""
    _check_size(p)
    if p.num_vertices < 2:
        raise DegeneratePolytope("a single point has no 1-skeleton")
    verts = p.vertices
    n = p.ambient_dim
    for i in range(len(verts)):
        if find_separating_functional(verts, {i}, n) is None:
            raise InvalidPolytope(f"{verts[i]} is not a vertex of the convex hull")
    edges, dirs, certs = [], {}, {}
    for i, j in combinations(range(len(verts)), 2):
        if not _midpoint_is_extreme(verts, i, j):
            continue
        cert = find_separating_functional(verts, {i, j}, n)
        if cert is None:
            raise InvariantFailure(f"edge {i}-{j} has no supporting functional")
        edges.append((i, j))
        dirs[(i, j)] = sign_normalize([a - b for a, b in zip(verts[j], verts[i])])
        certs[(i, j)] = cert
    classes = {}
    for e in edges:
        classes.setdefault(dirs[e], []).append(e)
    sk = Skeleton(tuple(edges), dirs, {d: tuple(es) for d, es in sorted(classes.items())}, certs)
    if _components(len(verts), edges) != 1:
        raise InvariantFailure("polytope graph is disconnected")
    return sk


def certify_face(p, index_set):
    """Re-check that a functional is maximized exactly on the given vertices."""
    cert = find_separating_functional(p.vertices, set(index_set), p.ambient_dim)
    if cert is None:
        return False
    vals = [sum(c * x for c, x in zip(cert, v)) for v in p.vertices]
    top = max(vals)
    return {k for k, v in enumerate(vals) if v == top} == set(index_set)


def _components(nv, edges):
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = nv
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def pc_witness_classes(p):
    """Directions whose edges disconnect the skeleton when removed."""
    sk = skeleton(p)
    out = []
    for d, es in sk.parallel_classes.items():
        rest = [e for e in sk.edges if sk.direction_of[e] != d]
        if _components(p.num_vertices, rest) > 1:
            out.append(d)
    return out


def parallel_component_number(p):
    return len(pc_witness_classes(p))


def pc_by_coloring(p, limit=COLORING_LIMIT):
    """Count 2-colorings (up to swap, not monochromatic) whose bichromatic
    edges are all parallel."""
    nv = p.num_vertices
    if nv > limit:
        raise TooLargeForEnumeration(f"{nv} vertices exceeds coloring limit {limit}")
    sk = skeleton(p)
    edges = [(a, b, sk.direction_of[(a, b)]) for a, b in sk.edges]
    count = 0
    # vertex 0 always has color 0
    for mask in range(1, 1 << (nv - 1)):
        colors = mask << 1
        seen = None
        ok = True
        for a, b, d in edges:
            if (colors >> a & 1) != (colors >> b & 1):
                if seen is None:
                    seen = d
                elif seen != d:
                    ok = False
                    break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------- 2-faces

@dataclass(frozen=True)
class TwoFace:
    vertex_indices: tuple   # cyclic boundary order
    shape: str              # "triangle", "square" or "other(k)"
    certificate: tuple = ()


def _in_plane(verts, u, v, w, x):
    diffs = [[a - b for a, b in zip(y, verts[u])] for y in (verts[v], verts[w], verts[x])]
    return rank(diffs) == 2


def _cyclic_order(verts, members, sk):
    members = set(members)
    adj = {m: [] for m in members}
    for a, b in sk.edges:
        if a in members and b in members:
            adj[a].append(b)
            adj[b].append(a)
    if any(len(v) != 2 for v in adj.values()):
        raise InvariantFailure("2-face boundary is not a cycle")
    start = min(members, key=lambda k: verts[k])
    order = [start]
    prev, cur = None, start
    nxt = min(adj[start], key=lambda k: verts[k])
    while nxt != start:
        order.append(nxt)
        prev, cur = cur, nxt
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
    return tuple(order)


def _shape(verts, order, sk):
    k = len(order)
    if k == 3:
        return "triangle"
    if k == 4:
        def d(a, b):
            key = (min(a, b), max(a, b))
            return sk.direction_of[key]
        o = order
        if d(o[0], o[1]) == d(o[2], o[3]) and d(o[1], o[2]) == d(o[3], o[0]):
            return "square"
    return f"other({k})"


@lru_cache(maxsize=256)
def two_faces(p):
    """All 2-faces, each certified by an exact supporting functional."""
    if affine_dim(p) < 2:
        raise DegeneratePolytope("2-faces need dimension at least 2")
    sk = skeleton(p)
    verts = p.vertices
    seen = set()
    faces = []
    for u in range(len(verts)):
        nbrs = sk.neighbors(u)
        for v, w in combinations(nbrs, 2):
            dv = sk.direction_of[(min(u, v), max(u, v))]
            dw = sk.direction_of[(min(u, w), max(u, w))]
            if dv == dw:
                continue
            members = frozenset([u, v, w] + [x for x in range(len(verts))
                                             if x not in (u, v, w) and _in_plane(verts, u, v, w, x)])
            if members in seen:
                continue
            seen.add(members)
            cert = find_separating_functional(verts, set(members), p.ambient_dim)
            if cert is None:
                continue
            if not certify_face(p, members):
                raise InvariantFailure("2-face certificate does not re-check")
            order = _cyclic_order(verts, members, sk)
            faces.append(TwoFace(order, _shape(verts, order, sk), cert))
    faces.sort(key=lambda f: sorted(verts[k] for k in f.vertex_indices))
    return tuple(faces)


# ---------------------------------------------------------------- directions

@dataclass(frozen=True)
class DirectionReport:
    ok: bool
    offending: tuple   # ((i, j), direction) pairs


def is_admissible_direction(d):
    nz = [x for x in d if x]
    return (len(nz) == 1 and nz[0] in (1, -1)) or sorted(nz) == [-1, 1]


def validate_edge_directions(p):
    """Every edge must be parallel to some x_i or x_i - x_j."""
    sk = skeleton(p)
    bad = tuple((e, sk.direction_of[e]) for e in sk.edges if not is_admissible_direction(sk.direction_of[e]))
    return DirectionReport(not bad, bad)


# ---------------------------------------------------------------- export

_PALETTE = ["blue", "red", "darkgreen", "orange", "purple", "brown", "magenta",
            "cyan4", "gold3", "gray40", "olivedrab", "navy"]


def skeleton_dot(p):
    """Graphviz DOT of the skeleton: one color per parallel class, pc-witness
    classes drawn thick."""
    sk = skeleton(p)
    witnesses = set(pc_witness_classes(p))
    lines = [f'graph "{p.name or "polytope"}" {{', "  node [shape=point];"]
    for k, v in enumerate(p.vertices):
        label = "".join(str(x) for x in v) if all(0 <= x <= 9 for x in v) else ",".join(map(str, v))
        lines.append(f'  v{k} [label="{label}", xlabel="{label}"];')
    for ci, (d, es) in enumerate(sk.parallel_classes.items()):
        color = _PALETTE[ci % len(_PALETTE)]
        thick = d in witnesses
        style = f'color="{color}"' + (', penwidth=4, style="bold"' if thick else ", penwidth=1")
        for a, b in es:
            lines.append(f'  v{a} -- v{b} [{style}, tooltip="{d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def expected_product_edges(p, q):
    """|E_P| |V_Q| + |E_Q| |V_P| for the product of two polytopes."""
    ep = len(skeleton(p).edges) if p.num_vertices > 1 else 0
    eq = len(skeleton(q).edges) if q.num_vertices > 1 else 0
    return ep * q.num_vertices + eq * p.num_vertices
