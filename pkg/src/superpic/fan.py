"""Normal fans with odd decorations, the bracket compatibility check and the
classical Picard rank of the underlying toric variety.

A fan lives in ``N_Q = Q^n / L`` where ``L`` (the lineality) is the space of
functionals constant on the polytope.  Rays are stored as integer vectors of
``Q^n``; two rays differing by an element of ``L`` are the same ray.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import DegeneratePolytope, IncompleteFan, InvariantFailure
from .linalg import in_span, nullspace, primitive, rank, rref
from .lp import OPTIMAL, UNBOUNDED, linprog_eq
from .polytope import affine_dim, skeleton

INDICATOR_SEARCH_LIMIT = 14


@dataclass(frozen=True)
class Ray:
    direction: tuple
    decoration: Optional[frozenset] = None   # index set I (1-based): V = C(sum theta_i)


@dataclass(frozen=True)
class DecoratedFan:
    ambient_dim: int
    rays: tuple
    cones: tuple                 # maximal cones as sorted tuples of ray indices
    lineality: tuple = ()        # integer basis of L

    @property
    def dim(self):
        return self.ambient_dim - len(self.lineality)

    @classmethod
    def from_rays(cls, rays, cones, lineality=()):
        """Build a fan from ray vectors, auto-decorating rays of the form
        +-(e_{i1} + ... + e_{ik})."""
        lineality = tuple(tuple(v) for v in lineality)
        n = len(rays[0])
        out = []
        for r in rays:
            dec = _indicator_decoration(r, lineality, n)
            out.append(Ray(tuple(r), dec))
        return cls(n, tuple(out), tuple(tuple(sorted(c)) for c in cones), lineality)

    def to_json(self):
        return {
            "ambient_dim": self.ambient_dim,
            "rays": [{"direction": list(r.direction),
                      "decoration": None if r.decoration is None else sorted(r.decoration)}
                     for r in self.rays],
            "cones": [list(c) for c in self.cones],
            "lineality": [list(v) for v in self.lineality],
        }


def _pairings(vec, directions):
    return [sum(Fraction(a) * b for a, b in zip(vec, d)) for d in directions]


def _proportional(p, q):
    """Scalar s with p = s q (q nonzero), else None."""
    s = None
    for a, b in zip(p, q):
        if b == 0:
            if a != 0:
                return None
            continue
        t = Fraction(a) / b
        if s is None:
            s = t
        elif s != t:
            return None
    return s


def _indicator_decoration(vec, lineality, n):
    """Find I with vec = +-c * 1_I modulo the lineality, c > 0."""
    if not any(vec):
        return None
    if not lineality:
        nz = {x for x in vec if x}
        if len(nz) == 1 and len(set(abs(x) for x in nz)) == 1:
            return frozenset(i + 1 for i, x in enumerate(vec) if x)
        return None
    if n > INDICATOR_SEARCH_LIMIT:
        return None
    basis = nullspace([list(v) for v in lineality], n)   # directions on which functionals act
    target = _pairings(vec, basis)
    if not any(target):
        return None
    best = None
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            ind = [1 if i in idx else 0 for i in range(n)]
            s = _proportional(_pairings(ind, basis), target)
            if s is not None and s != 0:
                best = frozenset(i + 1 for i in idx)
                break
        if best:
            break
    return best


def _indicator_vector(dec, sign, n):
    return tuple(sign if i + 1 in dec else 0 for i in range(n))


def normal_fan(p):
    """Inner normal fan of p inside the dual of its affine span."""
    d = affine_dim(p)
    if d < 1:
        raise DegeneratePolytope("a point has no normal fan")
    verts = p.vertices
    n = p.ambient_dim
    base = verts[0]
    diffs = [[a - b for a, b in zip(v, base)] for v in verts[1:]]
    lin = [primitive(v) for v in nullspace(diffs, n)]
    span_basis, _ = rref(diffs, n)          # rows span the direction space
    sk = skeleton(p)

    facets = {}
    for v in range(len(verts)):
        nbr_dirs = [[a - b for a, b in zip(verts[w], verts[v])] for w in sk.neighbors(v)]
        for sub in combinations(nbr_dirs, d - 1):
            if d > 1 and rank(list(sub)) != d - 1:
                continue
            # functional y . span_basis vanishing on the chosen directions
            rows = [[sum(Fraction(b) * x for b, x in zip(brow, u)) for brow in span_basis] for u in sub]
            ker = nullspace(rows, d) if rows else [[Fraction(int(i == 0)) for i in range(d)]]
            if len(ker) != 1:
                continue
            a = [sum(ker[0][k] * span_basis[k][j] for k in range(d)) for j in range(n)]
            vals = [sum(x * (c - b) for x, c, b in zip(a, w, verts[v])) for w in verts]
            if all(x >= 0 for x in vals):
                pass
            elif all(x <= 0 for x in vals):
                a = [-x for x in a]
                vals = [-x for x in vals]
            else:
                continue
            on = frozenset(i for i, x in enumerate(vals) if x == 0)
            if on in facets:
                continue
            on_list = sorted(on)
            if rank([[a_ - b_ for a_, b_ in zip(verts[i], verts[on_list[0]])] for i in on_list[1:]]) != d - 1:
                continue
            facets[on] = primitive(a)

    order = sorted(facets, key=lambda f: facets[f])
    rays = []
    for f in order:
        vec = facets[f]
        dec = _indicator_decoration(vec, tuple(lin), n)
        if dec is not None:
            rays.append(Ray(_ray_representative(vec, dec, lin, n), dec))
        else:
            rays.append(Ray(tuple(vec), None))
    cones = []
    for v in range(len(verts)):
        cones.append(tuple(k for k, f in enumerate(order) if v in f))
    return DecoratedFan(n, tuple(rays), tuple(cones), tuple(tuple(x) for x in lin))


def _ray_representative(vec, dec, lin, n):
    """+-1_I when it equals vec modulo the lineality up to positive scaling."""
    for sign in (1, -1):
        cand = _indicator_vector(dec, sign, n)
        if not lin:
            if _proportional(cand, vec) is not None and _proportional(cand, vec) > 0:
                return cand
            continue
        basis = nullspace([list(v) for v in lin], n)
        s = _proportional(_pairings(cand, basis), _pairings(vec, basis))
        if s is not None and s > 0:
            return cand
    return tuple(vec)


# ---------------------------------------------------------------- decorations

@dataclass(frozen=True)
class DecorationReport:
    ok: bool
    violations: tuple     # (cone_index, ray_i, ray_j, bracket)
    undecorated: tuple    # ray indices without a theta-sum decoration


def _smallest_face(fan, cone, a, b):
    """Rays of the smallest face of ``cone`` holding rays a and b.

    Ray c lies on that face iff a + b - eps*c stays in the cone for some eps > 0,
    i.e. c can carry positive weight in a representation of a + b.
    """
    n = fan.ambient_dim
    target = [x + y for x, y in zip(fan.rays[a].direction, fan.rays[b].direction)]
    lin = [list(v) for v in fan.lineality]
    cols = [list(fan.rays[k].direction) for k in cone] + lin + [[-x for x in v] for v in lin]
    a_eq = [[col[j] for col in cols] for j in range(n)]
    face = []
    for pos, k in enumerate(cone):
        if k in (a, b):
            face.append(k)
            continue
        cost = [0] * len(cols)
        cost[pos] = -1
        res = linprog_eq(a_eq, target, cost)
        if res.status == UNBOUNDED or (res.status == OPTIMAL and res.value < 0):
            face.append(k)
    return face


def check_decorations(fan):
    """[V_rho, V_rho'] must lie in the span of every cone holding both rays.

    With ``[theta_i, theta_j] = delta_ij x_i`` the bracket of the decorations
    I and J is the indicator of I & J.  The binding cone is the smallest face
    containing both rays, so that is the span tested.
    """
    violations = []
    seen = set()
    lin = [list(v) for v in fan.lineality]
    for ci, cone in enumerate(fan.cones):
        for a, b in combinations(cone, 2):
            da, db = fan.rays[a].decoration, fan.rays[b].decoration
            if da is None or db is None or (a, b) in seen:
                continue
            common = da & db
            if not common:
                continue
            seen.add((a, b))
            bracket = tuple(1 if i + 1 in common else 0 for i in range(fan.ambient_dim))
            face = _smallest_face(fan, cone, a, b)
            gens = [list(fan.rays[k].direction) for k in face] + lin
            if not in_span(list(bracket), gens):
                violations.append((ci, a, b, bracket))
    undecorated = tuple(k for k, r in enumerate(fan.rays) if r.decoration is None)
    return DecorationReport(not violations, tuple(violations), undecorated)


# ---------------------------------------------------------------- Picard rank

def _dual_basis(fan):
    """Basis of functionals vanishing on the lineality."""
    if not fan.lineality:
        return [[Fraction(int(i == j)) for j in range(fan.ambient_dim)] for i in range(fan.ambient_dim)]
    return nullspace([list(v) for v in fan.lineality], fan.ambient_dim)


def classical_pic_rank(fan):
    """Rank of piecewise-linear functions on the fan modulo global linear ones."""
    k = fan.dim
    basis = _dual_basis(fan)
    rays = [r.direction for r in fan.rays]
    # pairing of basis functionals with each ray
    pair = [[sum(Fraction(b) * x for b, x in zip(brow, ray)) for brow in basis] for ray in rays]
    if not any(rank([pair[r] for r in cone]) == k for cone in fan.cones if cone):
        raise IncompleteFan("no full-dimensional maximal cone")
    nc = len(fan.cones)
    rows = []
    for s, t in combinations(range(nc), 2):
        shared = sorted(set(fan.cones[s]) & set(fan.cones[t]))
        if not shared or rank([pair[r] for r in shared]) != k - 1:
            continue
        for r in _independent_subset([pair[r] for r in shared]):
            row = [Fraction(0)] * (nc * k)
            for j in range(k):
                row[s * k + j] = r[j]
                row[t * k + j] = -r[j]
            rows.append(row)
    nullity = nc * k - rank(rows)
    pic = nullity - k
    if all(rank([pair[r] for r in cone]) == k for cone in fan.cones):
        lam = _lambda(fan, pair)
        formula = len(rays) - k - lam
        if formula != pic:
            raise InvariantFailure(f"piecewise-linear rank {pic} disagrees with r-n-lambda = {formula}")
    return pic


def _independent_subset(vectors):
    chosen = []
    for v in vectors:
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
    return chosen


def _lambda(fan, pair):
    """Dimension of the span of linear relations among rays of maximal cones."""
    nr = len(fan.rays)
    rel = []
    for cone in fan.cones:
        cols = [pair[r] for r in cone]
        # relations sum mu_r ray_r = 0 supported on the cone
        mat = [[cols[c][j] for c in range(len(cone))] for j in range(fan.dim)]
        for mu in nullspace(mat, len(cone)):
            full = [Fraction(0)] * nr
            for c, r in enumerate(cone):
                full[r] = mu[c]
            rel.append(full)
    return rank(rel) if rel else 0


# ---------------------------------------------------------------- completeness

def _in_cone(point, gens, lineality):
    """point in cone(gens) + span(lineality), decided exactly."""
    n = len(point)
    cols = [list(g) for g in gens] + [list(l) for l in lineality] + [[-x for x in l] for l in lineality]
    if not cols:
        return not any(point)
    a_eq = [[c[j] for c in cols] for j in range(n)]
    return linprog_eq(a_eq, list(point)).status == OPTIMAL


def sample_points(n, count=12, seed=0):
    rng = random.Random(seed)
    pts = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        pts.append(tuple(e))
        pts.append(tuple(-x for x in e))
    for _ in range(count):
        pts.append(tuple(rng.randint(-5, 5) for _ in range(n)))
    return pts


def is_complete(fan, points=None):
    """Check that every sample point lies in some maximal cone."""
    points = points or sample_points(fan.ambient_dim)
    for pt in points:
        if not any(_in_cone(pt, [fan.rays[k].direction for k in cone], fan.lineality) for cone in fan.cones):
            return False
    return True
