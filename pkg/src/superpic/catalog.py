"""Named example polytopes with the reports they are expected to produce."""

from dataclasses import dataclass
from typing import Optional

from .polytope import LatticePolytope, hypersimplex, product


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    polytope: LatticePolytope
    expected_pic: Optional[int] = None
    expected_pi: Optional[dict] = None    # subset of the PiPicReport JSON


def _named(p, name):
    return LatticePolytope(p.ambient_dim, p.vertices, p.kind, p.r, name)


def _entries():
    seg = hypersimplex(1, 2)
    tri = hypersimplex(1, 3)
    yield CatalogEntry("segment", _named(seg, "segment"), 1,
                       {"structure": "full_Z_plus_C", "simplex_factors": [1]})
    yield CatalogEntry("triangle", _named(tri, "triangle"), 0,
                       {"structure": "constrained", "simplex_factors": [2]})
    yield CatalogEntry("square", LatticePolytope(2, ((0, 0), (1, 0), (0, 1), (1, 1)), name="square"), 2,
                       {"structure": "constrained", "simplex_factors": [1, 1]})
    yield CatalogEntry("cube", LatticePolytope(
        3, tuple((a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)), name="cube"), 3,
        {"structure": "constrained", "simplex_factors": [1, 1, 1]})
    yield CatalogEntry("cube-qgr", product(product(seg, seg), seg, "cube-qgr"), 3,
                       {"structure": "constrained", "simplex_factors": [1, 1, 1]})
    yield CatalogEntry("prism", product(tri, seg, "prism"), 1,
                       {"structure": "constrained", "simplex_factors": [2, 1]})
    yield CatalogEntry("pentagon", LatticePolytope(
        2, ((0, 0), (2, 0), (2, 1), (1, 2), (0, 2)), name="pentagon"), 2,
        {"structure": "constrained", "simplex_factors": []})
    for r, n in ((2, 4), (2, 5), (3, 6)):
        yield CatalogEntry(f"hypersimplex-{r}-{n}", hypersimplex(r, n), 0,
                           {"structure": "trivial", "simplex_factors": []})
    for n in range(1, 7):
        if n == 1:
            pi = {"structure": "trivial", "simplex_factors": []}
        elif n == 2:
            pi = {"structure": "full_Z_plus_C", "simplex_factors": [1]}
        else:
            pi = {"structure": "constrained", "simplex_factors": [n - 1]}
        yield CatalogEntry(f"simplex-{n}", _named(hypersimplex(1, n), f"simplex-{n}"),
                           1 if n == 2 else 0, pi)


CATALOG = {e.name: e for e in _entries()}


def get(name):
    return CATALOG[name]


def names():
    return sorted(CATALOG)
