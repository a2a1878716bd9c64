import itertools
import random
from fractions import Fraction

import pytest

from superpic.catalog import CATALOG
from superpic.cocycle import (ansatz_assignment, build_system, build_system_from_faces,
                              fundamental_cycles, reduce_square, same_truncated_ideal,
                              solve_even, solve_even_report, solve_pi, substitute_assignment,
                              system_generators, tautological_power, truncated_ideal_contains,
                              verify_cocycle)
from superpic.errors import InvalidDirections, ModeMismatch, NotAUnit
from superpic.polytope import LatticePolytope, hypersimplex, skeleton
from superpic.superalg import Poly, SuperElement, canonical_unit_power, substitute

from pentagon_reference import pentagon_dictionary, pentagon_reference_equations

P = {name: e.polytope for name, e in CATALOG.items()}
v = Poly.var


def residual_text(sol):
    return [str(r) for r in sol.residual]


# ---------------------------------------------------------------- build_system

def test_triangle_pi_system():
    sol = solve_pi(build_system(P["triangle"], "pi"))
    assert sol.free == ("l1", "c1")
    assert sol.substitutions["l2"] == v("l1") and sol.substitutions["l3"] == v("l1")
    assert sol.substitutions["c2"] == v("c1") and sol.substitutions["c3"] == v("c1")
    assert residual_text(sol) == ["c1^2 - l1"]


TWO_TRIANGLES = ((1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 1, 0), (1, 0, 0, 1))


def test_two_triangles_force_trivial():
    sys_ = build_system_from_faces(TWO_TRIANGLES, [(0, 1, 2), (0, 1, 3)], "pi")
    assert len(sys_.edges) == 5
    sol = solve_pi(sys_)
    assert sol.is_trivial
    assert set(sol.forced_zero) == set(sys_.order)


def test_single_triangle_alone_is_not_trivial():
    sol = solve_pi(build_system_from_faces(TWO_TRIANGLES, [(0, 1, 2)], "pi"))
    # the sign of l1 depends on which way edge 1 points around the triangle
    assert residual_text(sol) in (["c1^2 - l1"], ["c1^2 + l1"])
    assert sol.lattice_rank == 1


def test_square_even_opposite_edges():
    sys_ = build_system(P["square"], "even")
    assert sys_.polynomial_part == []
    sol = solve_even_report(sys_)
    # edges: (0,1) x2, (0,2) x1, (1,3) x1, (2,3) x2
    assert sol.substitutions == {"l4": v("l1"), "l3": v("l2")}
    assert sol.lattice_rank == 2


# ---------------------------------------------------------------- solve_even

@pytest.mark.parametrize("name,rank", [("cube", 3), ("pentagon", 2), ("hypersimplex-2-4", 0),
                                       ("prism", 1), ("segment", 1), ("triangle", 0)])
def test_solve_even(name, rank):
    assert solve_even(build_system(P[name], "even")) == rank


def test_pentagon_slanted_edge_forced_zero():
    sys_ = build_system(P["pentagon"], "even")
    slanted = next(k for k, e in enumerate(sys_.edges) if e.direction == (1, -1))
    sol = solve_even_report(sys_)
    assert f"l{slanted + 1}" in sol.forced_zero


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        solve_even(build_system(P["triangle"], "pi"))
    with pytest.raises(ModeMismatch):
        solve_pi(build_system(P["triangle"], "even"))
    with pytest.raises(ModeMismatch):
        build_system(P["triangle"], "odd")


def test_invalid_directions():
    with pytest.raises(InvalidDirections):
        build_system(LatticePolytope(2, ((0, 0), (1, 0), (1, 2))), "even")


# ---------------------------------------------------------------- solve_pi

def test_prism_pi():
    sol = solve_pi(build_system(P["prism"], "pi"))
    assert sol.lattice_rank == 2
    assert residual_text(sol) == ["c1*c2", "c2^2 - l2"]


def test_cube_pi_at_most_one_c():
    sol = solve_pi(build_system(P["cube-qgr"], "pi"))
    assert residual_text(sol) == ["c1*c2", "c1*c3", "c2*c3"]


@pytest.mark.parametrize("name", ["hypersimplex-2-4", "hypersimplex-2-5"])
def test_hypersimplex_pi_trivial(name):
    assert solve_pi(build_system(P[name], "pi")).is_trivial


@pytest.mark.parametrize("n", [2, 3, 4])
def test_simplex_single_shared_pair(n):
    sol = solve_pi(build_system(hypersimplex(1, n + 1), "pi"))
    assert sol.free == ("l1", "c1")
    assert residual_text(sol) == ["c1^2 - l1"]
    assert all(s in (v("l1"), v("c1")) for s in sol.substitutions.values())


def test_pentagon_matches_reference_system():
    sys_ = build_system(P["pentagon"], "pi")
    ours = system_generators(sys_)
    assert same_truncated_ideal(ours, pentagon_reference_equations(sys_), degree=2)
    # the check is not vacuous: a sign change in the quadratic breaks it
    assert not same_truncated_ideal(ours, pentagon_reference_equations(sys_, rhs_sign=-1), degree=2)


def test_pentagon_surface():
    sys_ = build_system(P["pentagon"], "pi")
    (l1, l2, l3, l4), (c1, c2, c3, c4), _, _ = pentagon_dictionary(sys_)
    gens = system_generators(sys_) + [l1 + l3, l2 + l4]
    surface = (c1 + c3) ** 2 + 2 * c2 * c3
    assert truncated_ideal_contains(gens, [surface], degree=2)


def test_pentagon_residual_shape():
    sol = solve_pi(build_system(P["pentagon"], "pi"))
    assert sol.lattice_rank == 3
    assert len(sol.residual) == 1 and sol.residual[0].degree() == 2


# ---------------------------------------------------------------- invariants

def flip_signs(sol, flipped):
    subs = {}
    for k in flipped:
        subs[f"l{k + 1}"] = -v(f"l{k + 1}")
        subs[f"c{k + 1}"] = -v(f"c{k + 1}")
    return sorted(str(r.substitute(subs).normalized()) for r in sol.residual)


@pytest.mark.parametrize("name", ["pentagon", "prism", "triangle", "cube-qgr", "hypersimplex-2-4"])
@pytest.mark.parametrize("flip", [(0,), (0, 2), (1, 3, 4)])
def test_orientation_independence(name, flip):
    base = solve_pi(build_system(P[name], "pi"))
    other = solve_pi(build_system(P[name], "pi", flip=flip))
    assert base.lattice_rank == other.lattice_rank
    assert base.free == other.free and base.forced_zero == other.forced_zero
    assert flip_signs(base, flip) == sorted(str(r) for r in other.residual)
    even_a = solve_even(build_system(P[name], "even"))
    even_b = solve_even(build_system(P[name], "even", flip=flip))
    assert even_a == even_b


@pytest.mark.parametrize("name", ["pentagon", "prism", "cube", "hypersimplex-2-4", "simplex-4"])
def test_two_faces_suffice(name):
    p = P[name]
    cycles = fundamental_cycles(p)
    assert len(cycles) == len(skeleton(p).edges) - p.num_vertices + 1
    for mode in ("even", "pi"):
        a = build_system(p, mode)
        b = build_system(p, mode, extra_cycles=cycles)
        sa = solve_pi(a) if mode == "pi" else solve_even_report(a)
        sb = solve_pi(b) if mode == "pi" else solve_even_report(b)
        assert (sa.lattice_rank, sa.free, sa.forced_zero, sa.residual) == \
               (sb.lattice_rank, sb.free, sb.forced_zero, sb.residual)


def concrete_solutions(sys_, sol, tries=300, seed=0):
    rng = random.Random(seed)
    seen = []
    for _ in range(tries):
        vals = {n: rng.choice([-2, -1, 0, 0, 1, 2]) for n in sol.free}
        if any(r.substitute(vals).constant_term() != 0 for r in sol.residual):
            continue
        full = dict(vals)
        for name, expr in sol.substitutions.items():
            full[name] = expr.substitute(vals).constant_term()
        seen.append(full)
    return seen


@pytest.mark.parametrize("name", ["pentagon", "prism", "triangle", "cube-qgr", "square", "simplex-4"])
def test_reduction_soundness(name):
    p = P[name]
    sys_ = build_system(p, "pi")
    sol = solve_pi(sys_)
    sols = concrete_solutions(sys_, sol)
    assert sols
    symbolic = ansatz_assignment(sys_.edges)
    for values in sols[:15]:
        assert verify_cocycle(p, substitute_assignment(symbolic, values))


def test_non_solution_fails():
    p = P["prism"]
    sys_ = build_system(p, "pi")
    values = {n: 1 for n in sys_.order}
    assert not verify_cocycle(p, substitute_assignment(ansatz_assignment(sys_.edges), values))


# ---------------------------------------------------------------- verify_cocycle

def test_verify_all_ones():
    p = P["cube"]
    assert verify_cocycle(p, {e: SuperElement.one() for e in skeleton(p).edges})


def test_verify_cube_axis_class():
    p = P["cube"]
    sk = skeleton(p)
    assign = {}
    for a, b in sk.edges:
        if sk.direction_of[(a, b)] == (1, 0, 0):
            tail, head = (a, b) if p.vertices[a][0] == 0 else (b, a)
            assign[(tail, head)] = SuperElement.t(1)
        else:
            assign[(a, b)] = SuperElement.one()
    assert verify_cocycle(p, assign)


def test_verify_triangle_canonical_units_fail():
    p = P["triangle"]
    assign = {}
    for e in build_system(p, "even").edges:
        assign[(e.tail, e.head)] = canonical_unit_power(e.direction, 1)
    assert not verify_cocycle(p, assign)


def test_verify_requires_units():
    p = P["square"]
    assign = {e: SuperElement.one() for e in skeleton(p).edges}
    assign[skeleton(p).edges[0]] = SuperElement.xi(1)
    with pytest.raises(NotAUnit):
        verify_cocycle(p, assign)


def test_verify_requires_all_edges():
    p = P["square"]
    with pytest.raises(NotAUnit):
        verify_cocycle(p, {skeleton(p).edges[0]: SuperElement.one()})


# ---------------------------------------------------------------- tautological sheaves

@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("ell", range(-4, 5))
def test_tautological_power_modulo_relation(n, ell):
    simplex, edges = tautological_power(n, ell)
    assign = ansatz_assignment(edges)
    assert verify_cocycle(simplex, assign, reduce=reduce_square("c", ell))


def test_tautological_needs_relation():
    simplex, edges = tautological_power(2, 1)
    assert not verify_cocycle(simplex, ansatz_assignment(edges))


def test_tautological_zero():
    simplex, edges = tautological_power(2, 0)
    assign = substitute_assignment(ansatz_assignment(edges), {"c": 0})
    assert all(f == SuperElement.one() for f in assign.values())
    assert verify_cocycle(simplex, assign)


@pytest.mark.parametrize("ell,c", [(4, 2), (4, -2), (1, 1), (1, -1), (0, 0)])
def test_tautological_concrete_roots(ell, c):
    simplex, edges = tautological_power(2, ell)
    assert verify_cocycle(simplex, substitute_assignment(ansatz_assignment(edges), {"c": c}))


def test_tautological_wrong_root_fails():
    simplex, edges = tautological_power(2, 4)
    assert not verify_cocycle(simplex, substitute_assignment(ansatz_assignment(edges), {"c": 3}))


def test_report_json():
    data = solve_pi(build_system(P["triangle"], "pi")).to_json()
    assert data["lattice_rank"] == 1
    assert data["residual"] == ["c1^2 - l1"]
    assert data["lattice_basis"] == [{"l1": 1, "l2": 1, "l3": 1}]
