import random
from fractions import Fraction
from itertools import combinations

import pytest

from monopack.graph import BLUE, RED, ColoredGraph
from monopack.lp import (
    WarmStartError,
    certified_exceeds,
    frac_decomposition,
    integer_nu,
    nu_star,
    pack,
    prescribed_packing,
    rationalize,
    triangle_edges,
)

F = Fraction


def random_graph(rng, n):
    return ColoredGraph(n, "".join(rng.choice("RB") for _ in range(n * (n - 1) // 2)))


def test_nu_star_k4_all_red():
    g = ColoredGraph.monochromatic(4)
    res = nu_star(g, RED)
    assert res.optimal and res.primal_value == 2
    # the optimum is the uniform vertex: every triangle at weight 1/2
    res.packing.check_feasible(g)
    res.cover.check_feasible(g)
    assert nu_star(g, BLUE).primal_value == 0


def test_nu_star_k5_and_k7():
    assert nu_star(ColoredGraph.monochromatic(5), RED).primal_value == F(10, 3)
    assert nu_star(ColoredGraph.monochromatic(7), RED).primal_value == 7


def test_pack_values():
    assert pack(ColoredGraph.monochromatic(5)).value == 10
    # blue = K_{3,3}: no blue triangle, red = two disjoint K_3
    g = ColoredGraph.from_red_edges(
        6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    )
    assert pack(g).value == 6


def test_pentagon_coloring_packs_to_zero():
    red = [(i, (i + 1) % 5) for i in range(5)]
    g = ColoredGraph.from_red_edges(5, red)
    assert pack(g).value == 0


def test_exact_and_float_paths_agree():
    rng = random.Random(5)
    for _ in range(25):
        g = random_graph(rng, rng.randint(4, 7))
        for c in (RED, BLUE):
            fast = nu_star(g, c)
            slow = nu_star(g, c, exact_only=True)
            assert fast.primal_value == slow.primal_value
            assert fast.primal_value == fast.dual_value
            fast.packing.check_feasible(g)
            fast.cover.check_feasible(g)


def test_partial_colouring_uses_assigned_part_only():
    g = ColoredGraph.monochromatic(3).add_vertex()
    assert nu_star(g, RED).primal_value == 1
    g = g.set_edge(0, 3, RED).set_edge(1, 3, RED)
    assert nu_star(g, RED).primal_value == 1
    g = g.set_edge(2, 3, RED)
    assert nu_star(g, RED).primal_value == 2


def test_warm_start_values_match_cold():
    rng = random.Random(7)
    for _ in range(15):
        g = random_graph(rng, 6)
        h = g.add_vertex()
        warm = nu_star(g, RED).packing
        edges = [(v, 6) for v in range(6)]
        for v, u in edges:
            h = h.set_edge(v, u, rng.choice("RB"))
        warm_res = nu_star(h, RED, warm=warm)
        cold_res = nu_star(h, RED)
        assert warm_res.primal_value == cold_res.primal_value


def test_warm_start_rejects_infeasible():
    g = ColoredGraph.monochromatic(4)
    from monopack.lp import FractionalPacking

    bad = FractionalPacking(RED, {(0, 1, 2): F(2)})
    with pytest.raises(WarmStartError):
        nu_star(g, RED, warm=bad)
    wrong_color = FractionalPacking(BLUE, {})
    with pytest.raises(WarmStartError):
        nu_star(g, RED, warm=wrong_color)


def test_rationalize_repairs_to_feasibility():
    g = ColoredGraph.monochromatic(4)
    tris = g.monochromatic_triangles(RED)
    noisy = {t: 0.51 for t in tris}  # overloads every edge
    noisy[(9, 9, 9)] = 1.0  # not a triangle of g; must be dropped
    p = rationalize(noisy, g, RED)
    p.check_feasible(g)
    exact = {t: F(1, 2) for t in tris}
    assert rationalize(exact, g, RED).weights == exact


def test_certified_exceeds_is_strict_and_sound():
    g = ColoredGraph.monochromatic(3)
    assert certified_exceeds(g, F(3)) is None  # pack = 3, not > 3
    cert = certified_exceeds(g, F(5, 2))
    assert cert is not None
    cert.check(g)
    assert certified_exceeds(ColoredGraph.monochromatic(4), F(100)) is None


def test_frac_decomposition_k7():
    edges = list(combinations(range(7), 2))
    packing, farkas = frac_decomposition(7, edges)
    assert farkas is None
    loads = packing.edge_loads()
    assert all(loads[e] == 1 for e in edges)


def test_frac_decomposition_k6_minus_edges_fails_with_farkas():
    edges = [e for e in combinations(range(6), 2) if e not in {(0, 1), (2, 3)}]
    packing, farkas = frac_decomposition(6, edges)
    assert packing is None
    triangles = [
        t
        for t in combinations(range(6), 3)
        if all(e in edges for e in triangle_edges(t))
    ]
    for t in triangles:
        assert sum(farkas[e] for e in triangle_edges(t)) >= 0
    assert sum(farkas.values()) < 0


def test_frac_decomposition_edge_in_no_triangle():
    packing, farkas = frac_decomposition(4, [(0, 1), (2, 3)])
    assert packing is None and farkas is not None


def test_prescribed_packing_roundtrip():
    # uniform K4 decomposition demand: every edge exactly 1
    demand = {e: F(1) for e in combinations(range(4), 2)}
    packing, farkas = prescribed_packing(4, demand)
    assert farkas is None
    assert all(v == 1 for v in packing.edge_loads().values())
    # an isolated demanded edge is unreachable
    packing, farkas = prescribed_packing(4, {(0, 1): F(1, 2)})
    assert packing is None


def test_integer_nu_oracle_values():
    assert integer_nu(4, combinations(range(4), 2)) == 1
    assert integer_nu(7, combinations(range(7), 2)) == 7
    assert integer_nu(3, [(0, 1)]) == 0
    with pytest.raises(ValueError):
        integer_nu(10, [])


def test_integer_at_most_fractional_small_random():
    rng = random.Random(2)
    for _ in range(30):
        g = random_graph(rng, rng.randint(4, 6))
        for c in (RED, BLUE):
            nu = integer_nu(g.n, g.edges_of_color(c))
            assert nu <= nu_star(g, c).primal_value
