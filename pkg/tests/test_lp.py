import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distdom.graph import from_edges
from distdom.independence import Hypergraph
from distdom.instances import build_h_r, clique_hypergraph
from distdom.lp import (LinearProgram, bmatching_lp, ceil_ratio, domination_lp,
                        dump_lp, independence_lp, ratio, solve)

from conftest import graphs


def clique(n):
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_trivial_bounded_max():
    prog = LinearProgram("max", (1,), ((((0, 1),), "<=", 1),), ((0, None),))
    assert solve(prog).objective == 1


def test_single_vertex_cover():
    g = from_edges(1, [])
    assert solve(domination_lp(g, 1)).objective == 1


def test_triangle_hypergraph_fractional_matching(triangle_hypergraph):
    # symmetric optimum m_e = 1/2 gives 3/2
    assert solve(bmatching_lp(triangle_hypergraph, 1)).objective == ratio(3, 2)
    assert solve(bmatching_lp(triangle_hypergraph, 2)).objective == 3


def test_single_edge_matching():
    h = Hypergraph(1, ((0, frozenset({0})),))
    assert solve(bmatching_lp(h, 1)).objective == 1


def test_c5_domination(cycle5):
    assert solve(domination_lp(cycle5, 1)).objective == ratio(5, 3)
    assert solve(independence_lp(cycle5, 1)).objective == ratio(5, 3)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_clique_domination(n):
    assert solve(domination_lp(clique(n), 1)).objective == 1


def test_edgeless_independence():
    g = from_edges(6, [])
    assert solve(independence_lp(g, 2)).objective == 6


@pytest.mark.parametrize("n,r", [(4, 1), (4, 2), (5, 1)])
def test_clique_construction_lp_window(n, r):
    # n/2 from the half-weight packing on V(K_n); n/2 + 1 from the
    # apex-plus-edges cover
    g = build_h_r(clique_hypergraph(n), r).graph
    value = solve(domination_lp(g, r)).objective
    assert ratio(n, 2) <= value <= ratio(n, 2) + 1


def test_infeasible_status():
    prog = LinearProgram("max", (1,), ((((0, -1),), ">=", 1),), ((0, None),))
    assert solve(prog).status == "infeasible"
    assert solve(prog, "float").status == "infeasible"


def test_unbounded_status():
    prog = LinearProgram("max", (1,), ((((0, 1),), ">=", 0),), ((0, None),))
    assert solve(prog).status == "unbounded"


def test_float_mode_matches_exact(cycle5):
    exact = solve(domination_lp(cycle5, 1)).objective
    approx = solve(domination_lp(cycle5, 1), "float").objective
    assert abs(approx - float(exact)) <= 1e-6


@given(graphs(min_n=1, max_n=7), st.integers(1, 2))
@settings(max_examples=50, deadline=None)
def test_strong_duality(g, r):
    cover = solve(domination_lp(g, r))
    packing = solve(independence_lp(g, r))
    assert cover.status == packing.status == "optimal"
    assert cover.objective == packing.objective


@given(graphs(min_n=1, max_n=6), st.integers(1, 2))
@settings(max_examples=30, deadline=None)
def test_solutions_are_feasible(g, r):
    from distdom.graph import all_balls
    balls = all_balls(g, r)
    x = solve(domination_lp(g, r)).values
    y = solve(independence_lp(g, r)).values
    for v in range(g.n):
        assert sum(x[u] for u in balls[v]) >= 1
        assert sum(y[u] for u in balls[v]) <= 1
        assert x[v] >= 0 and y[v] >= 0


def test_kmatching_scaling_property(triangle_hypergraph):
    # m'_e = k*m_e on edges with m_e <= 1/k stays feasible at bound k
    h = triangle_hypergraph
    k = 2
    m = solve(bmatching_lp(h, 1)).values
    scaled = [k * v if v <= ratio(1, k) else 0 for v in m]
    counts = {}
    for (label, members), v in zip(h.edges, scaled):
        assert 0 <= v <= 1
        for w in members:
            counts[w] = counts.get(w, 0) + v
    assert all(c <= k for c in counts.values())


def test_ceil_ratio():
    assert ceil_ratio(ratio(5, 3)) == 2
    assert ceil_ratio(ratio(4, 2)) == 2
    assert ceil_ratio(1.2) == 2


def test_dedup_keeps_optimum():
    # all balls identical on a clique: one surviving row must not change
    # the optimum
    g = clique(4)
    prog = domination_lp(g, 1)
    assert len(prog.constraints) == 1
    assert solve(prog).objective == 1


def test_dump_lp(cycle5):
    text = dump_lp(domination_lp(cycle5, 1))
    assert text.splitlines()[0].startswith("min")
    assert ">= 1" in text


def test_rejects_malformed_programs():
    with pytest.raises(ValueError):
        LinearProgram("max", (1,), (((), "<=", 1),), ((0, None),))
    with pytest.raises(ValueError):
        LinearProgram("max", (1,), ((((3, 1),), "<=", 1),), ((0, None),))
    with pytest.raises(ValueError):
        solve(domination_lp(from_edges(1, []), 1), "nope")
