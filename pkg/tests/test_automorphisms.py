from math import factorial

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import GRID
from layerline.automorphisms import BUDGET_ENV, automorphism_group, default_budget, refine
from layerline.errors import SearchBudgetExceeded
from layerline.graph import Graph, complete_graph, cycle_graph, petersen_graph
from layerline.layers import build_b, build_line_b
from layerline.perms import is_automorphism, orbit


def brute_force_count(g: Graph) -> int:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())


def predicted(n, k):
    return 2 * factorial(n) if n == 2 * k + 1 else factorial(n)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@pytest.mark.parametrize(
    "g",
    [complete_graph(5), cycle_graph(7), petersen_graph(), build_b(4, 1), build_b(5, 2), build_line_b(4, 1)[0]],
    ids=["K5", "C7", "petersen", "B41", "B52", "LB41"],
)
def test_order_matches_vf2_count(g):
    aut = automorphism_group(g)
    assert aut.order == brute_force_count(g)
    assert aut.verify_by_closure()


@given(small_graphs())
def test_random_graphs_match_vf2(g):
    aut = automorphism_group(g)
    assert aut.order == brute_force_count(g)
    assert all(is_automorphism(g, p) for p in aut.generators)


@pytest.mark.parametrize("n,k", GRID)
def test_layer_graph_orders(n, k):
    aut = automorphism_group(build_b(n, k))
    assert aut.order == predicted(n, k)


@pytest.mark.parametrize("n,k", [(n, k) for n, k in GRID if (n - k) * (n * (n - 1)) < 3000])
def test_line_graph_orders(n, k):
    aut = automorphism_group(build_line_b(n, k)[0])
    assert aut.order == predicted(n, k)


def test_elements_are_distinct_automorphisms():
    g = build_b(5, 2)
    aut = automorphism_group(g)
    els = list(aut.elements())
    assert len({p.images for p in els}) == aut.order == 240
    assert all(is_automorphism(g, p) for p in els[::7])
    stab = list(aut.stabilizer_elements())
    assert all(p(aut.base[0]) == aut.base[0] for p in stab)
    assert len(stab) * len(aut.orbit_of_base_point()) == aut.order
    v = aut.orbit_of_base_point()[-1]
    assert aut.coset_representative(v)(aut.base[0]) == v


@pytest.mark.parametrize("n,k", [(4, 1), (5, 2), (6, 2), (7, 3)])
def test_edge_and_line_vertex_transitivity(n, k):
    g = build_b(n, k)
    aut = automorphism_group(g)
    maps = [lambda e, p=p: tuple(sorted((p(e[0]), p(e[1])))) for p in aut.generators]
    assert len(orbit(g.edges[0], maps)) == g.size
    lg, _ = build_line_b(n, k)
    assert automorphism_group(lg).is_transitive()


def test_layer_graph_not_vertex_transitive_off_middle():
    assert not automorphism_group(build_b(6, 2)).is_transitive()
    assert automorphism_group(build_b(7, 3)).is_transitive()


def test_refine_equitable_on_regular_graph():
    colors, _ = refine(petersen_graph().adjacency, [0] * 10)
    assert set(colors) == {0}


def test_budget():
    with pytest.raises(SearchBudgetExceeded):
        automorphism_group(build_b(6, 2), budget=3)
    with pytest.raises(SearchBudgetExceeded):
        automorphism_group(cycle_graph(50), max_vertices=10)


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "1234")
    assert default_budget() == 1234
    monkeypatch.delenv(BUDGET_ENV)
    assert default_budget() == 10**8
