from math import comb

import pytest
from hypothesis import given, strategies as st

from layerline.errors import Disconnected, NotEulerian
from layerline.graph import Graph, complete_graph, cycle_graph, line_graph
from layerline.hamilton import euler_circuit, hamiltonian_cycle_of_line_graph, validate_cycle
from layerline.layers import build_b

ODD = [(5, 1), (7, 1), (7, 3), (9, 1), (9, 3), (11, 5)]


@pytest.mark.parametrize("n,k", ODD)
def test_layer_graphs(n, k):
    g = build_b(n, k)
    lg, cyc = hamiltonian_cycle_of_line_graph(g)
    assert len(cyc) == (n - k) * comb(n, k) == lg.order
    assert validate_cycle(lg, cyc)


def test_circuit_is_a_closed_trail():
    g = complete_graph(7)
    c = euler_circuit(g)
    assert sorted(c) == list(range(g.size))
    ends = [set(g.edges[e]) for e in c]
    assert all(ends[i] & ends[i - 1] for i in range(len(c)))
    assert 0 in ends[0]


def test_trail_walks_vertices_consistently():
    g = build_b(5, 1)
    c = euler_circuit(g)
    u, v = g.edges[c[0]]
    at = v if u == 0 else u
    for e in c[1:]:
        a, b = g.edges[e]
        assert at in (a, b)
        at = b if a == at else a
    assert at == 0


@pytest.mark.parametrize("n,k", [(4, 1), (6, 2), (5, 2), (8, 3)])
def test_not_eulerian(n, k):
    with pytest.raises(NotEulerian):
        euler_circuit(build_b(n, k))


def test_disconnected():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(Disconnected):
        euler_circuit(g)


def test_validate_cycle_rejects():
    c6 = cycle_graph(6)
    assert validate_cycle(c6, [0, 1, 2, 3, 4, 5])
    assert not validate_cycle(c6, [0, 2, 1, 3, 4, 5])
    assert not validate_cycle(c6, [0, 1, 2, 3, 4])
    assert not validate_cycle(c6, [0, 1, 2, 3, 4, 4])


@given(st.integers(3, 9).filter(lambda n: n % 2))
def test_complete_graphs(n):
    lg, cyc = hamiltonian_cycle_of_line_graph(complete_graph(n))
    assert validate_cycle(lg, cyc) and lg == line_graph(complete_graph(n))[0]
