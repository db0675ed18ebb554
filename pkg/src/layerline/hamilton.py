"""Euler circuits and the Hamiltonian cycles they induce in line graphs."""

from __future__ import annotations

from collections.abc import Sequence

from .errors import Disconnected, NotEulerian
from .graph import Graph, is_connected, line_graph

__all__ = ["euler_circuit", "hamiltonian_cycle_of_line_graph", "validate_cycle"]


def euler_circuit(g: Graph) -> list[int]:
    """Closed trail through every edge once, as a cyclic list of edge ids.

    Hierholzer's algorithm from vertex 0, always leaving along the unused
    incident edge of lowest id.  Edge ids index ``g.edges``.
    """
    for v in range(g.order):
        if g.degree(v) % 2:
            raise NotEulerian(f"vertex {v} has odd degree {g.degree(v)}")
    if not is_connected(g):
        raise Disconnected("an Euler circuit needs a connected graph")
    if g.size == 0:
        return []
    incident: list[list[int]] = [[] for _ in range(g.order)]
    for eid, (u, v) in enumerate(g.edges):
        incident[u].append(eid)
        incident[v].append(eid)
    edges = g.edges
    used = [False] * len(edges)
    ptr = [0] * g.order
    stack: list[tuple[int, int]] = [(0, -1)]  # (vertex, edge used to arrive)
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        inc = incident[v]
        while ptr[v] < len(inc) and used[inc[ptr[v]]]:
            ptr[v] += 1
        if ptr[v] == len(inc):
            stack.pop()
            if via >= 0:
                circuit.append(via)
            continue
        eid = inc[ptr[v]]
        used[eid] = True
        a, b = edges[eid]
        stack.append((b if a == v else a, eid))
    circuit.reverse()
    if len(circuit) != len(edges):
        raise AssertionError("Hierholzer left edges unused")
    return circuit


def hamiltonian_cycle_of_line_graph(g: Graph) -> tuple[Graph, list[int]]:
    """The line graph L(g) and a Hamiltonian cycle in it read off an Euler circuit.

    Line-graph vertex i is edge i of ``g``, so the circuit's edge sequence is
    already a vertex sequence of L(g).
    """
    circuit = euler_circuit(g)
    lg, _ = line_graph(g)
    if not validate_cycle(lg, circuit):
        raise AssertionError("Euler circuit did not give a Hamiltonian cycle")
    return lg, circuit


def validate_cycle(L: Graph, cycle: Sequence[int]) -> bool:
    """Every vertex exactly once and cyclically consecutive vertices adjacent."""
    if len(cycle) != L.order or sorted(cycle) != list(range(L.order)):
        return False
    if L.order < 3:
        return False
    nbrs = L.neighbor_sets
    return all(cycle[i] in nbrs[cycle[i - 1]] for i in range(len(cycle)))
