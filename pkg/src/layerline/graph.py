"""Immutable simple graphs and the generic algorithms run on them.

Vertices are dense integers ``0..order-1``.  Domain meaning (subsets,
group elements, edges of another graph) lives in the optional label table.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable, Sequence
from functools import cached_property

from .errors import Disconnected, OddCycle

__all__ = [
    "Graph",
    "bfs_distances",
    "is_connected",
    "diameter",
    "bipartition",
    "common_neighbors",
    "line_graph",
    "complete_graph",
    "cycle_graph",
    "petersen_graph",
]


class Graph:
    """Undirected simple graph with sorted adjacency rows.

    Construct with :meth:`from_edges` unless the adjacency rows are already
    canonical; the constructor checks symmetry, loop-freeness and strict
    ordering of every row.
    """

    def __init__(
        self,
        adjacency: Sequence[Sequence[int]],
        labels: Sequence[Hashable] | None = None,
    ) -> None:
        self.order = len(adjacency)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in adjacency)
        self.labels: tuple | None = None if labels is None else tuple(labels)
        if self.labels is not None and len(self.labels) != self.order:
            raise ValueError("label table length differs from vertex count")
        self._check()

    def _check(self) -> None:
        n = self.order
        for i, row in enumerate(self.adjacency):
            prev = -1
            for j in row:
                if not 0 <= j < n:
                    raise ValueError(f"neighbor {j} of {i} out of range")
                if j == i:
                    raise ValueError(f"self-loop at {i}")
                if j <= prev:
                    raise ValueError(f"row {i} not strictly ascending")
                prev = j
        for i, row in enumerate(self.adjacency):
            for j in row:
                if i not in self.neighbor_sets[j]:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ) -> Graph:
        rows: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls([sorted(r) for r in rows], labels)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order.

        The position of an edge in this tuple is its edge id.
        """
        return tuple((u, v) for u, row in enumerate(self.adjacency) for v in row if u < v)

    @cached_property
    def edge_ids(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def label(self, v: int) -> Hashable:
        return v if self.labels is None else self.labels[v]

    def relabeled(self, labels: Sequence[Hashable] | None) -> Graph:
        return Graph(self.adjacency, labels)

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [[index[w] for w in self.adjacency[v] if w in index] for v in keep]
        labels = None if self.labels is None else [self.labels[v] for v in keep]
        return Graph(rows, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def diameter(g: Graph) -> int:
    if g.order == 0:
        return 0
    best = 0
    for s in range(g.order):
        dist = bfs_distances(g, s)
        m = min(dist)
        if m < 0:
            raise Disconnected(f"vertex {dist.index(-1)} unreachable from {s}")
        best = max(best, max(dist))
    return best


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Two-colour a connected graph by BFS parity; part A contains vertex 0."""
    if g.order == 0:
        return frozenset(), frozenset()
    dist = bfs_distances(g, 0)
    if min(dist) < 0:
        raise Disconnected("bipartition needs a connected graph")
    for u, v in g.edges:
        if dist[u] % 2 == dist[v] % 2:
            raise OddCycle(f"edge ({u}, {v}) joins vertices of equal parity")
    part_a = frozenset(v for v in range(g.order) if dist[v] % 2 == 0)
    part_b = frozenset(v for v in range(g.order) if dist[v] % 2 == 1)
    return part_a, part_b


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    for x in (u, v):
        if not 0 <= x < g.order:
            raise IndexError(f"vertex {x} out of range for order {g.order}")
    return g.neighbor_sets[u] & g.neighbor_sets[v]


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of ``g`` and its edge table.

    Line-graph vertex ``i`` is edge ``g.edges[i]``.  When ``g`` carries labels,
    the line graph is labelled with endpoint label pairs.
    """
    edges = g.edges
    incident: list[list[int]] = [[] for _ in range(g.order)]
    for eid, (u, v) in enumerate(edges):
        incident[u].append(eid)
        incident[v].append(eid)
    rows: list[set[int]] = [set() for _ in edges]
    for inc in incident:
        for i, a in enumerate(inc):
            for b in inc[i + 1:]:
                rows[a].add(b)
                rows[b].add(a)
    labels = None
    if g.labels is not None:
        labels = [(g.labels[u], g.labels[v]) for u, v in edges]
    return Graph([sorted(r) for r in rows], labels), edges


def complete_graph(n: int) -> Graph:
    return Graph([[j for j in range(n) if j != i] for i in range(n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
