"""Exact automorphism groups by individualization and colour refinement.

The search builds a stabilizer chain directly.  For base points b1, b2, ...
level i records, for every vertex c in the orbit of b_i under the pointwise
stabilizer of b1..b_{i-1}, one automorphism fixing that prefix and sending
b_i to c.  The group order is the product of the orbit lengths and every
element factors uniquely as t1 * t2 * ... * tr with t_i from level i.
"""

from __future__ import annotations

import os
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import product
from math import prod

from .errors import SearchBudgetExceeded
from .graph import Graph
from .perms import Permutation, closure

__all__ = [
    "AutomorphismGroup",
    "SearchStats",
    "automorphism_group",
    "default_budget",
    "refine",
    "BUDGET_ENV",
    "DEFAULT_SEARCH_BUDGET",
    "MAX_SEARCH_VERTICES",
]

BUDGET_ENV = "LAYERLINE_SEARCH_BUDGET"
DEFAULT_SEARCH_BUDGET = 10**8
MAX_SEARCH_VERTICES = 2000

Coloring = list[int]
Trace = tuple


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_SEARCH_BUDGET


def refine(adj: tuple[tuple[int, ...], ...], colors: Coloring) -> tuple[Coloring, Trace]:
    """Coarsest equitable refinement of ``colors``.

    New colour ids are ranks of (old colour, sorted neighbour colours)
    signatures, so two colourings related by an automorphism refine to
    colourings related by the same automorphism, with equal traces.
    """
    ncol = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted([colors[w] for w in row]))) for v, row in enumerate(adj)]
        counted = sorted(Counter(sigs).items())
        rank = {s: i for i, (s, _) in enumerate(counted)}
        trace.append(tuple(counted))
        colors = [rank[s] for s in sigs]
        if len(counted) == ncol:
            return colors, tuple(trace)
        ncol = len(counted)


def _individualize(colors: Coloring, v: int) -> Coloring:
    out = list(colors)
    out[v] = max(colors) + 1
    return out


def _target_cell(colors: Coloring) -> list[int] | None:
    """Vertices of the lowest-numbered colour class with more than one member."""
    sizes = Counter(colors)
    big = [c for c, s in sizes.items() if s > 1]
    if not big:
        return None
    c = min(big)
    return [v for v, x in enumerate(colors) if x == c]


@dataclass
class SearchStats:
    nodes: int = 0
    budget: int = DEFAULT_SEARCH_BUDGET

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"automorphism search exceeded {self.budget} nodes")


class _Searcher:
    def __init__(self, g: Graph, stats: SearchStats) -> None:
        self.g = g
        self.adj = g.adjacency
        self.nbrs = g.neighbor_sets
        self.stats = stats

    def is_aut(self, images: tuple[int, ...]) -> bool:
        nbrs = self.nbrs
        return all(images[v] in nbrs[images[u]] for u, v in self.g.edges)

    def extend(self, left: Coloring, right: Coloring) -> tuple[int, ...] | None:
        """An automorphism carrying colour classes of ``left`` onto those of ``right``."""
        self.stats.tick()
        cell = _target_cell(left)
        if cell is None:
            where = [0] * len(right)
            for v, c in enumerate(right):
                where[c] = v
            images = tuple(where[c] for c in left)
            return images if self.is_aut(images) else None
        x = cell[0]
        c = left[x]
        left2, trace = refine(self.adj, _individualize(left, x))
        for y in (v for v, col in enumerate(right) if col == c):
            right2, trace_r = refine(self.adj, _individualize(right, y))
            if trace_r != trace:
                self.stats.tick()
                continue
            found = self.extend(left2, right2)
            if found is not None:
                return found
        return None


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """a * b: apply b first."""
    return tuple([a[i] for i in b])


@dataclass
class AutomorphismGroup:
    """Automorphism group of a graph, stored as a stabilizer chain."""

    degree: int
    base: list[int]
    transversals: list[dict[int, tuple[int, ...]]]
    generators: list[Permutation]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def orbit_of_base_point(self) -> list[int]:
        if not self.transversals:
            return [0] if self.degree else []
        return sorted(self.transversals[0])

    def is_transitive(self) -> bool:
        return len(self.orbit_of_base_point()) == self.degree

    def _raw_elements(self, start: int = 0) -> Iterator[tuple[int, ...]]:
        levels = [list(t.values()) for t in self.transversals[start:]]
        ident = tuple(range(self.degree))
        for combo in product(*levels):
            x = ident
            for t in reversed(combo):
                x = _compose(t, x)
            yield x

    def elements(self) -> Iterator[Permutation]:
        for x in self._raw_elements():
            yield Permutation(x)

    def stabilizer_elements(self) -> Iterator[Permutation]:
        """Elements fixing the first base point."""
        for x in self._raw_elements(1):
            yield Permutation(x)

    def coset_representative(self, v: int) -> Permutation:
        """Some element sending the first base point to ``v``."""
        return Permutation(self.transversals[0][v])

    def verify_by_closure(self, budget: int = 2_000_000) -> bool:
        """Enumerate the group generated by ``generators`` and compare orders."""
        if not self.generators:
            return self.order == 1
        return len(closure(self.generators, budget=budget)) == self.order


def automorphism_group(
    g: Graph,
    budget: int | None = None,
    max_vertices: int = MAX_SEARCH_VERTICES,
) -> AutomorphismGroup:
    """Exact automorphism group of ``g``.

    Raises :class:`SearchBudgetExceeded` when ``g`` has more than
    ``max_vertices`` vertices or the search visits more than ``budget`` nodes
    (default from ``$LAYERLINE_SEARCH_BUDGET`` or 10^8).
    """
    if g.order > max_vertices:
        raise SearchBudgetExceeded(f"{g.order} vertices exceeds the search bound {max_vertices}")
    stats = SearchStats(budget=default_budget() if budget is None else budget)
    n = g.order
    if n == 0:
        return AutomorphismGroup(0, [], [], [], stats)
    search = _Searcher(g, stats)
    current, _ = refine(g.adjacency, [0] * n)
    base: list[int] = []
    transversals: list[dict[int, tuple[int, ...]]] = []
    generators: list[Permutation] = []
    ident = tuple(range(n))
    while True:
        cell = _target_cell(current)
        if cell is None:
            break
        b = cell[0]
        left, trace = refine(g.adjacency, _individualize(current, b))
        transversal = {b: ident}
        level_gens: list[tuple[int, ...]] = []
        failed: set[int] = set()
        for c in cell[1:]:
            if c in transversal or c in failed:
                continue
            right, trace_r = refine(g.adjacency, _individualize(current, c))
            found = search.extend(left, right) if trace_r == trace else None
            if found is None:
                # no element of the prefix stabilizer reaches c, nor any image of c
                failed |= _orbit(c, level_gens)
                continue
            level_gens.append(found)
            generators.append(Permutation(found))
            _grow_transversal(transversal, level_gens)
        base.append(b)
        transversals.append(transversal)
        current = left
    return AutomorphismGroup(n, base, transversals, generators, stats)


def _orbit(x: int, gens: list[tuple[int, ...]]) -> set[int]:
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for s in gens:
            z = s[y]
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def _grow_transversal(transversal: dict[int, tuple[int, ...]], gens: list[tuple[int, ...]]) -> None:
    stack = list(transversal)
    while stack:
        p = stack.pop()
        tp = transversal[p]
        for s in gens:
            q = s[p]
            if q not in transversal:
                transversal[q] = _compose(s, tp)
                stack.append(q)
