"""Hypercubes, Boolean-lattice layers and the layer graphs B(n, k).

A subset of ``[n] = {1, ..., n}`` is stored as an n-bit mask with bit ``i``
set when ``i + 1`` belongs to the subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import ParamsOutOfRange
from .graph import Graph, line_graph

__all__ = [
    "SubsetVertex",
    "LayerParams",
    "LayerCounts",
    "BinomialMod4Result",
    "layer_masks",
    "build_b",
    "build_line_b",
    "build_hypercube",
    "chi",
    "counts",
    "middle_binomial_mod4",
    "is_power_of_two",
]

MAX_N = 63


@dataclass(frozen=True, order=True)
class SubsetVertex:
    mask: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.mask < (1 << self.n):
            raise ParamsOutOfRange(f"mask {self.mask:#x} does not fit in {self.n} bits")

    @classmethod
    def of(cls, elements, n: int) -> SubsetVertex:
        mask = 0
        for x in elements:
            if not 1 <= x <= n:
                raise ParamsOutOfRange(f"element {x} outside [1, {n}]")
            mask |= 1 << (x - 1)
        return cls(mask, n)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def complement(self) -> SubsetVertex:
        return SubsetVertex(((1 << self.n) - 1) ^ self.mask, self.n)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class LayerParams:
    n: int
    k: int

    def __post_init__(self) -> None:
        if not 4 <= self.n <= MAX_N:
            raise ParamsOutOfRange(f"n={self.n} outside [4, {MAX_N}]")
        if not (1 <= self.k and 2 * self.k < self.n):
            raise ParamsOutOfRange(f"need 1 <= k < n/2, got n={self.n}, k={self.k}")

    @property
    def middle(self) -> bool:
        return self.n == 2 * self.k + 1


@dataclass(frozen=True)
class LayerCounts:
    vertices: int
    edges: int
    line_vertices: int


def _params(n_or_p, k=None) -> LayerParams:
    if isinstance(n_or_p, LayerParams):
        return n_or_p
    return LayerParams(n_or_p, k)


def layer_masks(n: int, weight: int) -> list[int]:
    """All weight-``weight`` masks on n bits in colex (numeric) order."""
    masks = [sum(1 << i for i in c) for c in combinations(range(n), weight)]
    masks.sort()
    return masks


@lru_cache(maxsize=64)
def _build_b_cached(n: int, k: int) -> Graph:
    lower = layer_masks(n, k)
    upper = layer_masks(n, k + 1)
    index = {m: i for i, m in enumerate(lower)}
    offset = len(lower)
    index.update({m: offset + i for i, m in enumerate(upper)})
    edges = []
    for v in lower:
        for i in range(n):
            bit = 1 << i
            if not v & bit:
                edges.append((index[v], index[v | bit]))
    labels = [SubsetVertex(m, n) for m in lower + upper]
    return Graph.from_edges(len(labels), edges, labels)


def build_b(n_or_p, k: int | None = None) -> Graph:
    """B(n, k): k- and (k+1)-subsets of [n] joined by containment.

    Weight-k vertices come first, each layer in colex order.  Labels are
    :class:`SubsetVertex` objects.
    """
    p = _params(n_or_p, k)
    return _build_b_cached(p.n, p.k)


@lru_cache(maxsize=64)
def _build_line_b_cached(n: int, k: int) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    return line_graph(_build_b_cached(n, k))


def build_line_b(n_or_p, k: int | None = None) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """L(B(n, k)) together with its edge table into B(n, k)."""
    p = _params(n_or_p, k)
    return _build_line_b_cached(p.n, p.k)


def build_hypercube(n: int) -> Graph:
    """Q_n on vertices ``0..2^n - 1``; u ~ v iff they differ in exactly one bit."""
    if not 1 <= n <= 20:
        raise ParamsOutOfRange(f"hypercube dimension {n} outside [1, 20]")
    rows = [sorted(v ^ (1 << i) for i in range(n)) for v in range(1 << n)]
    return Graph(rows)


def chi(subset: SubsetVertex) -> str:
    """Characteristic vector written as a 0/1 string, position i for element i."""
    return "".join("1" if subset.mask >> i & 1 else "0" for i in range(subset.n))


def counts(n_or_p, k: int | None = None) -> LayerCounts:
    p = _params(n_or_p, k)
    edges = (p.n - p.k) * comb(p.n, p.k)
    return LayerCounts(
        vertices=comb(p.n, p.k) + comb(p.n, p.k + 1),
        edges=edges,
        line_vertices=edges,
    )


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


@dataclass(frozen=True)
class BinomialMod4Result:
    k: int
    binomial: int
    residue: int
    is_multiple_of_4: bool
    # k = 2^t lies outside the divisibility statement.
    excluded_by_hypothesis: bool


def middle_binomial_mod4(k: int) -> BinomialMod4Result:
    """C(2k+1, k) mod 4 for even k > 2, by exact big-integer arithmetic."""
    if k % 2 or k <= 2:
        raise ParamsOutOfRange(f"k must be even and > 2, got {k}")
    b = comb(2 * k + 1, k)
    return BinomialMod4Result(
        k=k,
        binomial=b,
        residue=b % 4,
        is_multiple_of_4=b % 4 == 0,
        excluded_by_hypothesis=is_power_of_two(k),
    )
