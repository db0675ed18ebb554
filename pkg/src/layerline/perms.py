"""Permutations, induced actions on layer graphs, and orbit-based tests.

Permutations are stored 0-based as image tuples; cycle notation used for
points of ``[n]`` is 1-based, as in ``(1 2)(3 4)``.
"""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from math import comb, factorial, gcd
from typing import TypeVar

from .errors import (
    BudgetExceeded,
    CompNotApplicable,
    NotAutomorphism,
    PreconditionViolated,
)
from .graph import Graph
from .layers import LayerParams, SubsetVertex, build_b

__all__ = [
    "Permutation",
    "AutElement",
    "apply_to_mask",
    "induced_vertex_action",
    "induced_line_automorphism",
    "is_automorphism",
    "orbit",
    "closure",
    "is_k_homogeneous",
    "is_k_transitive",
    "is_sharply_k_transitive",
    "symmetric_group_generators",
    "fixed_vertex_for_involution",
    "DEFAULT_ENUMERATION_BUDGET",
]

T = TypeVar("T", bound=Hashable)

DEFAULT_ENUMERATION_BUDGET = 5_000_000


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str | Sequence[Sequence[int]], n: int, offset: int = 1) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4 5)"`` or ``[[1, 2], [3, 4, 5]]``."""
        if isinstance(text, str):
            cycles = [
                [int(x) for x in re.split(r"[\s,]+", body.strip()) if x]
                for body in re.findall(r"\(([^()]*)\)", text)
            ]
            if re.sub(r"\([^()]*\)", "", text).strip():
                raise ValueError(f"malformed cycle notation: {text!r}")
        else:
            cycles = [list(c) for c in text]
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [x - offset for x in cyc]
            for x in pts:
                if not 0 <= x < n or x in seen:
                    raise ValueError(f"bad point {x + offset} in {text!r}")
                seen.add(x)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        """``(self * other)(x) = self(other(x))``: apply ``other`` first."""
        s = self.images
        return Permutation(tuple(s[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.images) if i == v]

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def cycle_notation(self, offset: int = 1) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + offset) for x in c) + ")" for c in cycs)

    def __str__(self) -> str:
        return self.cycle_notation()


@dataclass(frozen=True)
class AutElement:
    """``f_perm`` optionally followed by complementation (middle layers only)."""

    perm: Permutation
    comp: bool = False


def apply_to_mask(perm: Permutation, mask: int) -> int:
    out = 0
    images = perm.images
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << images[i]
        mask >>= 1
        i += 1
    return out


def induced_vertex_action(a: AutElement | Permutation, p: LayerParams, g: Graph | None = None) -> Permutation:
    """Permutation of V(B(n, k)) induced by ``a``.

    ``g`` defaults to ``build_b(p)`` and must carry :class:`SubsetVertex` labels.
    """
    if isinstance(a, Permutation):
        a = AutElement(a)
    if a.perm.degree != p.n:
        raise ValueError(f"permutation has degree {a.perm.degree}, expected {p.n}")
    if a.comp and not p.middle:
        raise CompNotApplicable(f"complement swaps layers only when n = 2k+1 (n={p.n}, k={p.k})")
    g = build_b(p) if g is None else g
    index = {lab.mask: i for i, lab in enumerate(g.labels)}
    full = (1 << p.n) - 1
    images = []
    for lab in g.labels:
        m = apply_to_mask(a.perm, lab.mask)
        if a.comp:
            m ^= full
        images.append(index[m])
    return Permutation(tuple(images))


def is_automorphism(g: Graph, vp: Permutation | Sequence[int]) -> bool:
    images = vp.images if isinstance(vp, Permutation) else tuple(vp)
    if len(images) != g.order or sorted(images) != list(range(g.order)):
        return False
    nbrs = g.neighbor_sets
    # a bijection mapping every edge to an edge is an automorphism (finite graph)
    return all(images[v] in nbrs[images[u]] for u, v in g.edges)


def induced_line_automorphism(
    vp: Permutation,
    g: Graph,
    edge_table: Sequence[tuple[int, int]] | None = None,
) -> Permutation:
    """Map line-graph vertex ``{u, v}`` to ``{vp(u), vp(v)}``."""
    if not is_automorphism(g, vp):
        raise NotAutomorphism("vertex map does not preserve adjacency")
    table = g.edges if edge_table is None else edge_table
    ids = {e: i for i, e in enumerate(table)}
    img = vp.images
    out = []
    for u, v in table:
        a, b = img[u], img[v]
        out.append(ids[(a, b) if a < b else (b, a)])
    return Permutation(tuple(out))


def orbit(
    start: T,
    gens: Iterable[Callable[[T], T]],
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> set[T]:
    """Orbit of ``start`` under the maps in ``gens`` (each applied as a function)."""
    gens = list(gens)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s(x)
            if y not in seen:
                seen.add(y)
                if len(seen) > budget:
                    raise BudgetExceeded(f"orbit larger than budget {budget}")
                queue.append(y)
    return seen


def closure(gens: Sequence[Permutation], budget: int = DEFAULT_ENUMERATION_BUDGET) -> list[Permutation]:
    """All elements of the group generated by ``gens``, identity first, in BFS order."""
    if not gens:
        raise ValueError("closure needs at least one generator")
    n = gens[0].degree
    gen_images = [g.images for g in gens]
    ident = tuple(range(n))
    seen = {ident}
    order = [ident]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for s in gen_images:
            y = tuple(s[j] for j in x)
            if y not in seen:
                seen.add(y)
                order.append(y)
                if len(order) > budget:
                    raise BudgetExceeded(f"group larger than budget {budget}")
    return [Permutation(x) for x in order]


def _check_points(gens: Sequence[Permutation], n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    for g in gens:
        if g.degree != n:
            raise ValueError(f"generator degree {g.degree} differs from n={n}")


def is_k_homogeneous(gens: Sequence[Permutation], n: int, k: int,
                     budget: int = DEFAULT_ENUMERATION_BUDGET) -> bool:
    """Single orbit on k-subsets of the n points."""
    _check_points(gens, n, k)
    target = comb(n, k)
    if target > budget:
        raise BudgetExceeded(f"C({n},{k}) = {target} exceeds budget")
    maps = [lambda s, im=g.images: frozenset(im[x] for x in s) for g in gens]
    return len(orbit(frozenset(range(k)), maps, budget)) == target


def is_k_transitive(gens: Sequence[Permutation], n: int, k: int,
                    budget: int = DEFAULT_ENUMERATION_BUDGET) -> bool:
    """Single orbit on ordered k-tuples of distinct points."""
    _check_points(gens, n, k)
    target = factorial(n) // factorial(n - k)
    if target > budget:
        raise BudgetExceeded(f"{n}!/({n}-{k})! = {target} exceeds budget")
    maps = [lambda t, im=g.images: tuple(im[x] for x in t) for g in gens]
    return len(orbit(tuple(range(k)), maps, budget)) == target


def is_sharply_k_transitive(elements: Sequence[Permutation], n: int, k: int) -> bool:
    """Regular action on ordered k-tuples: each tuple is hit by exactly one element."""
    target = factorial(n) // factorial(n - k)
    if len(elements) != target:
        return False
    base = tuple(range(k))
    hits = {tuple(g.images[x] for x in base) for g in elements}
    return len(hits) == target


def symmetric_group_generators(n: int) -> list[Permutation]:
    """The transposition (1 2) and the n-cycle (1 2 ... n)."""
    if n < 2:
        return [Permutation.identity(n)]
    return [
        Permutation((1, 0) + tuple(range(2, n))),
        Permutation(tuple(range(1, n)) + (0,)),
    ]


def fixed_vertex_for_involution(theta: Permutation, p: LayerParams) -> tuple[SubsetVertex, SubsetVertex]:
    """A line-graph vertex ``{u, u + i_b}`` of L(B(2k+1, k)) fixed by ``f_theta``.

    ``theta`` is a non-identity involution.  Its a transpositions and b fixed
    points satisfy 2a + b = n with b odd.  When 2a <= k, ``u`` takes every
    transposition support plus the k - 2a smallest fixed points; otherwise
    ``u`` takes the supports of the k/2 transpositions with smallest entries.
    ``i_b`` is always the largest fixed point.
    """
    n, k = p.n, p.k
    if not p.middle:
        raise PreconditionViolated(f"need n = 2k+1, got n={n}, k={k}")
    if k % 2:
        raise PreconditionViolated(f"need k even, got k={k}")
    if theta.degree != n:
        raise PreconditionViolated(f"theta has degree {theta.degree}, expected {n}")
    if theta.is_identity() or not (theta * theta).is_identity():
        raise PreconditionViolated("theta must be an involution other than the identity")

    transpositions = sorted(tuple(sorted(c)) for c in theta.cycles())
    fixed = theta.fixed_points()
    a, b = len(transpositions), len(fixed)
    assert 2 * a + b == n and b % 2 == 1
    i_b = fixed[-1]
    if 2 * a <= k:
        chosen = [x for t in transpositions for x in t] + fixed[: k - 2 * a]
    else:
        chosen = [x for t in transpositions[: k // 2] for x in t]
    lower = SubsetVertex(sum(1 << x for x in chosen), n)
    upper = SubsetVertex(lower.mask | 1 << i_b, n)
    return lower, upper
