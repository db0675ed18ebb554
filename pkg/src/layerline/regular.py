"""Search for a subgroup of an automorphism group acting regularly on vertices.

A regular subgroup R contains exactly one element sending the base vertex
v0 to each vertex v, and that element lies in the coset t_v * Stab(v0).
The search grows a semiregular subgroup H one coset choice at a time,
always for the smallest vertex not yet reached from v0, so it is exhaustive.

Pruning uses only necessary conditions: every element of R is fixed-point
free with all cycles of one length dividing |V|; a candidate g may agree
with no element of H on any point; and |<H, g>| must divide |V|.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .automorphisms import AutomorphismGroup, SearchStats, default_budget
from .errors import SearchBudgetExceeded
from .groups import FiniteGroup
from .perms import Permutation

__all__ = ["regular_subgroup_search", "is_regular_group"]

Raw = tuple[int, ...]


def _compose(a: Raw, b: Raw) -> Raw:
    return tuple([a[i] for i in b])


def _uniform_cycle_length(g: Raw) -> int:
    """Common cycle length of ``g``, or 0 when cycle lengths differ."""
    n = len(g)
    seen = bytearray(n)
    length = 0
    for s in range(n):
        if seen[s]:
            continue
        c = 0
        x = s
        while not seen[x]:
            seen[x] = 1
            x = g[x]
            c += 1
        if length == 0:
            length = c
        elif c != length:
            return 0
    return length


@dataclass
class _Chain:
    degree: int
    v0: int
    reps: dict[int, Raw]
    stabilizer: list[Raw]
    group_order: int


def _chain_from(aut: AutomorphismGroup | Sequence[Permutation]) -> _Chain:
    if isinstance(aut, AutomorphismGroup):
        n = aut.degree
        if not aut.transversals:
            return _Chain(n, 0, {0: tuple(range(n))} if n else {}, [tuple(range(n))], 1)
        return _Chain(
            n,
            aut.base[0],
            dict(aut.transversals[0]),
            [p.images for p in aut.stabilizer_elements()],
            aut.order,
        )
    elements = [p.images for p in aut]
    n = len(elements[0])
    reps: dict[int, Raw] = {}
    for e in elements:
        reps.setdefault(e[0], e)
    return _Chain(n, 0, reps, [e for e in elements if e[0] == 0], len(elements))


class _Search:
    def __init__(self, chain: _Chain, stats: SearchStats) -> None:
        self.chain = chain
        self.n = chain.degree
        self.stats = stats
        self._cands: dict[int, list[Raw]] = {}

    def candidates(self, v: int) -> list[Raw]:
        if v not in self._cands:
            t = self.chain.reps[v]
            n = self.n
            keyed = []
            for s in self.chain.stabilizer:
                g = _compose(t, s)
                d = _uniform_cycle_length(g)
                if d > 1 and n % d == 0:
                    keyed.append(((d, g), g))
            keyed.sort()
            self._cands[v] = [g for _, g in keyed]
        return self._cands[v]

    def close(self, gens: list[Raw]) -> list[Raw] | None:
        """Elements of <gens> if semiregular with order dividing n, else None."""
        n = self.n
        v0 = self.chain.v0
        ident = tuple(range(n))
        elements = [ident]
        by_image = {v0: ident}
        i = 0
        while i < len(elements):
            x = elements[i]
            i += 1
            for s in gens:
                y = _compose(s, x)
                other = by_image.get(y[v0])
                if other is not None:
                    if other != y:
                        return None  # two elements agree on v0
                    continue
                if len(elements) >= n:
                    return None
                if any(y[j] == j for j in range(n)):
                    return None
                by_image[y[v0]] = y
                elements.append(y)
        if n % len(elements):
            return None
        return elements

    def run(self, gens: list[Raw], elements: list[Raw]) -> list[Raw] | None:
        n = self.n
        if len(elements) == n:
            return elements
        v0 = self.chain.v0
        reached = {e[v0] for e in elements}
        v = next(x for x in range(n) if x not in reached)
        images_at = [set() for _ in range(n)]
        for e in elements:
            for j in range(n):
                images_at[j].add(e[j])
        for g in self.candidates(v):
            self.stats.tick()
            if any(g[j] in images_at[j] for j in range(n)):
                continue
            grown = self.close(gens + [g])
            if grown is None:
                continue
            found = self.run(gens + [g], grown)
            if found is not None:
                return found
        return None


def regular_subgroup_search(
    aut: AutomorphismGroup | Sequence[Permutation],
    v_count: int | None = None,
    budget: int | None = None,
) -> FiniteGroup | None:
    """A subgroup of ``aut`` of order ``v_count`` acting regularly, or None.

    ``aut`` is either a chain from :func:`automorphism_group` or an explicit
    list of all group elements.  Raises :class:`SearchBudgetExceeded` when the
    search visits more than ``budget`` candidates.
    """
    chain = _chain_from(aut)
    n = chain.degree
    if v_count is None:
        v_count = n
    if v_count != n:
        raise ValueError(f"a regular subgroup has order |V| = {n}, not {v_count}")
    if len(chain.reps) < n or chain.group_order % n:
        return None
    stats = SearchStats(budget=default_budget() if budget is None else budget)
    ident = tuple(range(n))
    if n == 1:
        found = [ident]
    else:
        found = _Search(chain, stats).run([], [ident])
    if found is None:
        return None
    perms = [Permutation(x) for x in sorted(found)]
    group = FiniteGroup.from_permutations(perms, name="regular subgroup")
    if not is_regular_group(perms, n):
        raise AssertionError("regular subgroup search returned a non-regular group")
    return group


def is_regular_group(perms: Sequence[Permutation], n: int) -> bool:
    """Order n, transitive, and every non-identity element fixed-point free."""
    if len(perms) != n:
        return False
    if len({p.images[0] for p in perms}) != n:
        return False
    return all(p.is_identity() or not p.fixed_points() for p in perms)
