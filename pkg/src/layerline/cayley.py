"""Cayley graphs, the affine semidirect-product construction, and the
structural recognition of L(B(n, 1)).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from .automorphisms import automorphism_group
from .errors import InvalidConnectionSet, ParamsOutOfRange, SearchBudgetExceeded
from .field import GF, FieldSpec, is_prime
from .graph import Graph, common_neighbors
from .groups import FiniteGroup
from .layers import build_line_b, is_power_of_two
from .perms import Permutation
from .regular import regular_subgroup_search

__all__ = [
    "ConnectionSet",
    "IsoCertificate",
    "CayleyVerdict",
    "cayley_graph",
    "semidirect_affine_construction",
    "alternating_a4_construction",
    "cyclic_group",
    "left_translation",
    "recognize_lb1",
    "is_cayley",
    "is_prime_power",
    "predicted_line_cayley_status",
]


@dataclass(frozen=True)
class ConnectionSet:
    """Indices into ``group.elements``; inverse-closed and identity-free."""

    group: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        G = self.group
        members = set(self.members)
        if len(members) != len(self.members):
            raise InvalidConnectionSet("repeated connection-set member")
        if G.identity_index in members:
            raise InvalidConnectionSet("connection set contains the identity")
        for i in members:
            if G.index(G.inv(G.elements[i])) not in members:
                raise InvalidConnectionSet(f"inverse of {G.elements[i]!r} missing")

    @classmethod
    def of(cls, group: FiniteGroup, elements: Iterable[Any]) -> ConnectionSet:
        return cls(group, tuple(sorted(group.index(x) for x in elements)))

    def __len__(self) -> int:
        return len(self.members)


def cayley_graph(G: FiniteGroup, S: ConnectionSet) -> Graph:
    """Cay(G; S): g ~ h iff g^{-1} h in S, i.e. h = g s.  Labels are elements."""
    if S.group is not G:
        raise InvalidConnectionSet("connection set belongs to another group")
    els = G.elements
    svals = [els[i] for i in S.members]
    rows = []
    for g in els:
        rows.append(sorted(G.index(G.mul(g, s)) for s in svals))
    return Graph(rows, list(els))


def left_translation(G: FiniteGroup, h: Any) -> Permutation:
    return Permutation(tuple(G.index(G.mul(h, g)) for g in G.elements))


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(list(range(n)), lambda a, b: (a + b) % n, lambda a: (-a) % n, 0, name=f"Z{n}")


def semidirect_affine_construction(field: GF | FieldSpec | int) -> tuple[FiniteGroup, ConnectionSet]:
    """K x| H with K = (GF(q), +) and H = multiplications by nonzero scalars.

    Elements are pairs (u, a) with a != 0, multiplied by
    (u, a)(v, b) = (u + a^{-1} v, a b).  The connection set is the nonidentity
    part of T = {(0, a)} together with the involution (1, -1).
    """
    if isinstance(field, int):
        field = GF.of_order(field)
    elif isinstance(field, FieldSpec):
        field = GF(field)
    F = field
    q = F.q
    if q < 4:
        raise ParamsOutOfRange(f"need q >= 4, got {q}")
    elements = [(u, a) for a in range(1, q) for u in range(q)]
    inv_scalar = {a: F.inv(a) for a in range(1, q)}

    def mul(x, y):
        u, a = x
        v, b = y
        return (F.add(u, F.mul(inv_scalar[a], v)), F.mul(a, b))

    def inv(x):
        u, a = x
        # (u, a)(v, a^{-1}) = (u + a^{-1} v, 1) = e  =>  v = -a u
        return (F.neg(F.mul(a, u)), inv_scalar[a])

    G = FiniteGroup(elements, mul, inv, (0, 1), name=f"GF({q}) x| GF({q})*")
    minus_one = F.neg(1)
    alpha = (1, minus_one)
    if mul(alpha, alpha) != G.identity:
        raise AssertionError("(1, -1) is not an involution")
    members = [(0, a) for a in range(2, q)] + [alpha]
    return G, ConnectionSet.of(G, members)


def alternating_a4_construction() -> tuple[FiniteGroup, ConnectionSet]:
    """A4 on {1,2,3,4} with S = {(1 2 3), (1 3 2), (1 2)(3 4)}."""
    rho = Permutation.from_cycles("(1 2 3)", 4)
    a = Permutation.from_cycles("(1 2)(3 4)", 4)
    from .perms import closure

    G = FiniteGroup.from_permutations(sorted(closure([rho, a]), key=lambda p: p.images), name="A4")
    return G, ConnectionSet.of(G, [rho, rho * rho, a])


@dataclass(frozen=True)
class IsoCertificate:
    """``mapping[i]`` is the vertex of ``target`` assigned to vertex i of ``source``."""

    source: Graph
    target: Graph
    mapping: tuple[int, ...]

    def verify(self) -> bool:
        s, t, m = self.source, self.target, self.mapping
        if s.order != t.order or len(m) != s.order or sorted(m) != list(range(t.order)):
            return False
        if s.size != t.size:
            return False
        tn = t.neighbor_sets
        # with equal edge counts, edge-preservation of a bijection gives non-edge preservation
        if not all(m[v] in tn[m[u]] for u, v in s.edges):
            return False
        sn = s.neighbor_sets
        inv = [0] * len(m)
        for i, x in enumerate(m):
            inv[x] = i
        return all(inv[v] in sn[inv[u]] for u, v in t.edges)


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps: dict[int, list[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    return sorted(comps.values())


def recognize_lb1(g: Graph) -> tuple[int, IsoCertificate] | None:
    """Decide whether ``g`` has the clique structure of L(B(n, 1)).

    Needs an (n-1)-regular graph on n(n-1) vertices, n >= 4, whose edges with
    a common neighbour form n disjoint (n-1)-cliques, with exactly one
    remaining edge between every pair of cliques.  On success returns n and
    an isomorphism from L(B(n, 1)) onto ``g``.
    """
    if g.order == 0 or not g.is_regular():
        return None
    n = g.degree(0) + 1
    if n < 4 or g.order != n * (n - 1):
        return None
    internal, bridges = [], []
    for u, v in g.edges:
        (internal if common_neighbors(g, u, v) else bridges).append((u, v))
    cliques = _components(g.order, internal)
    if len(cliques) != n or any(len(c) != n - 1 for c in cliques):
        return None
    for c in cliques:
        cs = set(c)
        if any(len(g.neighbor_sets[v] & cs) != n - 2 for v in c):
            return None
    clique_of = [0] * g.order
    for i, c in enumerate(cliques):
        for v in c:
            clique_of[v] = i
    bridge_of = [-1] * g.order
    pairs = set()
    for u, v in bridges:
        cu, cv = clique_of[u], clique_of[v]
        if cu == cv or bridge_of[u] >= 0 or bridge_of[v] >= 0:
            return None
        pair = (min(cu, cv), max(cu, cv))
        if pair in pairs:
            return None
        pairs.add(pair)
        bridge_of[u], bridge_of[v] = v, u
    if len(pairs) != n * (n - 1) // 2:
        return None

    # Anchor clique holds vertex 0; its members, in ascending order, name the cliques 2..n.
    anchor = clique_of[0]
    label_of_clique = {anchor: 1}
    for j, x in enumerate(sorted(cliques[anchor]), start=2):
        label_of_clique[clique_of[bridge_of[x]]] = j
    # v[j, ij]: the vertex of clique C_j bridged to clique C_i
    vertex_of = {}
    for v in range(g.order):
        j = label_of_clique[clique_of[v]]
        i = label_of_clique[clique_of[bridge_of[v]]]
        vertex_of[(j, i)] = v

    src, _ = build_line_b(n, 1)
    mapping = []
    for lower, upper in src.labels:
        j = lower.elements[0]
        (i,) = set(upper.elements) - {j}
        mapping.append(vertex_of[(j, i)])
    cert = IsoCertificate(src, g, tuple(mapping))
    if not cert.verify():
        return None
    return n, cert


@dataclass(frozen=True)
class CayleyVerdict:
    verdict: str  # "yes" | "no" | "undecided"
    certificate: FiniteGroup | None = None
    reason: str = ""


def is_cayley(g: Graph, budget: int | None = None, max_vertices: int = 2000) -> CayleyVerdict:
    """Cayley status of a connected graph by regular-subgroup search in Aut(g)."""
    try:
        aut = automorphism_group(g, budget=budget, max_vertices=max_vertices)
        if not aut.is_transitive():
            return CayleyVerdict("no", reason="automorphism group is not vertex-transitive")
        found = regular_subgroup_search(aut, g.order, budget=budget)
    except SearchBudgetExceeded as exc:
        return CayleyVerdict("undecided", reason=str(exc))
    if found is None:
        return CayleyVerdict("no", reason="exhaustive search found no regular subgroup")
    return CayleyVerdict("yes", found, reason=f"regular subgroup of order {found.order}")


def is_prime_power(x: int) -> bool:
    if x < 2:
        return False
    p = next(d for d in range(2, x + 1) if x % d == 0)
    while x % p == 0:
        x //= p
    return x == 1 and is_prime(p)


def predicted_line_cayley_status(n: int, k: int) -> tuple[str, str]:
    """What is proved about L(B(n, k)) being a Cayley graph.

    Returns ("cayley" | "non-cayley" | "undecided", explanation).  Cases the
    theory leaves open are reported as undecided rather than guessed.
    """
    if not (n >= 4 and 1 <= k and 2 * k < n):
        raise ParamsOutOfRange(f"need n >= 4 and 1 <= k < n/2, got n={n}, k={k}")
    if n == 2 * k + 1:
        if k > 2 and k % 2 == 0 and not is_power_of_two(k):
            return "non-cayley", "middle layers, k even and not a power of 2"
        return "undecided", "middle layers with k odd or a power of 2: open"
    if k == 1:
        if is_prime_power(n):
            return "cayley", "n is a prime power: affine semidirect-product construction"
        return "non-cayley", "n is not a prime power: no sharply 2-transitive group of degree n"
    if k == 2:
        q = n - 1
        if is_prime_power(q) and q % 4 == 3:
            return "undecided", f"k=2 with n-1={q} a prime power = 3 mod 4: open"
        return "non-cayley", "k=2 and n-1 is not a prime power = 3 mod 4"
    if k == 3:
        if n in (9, 33):
            return "undecided", f"k=3, n={n}: group orders match exceptional 4-homogeneous groups"
        return "non-cayley", "k=3 and n not in {9, 33}"
    return "non-cayley", "k >= 4: a regular subgroup would be (k+1)-transitive"
