"""Explicit finite groups: an element list plus a multiplication rule."""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Callable, Hashable, Sequence
from typing import Any

import numpy as np

from .errors import GroupAxiomError
from .perms import Permutation

__all__ = ["FiniteGroup", "EXHAUSTIVE_VERIFY_LIMIT"]

EXHAUSTIVE_VERIFY_LIMIT = 500
_SPOT_CHECKS = 4000


class FiniteGroup:
    """A finite group given by its elements and a binary operation.

    ``elements`` may be any sequence (including a lazily indexed one); pass
    ``index`` when the sequence cannot be hashed into a dict cheaply.  The
    identity and inverse map are found by search when not supplied.

    On construction the axioms are checked: exhaustively when the order is
    at most ``EXHAUSTIVE_VERIFY_LIMIT``, otherwise on seeded random samples.
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        mul: Callable[[Any, Any], Any],
        inv: Callable[[Any], Any] | None = None,
        identity: Hashable | None = None,
        *,
        index: Callable[[Any], int] | None = None,
        name: str = "",
        verify: bool = True,
    ) -> None:
        if len(elements) == 0:
            raise GroupAxiomError("a group has at least one element")
        self.elements = elements
        self.mul = mul
        self.name = name
        if index is None:
            lookup = {x: i for i, x in enumerate(elements)}
            if len(lookup) != len(elements):
                raise GroupAxiomError("duplicate elements")

            def index(x: Any, _lookup=lookup) -> int:
                try:
                    return _lookup[x]
                except KeyError:
                    raise GroupAxiomError(f"{x!r} is not an element of the group") from None

        self.index = index
        if identity is None:
            identity = self._find_identity()
        self.identity = identity
        self.identity_index = self.index(identity)
        self._inv = inv
        self._table: np.ndarray | None = None
        if verify:
            self.verify()

    @classmethod
    def from_permutations(cls, perms: Sequence[Permutation], name: str = "", verify: bool = True) -> FiniteGroup:
        perms = list(perms)
        n = perms[0].degree
        return cls(perms, lambda a, b: a * b, lambda a: a.inverse(),
                   Permutation.identity(n), name=name, verify=verify)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def inv(self, x: Any) -> Any:
        if self._inv is not None:
            return self._inv(x)
        for y in self.elements:
            if self.mul(x, y) == self.identity:
                return y
        raise GroupAxiomError(f"{x!r} has no inverse")

    def _find_identity(self) -> Hashable:
        els = self.elements
        probe = [els[i] for i in range(min(len(els), 8))]
        for e in els:
            if all(self.mul(e, x) == x and self.mul(x, e) == x for x in probe):
                if all(self.mul(e, x) == x for x in els):
                    return e
        raise GroupAxiomError("no identity element")

    def table(self) -> np.ndarray:
        """Cayley table of element indices; only built for modest orders."""
        if self._table is None:
            n = self.order
            if n > 4096:
                raise ValueError(f"refusing to tabulate a group of order {n}")
            els = self.elements
            t = np.empty((n, n), dtype=np.int32)
            for i in range(n):
                a = els[i]
                t[i] = [self.index(self.mul(a, b)) for b in els]
            self._table = t
        return self._table

    def verify(self) -> None:
        n = self.order
        e = self.identity_index
        if n <= EXHAUSTIVE_VERIFY_LIMIT:
            t = self.table()  # closure: every product was located by index()
            ar = np.arange(n)
            if not (np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)):
                raise GroupAxiomError("identity law fails")
            if not ((t == e).sum(axis=1) == 1).all():
                raise GroupAxiomError("some element lacks a unique right inverse")
            for a in range(n):
                # (a*b)*c == a*(b*c) for all b, c
                if not np.array_equal(t[t[a]], t[a][t]):
                    raise GroupAxiomError(f"associativity fails at element {a}")
            if self._inv is not None:
                for i, x in enumerate(self.elements):
                    if t[i, self.index(self._inv(x))] != e:
                        raise GroupAxiomError(f"inverse map wrong at {x!r}")
            return
        rng = random.Random(0x5EED)
        els = self.elements
        mul, idx = self.mul, self.index
        for _ in range(_SPOT_CHECKS):
            a, b, c = (els[rng.randrange(n)] for _ in range(3))
            ab = mul(a, b)
            idx(ab)
            if idx(mul(ab, c)) != idx(mul(a, mul(b, c))):
                raise GroupAxiomError("associativity fails on a sampled triple")
            if mul(a, self.identity) != a or mul(self.identity, a) != a:
                raise GroupAxiomError("identity law fails on a sampled element")
            if idx(mul(a, self.inv(a))) != e:
                raise GroupAxiomError("inverse law fails on a sampled element")

    def element_order(self, x: Any) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
            if k > self.order:
                raise GroupAxiomError("element of unbounded order")
        return k

    def order_statistics(self) -> dict[int, int]:
        return dict(sorted(Counter(self.element_order(x) for x in self.elements).items()))

    def is_abelian(self) -> bool:
        if self.order <= 4096:
            t = self.table()
            return bool(np.array_equal(t, t.T))
        return all(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in self.elements)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"FiniteGroup{label}(order={self.order})"
