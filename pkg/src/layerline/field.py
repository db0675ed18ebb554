"""Arithmetic in GF(p^m) and the affine group AGL(1, q).

Field elements are integer codes: the coefficient vector (c0, ..., c_{m-1})
of a polynomial of degree < m, little-endian, read as a radix-p number
``c0 + c1*p + ... + c_{m-1}*p^(m-1)``.  Code 0 is zero and code 1 is one.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .errors import DivisionByZero, ParamsOutOfRange
from .groups import FiniteGroup
from .perms import Permutation

__all__ = [
    "is_prime",
    "FieldSpec",
    "GF",
    "find_irreducible",
    "is_irreducible",
    "poly_divmod",
    "AffineMaps",
    "agl1",
    "field_axioms_hold",
]

Poly = tuple[int, ...]  # little-endian coefficients, no trailing zeros


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _trim(c: Sequence[int]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return _trim([(x + (b[i] if i < len(b) else 0)) % p for i, x in enumerate(a)])


def _psub(a: Poly, b: Poly, p: int) -> Poly:
    return _padd(a, tuple((-x) % p for x in b), p)


def _pmul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    """Quotient and remainder of polynomials over GF(p)."""
    b = _trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(_trim(a))
    q = [0] * max(len(r) - len(b) + 1, 0)
    lead_inv = pow(b[-1], p - 2, p)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] * lead_inv % p
        q[shift] = f
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - f * y) % p
        r = list(_trim(r))
    return _trim(q), tuple(r)


def _monic_polys(p: int, d: int):
    """Monic degree-d polynomials in increasing integer-code order."""
    for low in product(range(p), repeat=d):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Brute force: no monic factor of degree 1..deg(f)//2 divides ``f``."""
    f = _trim(f)
    m = len(f) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(p, d):
            if not poly_divmod(f, g, p)[1]:
                return False
    return True


def _poly_str(c: Sequence[int]) -> str:
    terms = []
    for i in range(len(c) - 1, -1, -1):
        x = c[i]
        if not x:
            continue
        if i == 0:
            terms.append(str(x))
        else:
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if x == 1 else f"{x}{mono}")
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    modulus: Poly  # monic, degree m, little-endian

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p >= 2**31:
            raise ParamsOutOfRange(f"p={self.p} is not a prime below 2^31")
        if self.m < 1:
            raise ParamsOutOfRange(f"extension degree {self.m} < 1")
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise ParamsOutOfRange("modulus must be monic of degree m")
        if self.m <= 8 and not is_irreducible(self.modulus, self.p):
            raise ParamsOutOfRange(f"{_poly_str(self.modulus)} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p**self.m

    def __str__(self) -> str:
        return f"GF({self.q}) = GF({self.p})[x]/({_poly_str(self.modulus)})"


def find_irreducible(p: int, m: int) -> FieldSpec:
    """Smallest monic irreducible of degree m, ordered by integer code.

    Codes compare the coefficient vector from the highest non-leading
    degree down, so over GF(2) the cubic x^3+x+1 precedes x^3+x^2+1.
    """
    if not is_prime(p):
        raise ParamsOutOfRange(f"p={p} is not prime")
    if not 1 <= m <= 8 or p**m > 2**20:
        raise ParamsOutOfRange(f"need 1 <= m <= 8 and p^m <= 2^20, got p={p}, m={m}")
    for f in _monic_polys(p, m):
        if is_irreducible(f, p):
            return FieldSpec(p, m, f)
    raise AssertionError("an irreducible polynomial of every degree exists")


class GF:
    """The finite field described by a :class:`FieldSpec`."""

    def __init__(self, spec: FieldSpec | int, m: int | None = None) -> None:
        if isinstance(spec, int):
            spec = find_irreducible(spec, 1 if m is None else m)
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.q = spec.q
        self.zero = 0
        self.one = 1

    @classmethod
    def of_order(cls, q: int) -> GF:
        for p in range(2, q + 1):
            if q % p == 0:
                break
        else:
            raise ParamsOutOfRange(f"{q} is not a prime power")
        m, r = 0, q
        while r % p == 0:
            r //= p
            m += 1
        if r != 1 or not is_prime(p):
            raise ParamsOutOfRange(f"{q} is not a prime power")
        return cls(find_irreducible(p, m))

    def coeffs(self, a: int) -> tuple[int, ...]:
        self._check(a)
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            coeffs = poly_divmod(tuple(c % self.p for c in coeffs), self.spec.modulus, self.p)[1]
        code = 0
        for c in reversed(tuple(coeffs)):
            code = code * self.p + c % self.p
        return code

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of GF({self.q})")

    def __iter__(self):
        return iter(range(self.q))

    def __len__(self) -> int:
        return self.q

    def add(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.element([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        return self.element([(-x) % self.p for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        prodpoly = _pmul(_trim(self.coeffs(a)), _trim(self.coeffs(b)), self.p)
        return self.element(poly_divmod(prodpoly, self.spec.modulus, self.p)[1])

    def inv(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm on polynomials."""
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        p = self.p
        r0, r1 = self.spec.modulus, _trim(self.coeffs(a))
        s0, s1 = (), (1,)
        while r1:
            quo, rem = poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quo, s1, p), p)
        # r0 is a nonzero constant
        c = pow(r0[0], p - 2, p)
        return self.element([x * c % p for x in s0])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    @cached_property
    def add_table(self) -> np.ndarray:
        return self._tabulate(self.add)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return self._tabulate(self.mul)

    def _tabulate(self, op) -> np.ndarray:
        if self.q > 4096:
            raise ValueError(f"refusing to tabulate GF({self.q})")
        return np.array([[op(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int32)

    def to_str(self, a: int) -> str:
        return _poly_str(self.coeffs(a))

    def __repr__(self) -> str:
        return f"GF({self.q})"


def field_axioms_hold(field: GF) -> bool:
    """Exhaustive check of the field axioms on the operation tables."""
    q = field.q
    A, M = field.add_table, field.mul_table
    ar = np.arange(q)
    checks = [
        np.array_equal(A, A.T),
        np.array_equal(M, M.T),
        np.array_equal(A[0], ar),
        np.array_equal(M[1], ar),
        bool((M[0] == 0).all()),
        # additive inverses exist, nonzero elements have multiplicative inverses
        bool(((A == 0).sum(axis=1) == 1).all()),
        bool(((M[1:, 1:] == 1).sum(axis=1) == 1).all()),
    ]
    for a in range(q):
        checks.append(np.array_equal(A[A[a]], A[a][A]))
        checks.append(np.array_equal(M[M[a]], M[a][M]))
        # a*(b+c) == a*b + a*c
        checks.append(np.array_equal(M[a][A], A[M[a]][:, M[a]]))
        if not all(checks):
            return False
    for a in range(1, q):
        if field.mul(a, field.inv(a)) != 1:
            return False
    return all(checks)


class AffineMaps(Sequence):
    """x -> a*x + b over GF(q), a != 0, indexed lazily as (a, b) code pairs."""

    def __init__(self, field: GF) -> None:
        self.field = field
        self.q = field.q

    def __len__(self) -> int:
        return self.q * (self.q - 1)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        a, b = divmod(i, self.q)
        return (a + 1, b)

    def index(self, x) -> int:  # type: ignore[override]
        a, b = x
        if not (1 <= a < self.q and 0 <= b < self.q):
            raise ValueError(f"{x!r} is not an affine map of GF({self.q})")
        return (a - 1) * self.q + b

    def permutation(self, x) -> Permutation:
        a, b = x
        f = self.field
        return Permutation(tuple(f.add(f.mul(a, v), b) for v in range(self.q)))


def agl1(field: GF | FieldSpec) -> FiniteGroup:
    """AGL(1, q) as pairs (a, b) for x -> a*x + b, composed as functions.

    ``(a, b) * (c, d)`` applies (c, d) first: x -> a*(c*x + d) + b.
    """
    if isinstance(field, FieldSpec):
        field = GF(field)
    if field.q > 2**12:
        raise ParamsOutOfRange(f"q={field.q} exceeds 2^12")
    f = field
    maps = AffineMaps(f)

    def mul(x, y):
        a, b = x
        c, d = y
        return (f.mul(a, c), f.add(f.mul(a, d), b))

    def inv(x):
        a, b = x
        ai = f.inv(a)
        return (ai, f.neg(f.mul(ai, b)))

    return FiniteGroup(maps, mul, inv, (1, 0), index=maps.index, name=f"AGL(1,{f.q})")
