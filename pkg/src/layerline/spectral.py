"""Exact integer checks of adjacency spectra.

Everything here uses Python integers; no floating point is involved, so a
positive answer is a proof for the matrix at hand.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import NotSquare
from .graph import Graph
from .layers import build_line_b

__all__ = [
    "IntMatrix",
    "adjacency_matrix",
    "matmul",
    "shift",
    "annihilation_check",
    "rank",
    "eigenvalue_present",
    "multiplicity",
    "SpectrumReport",
    "line_b1_spectrum_report",
]

IntMatrix = list[list[int]]


def _square(A: Sequence[Sequence[int]]) -> int:
    d = len(A)
    if any(len(row) != d for row in A):
        raise NotSquare("matrix is not square")
    return d


def adjacency_matrix(g: Graph) -> IntMatrix:
    A = [[0] * g.order for _ in range(g.order)]
    for u, v in g.edges:
        A[u][v] = A[v][u] = 1
    return A


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def shift(A: IntMatrix, lam: int) -> IntMatrix:
    """A - lam * I."""
    return [[x - lam if i == j else x for j, x in enumerate(row)] for i, row in enumerate(A)]


def annihilation_check(A: IntMatrix, roots: Iterable[int]) -> bool:
    """True iff the product of (A - lam I) over ``roots`` is the zero matrix."""
    d = _square(A)
    P = [[int(i == j) for j in range(d)] for i in range(d)]
    for lam in roots:
        P = matmul(P, shift(A, lam))
    return all(x == 0 for row in P for x in row)


def rank(A: Sequence[Sequence[int]]) -> int:
    """Rank by fraction-free (Bareiss) elimination, pivoting on the first nonzero row."""
    M = [list(row) for row in A]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        pr = M[r]
        for i in range(r + 1, rows):
            row = M[i]
            f = row[c]
            # exact division is the Bareiss invariant
            M[i] = [(pr[c] * row[j] - f * pr[j]) // prev for j in range(cols)]
        prev = pr[c]
        r += 1
        if r == rows:
            break
    return r


def multiplicity(A: IntMatrix, lam: int) -> int:
    """dim ker(A - lam I), which is the eigenvalue multiplicity for symmetric A."""
    return _square(A) - rank(shift(A, lam))


def eigenvalue_present(A: IntMatrix, lam: int) -> bool:
    return multiplicity(A, lam) > 0


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    roots: tuple[int, ...]
    annihilates: bool
    multiplicities: dict[int, int]

    @property
    def all_present(self) -> bool:
        return all(m > 0 for m in self.multiplicities.values())

    @property
    def exact(self) -> bool:
        """Annihilation plus presence pins the distinct eigenvalues to ``roots``."""
        return self.annihilates and self.all_present

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "roots": list(self.roots),
            "annihilates": self.annihilates,
            "multiplicities": {str(k): v for k, v in self.multiplicities.items()},
        }


def line_b1_spectrum_report(n: int) -> SpectrumReport:
    """Test the eigenvalue set {-2, -1, 0, n-2, n-1} on L(B(n, 1))."""
    g, _ = build_line_b(n, 1)
    A = adjacency_matrix(g)
    roots = (-2, -1, 0, n - 2, n - 1)
    return SpectrumReport(
        n=n,
        roots=roots,
        annihilates=annihilation_check(A, roots),
        multiplicities={lam: multiplicity(A, lam) for lam in roots},
    )
