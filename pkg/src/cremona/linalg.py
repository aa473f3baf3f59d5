"""Small exact linear algebra over the rationals.

Plain Gaussian elimination on fractions.Fraction.  The matrices here
are tiny (at most ~16 rows/columns: facet normals of the cones at desk
scale), so there is nothing to optimize; the point is exactness and
zero dependencies.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[int | Fraction]

__all__ = ["rref", "rank", "kernel_basis", "solve_unique"]


def rref(rows: Sequence[Row]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Row]) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: Sequence[Row], ncols: int) -> list[tuple[Fraction, ...]]:
    """A basis of {x : row . x = 0 for every row} (standard dot product)."""
    if not rows:
        return [
            tuple(Fraction(1 if i == j else 0) for i in range(ncols))
            for j in range(ncols)
        ]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -m[r][f]
        basis.append(tuple(vec))
    return basis


def solve_unique(rows: Sequence[Row], rhs: Sequence[int | Fraction]) -> tuple[Fraction, ...] | None:
    """Solve a square system with a unique solution; None if singular."""
    n = len(rows)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return tuple(m[i][n] for i in range(n))
