"""Dense exact-rational matrices: rank, reduced row echelon form, nullspace.

Matrices are lists of equal-length rows of Fractions (ints are
coerced).  Everything is exact; Fraction normalizes through gcd after
every operation, so intermediate entries stay reduced.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = list[Fraction]
Matrix = list[Row]


def _copy(rows: Sequence[Sequence[Fraction | int]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def mat_rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank by Gaussian elimination with full pivoting.

    The pivot is the largest-magnitude entry of the remaining submatrix;
    row and column swaps do not change the rank.
    """
    m = _copy(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    while rank < nrows and rank < ncols:
        best, bi, bj = Fraction(0), -1, -1
        for i in range(rank, nrows):
            for j in range(rank, ncols):
                if abs(m[i][j]) > best:
                    best, bi, bj = abs(m[i][j]), i, j
        if bi < 0:
            break
        m[rank], m[bi] = m[bi], m[rank]
        if bj != rank:
            for row in m:
                row[rank], row[bj] = row[bj], row[rank]
        pivot = m[rank][rank]
        for i in range(rank + 1, nrows):
            factor = m[i][rank] / pivot
            if factor:
                for j in range(rank, ncols):
                    m[i][j] -= factor * m[rank][j]
        rank += 1
    return rank


def rref(rows: Sequence[Sequence[Fraction | int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = _copy(rows)
    if not m or not m[0]:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        best, bi = Fraction(0), -1
        for i in range(pr, nrows):
            if abs(m[i][pc]) > best:
                best, bi = abs(m[i][pc]), i
        if bi < 0:
            continue
        m[pr], m[bi] = m[bi], m[pr]
        pivot = m[pr][pc]
        m[pr] = [x / pivot for x in m[pr]]
        for i in range(nrows):
            if i != pr and m[i][pc]:
                factor = m[i][pc]
                m[i] = [a - factor * b for a, b in zip(m[i], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[Row]:
    """Basis of the right nullspace of a matrix with ``ncols`` columns.

    ``rows`` may be empty, in which case the basis is the standard one.
    One basis vector per free column, in ascending free-column order.
    """
    if not rows:
        basis = []
        for j in range(ncols):
            v = [Fraction(0)] * ncols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    if any(len(row) != ncols for row in rows):
        raise ValueError("row length does not match ncols")
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced[row_idx][j]
        basis.append(v)
    return basis
