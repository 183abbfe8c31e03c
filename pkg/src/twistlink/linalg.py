"""Rank computation over the scalar domains used by the package.

Exact ranks come from Gaussian elimination with exact field arithmetic
(Fraction or CyclotomicNumber entries, or integers mod p).  Floating
ranks use column-pivoted elimination with a documented tolerance.
"""

from __future__ import annotations

import numpy as np

FLOAT_RANK_TOL = 1e-10


def exact_rank(rows) -> int:
    """Rank of a matrix whose entries support exact +,-,*,/ and truthiness.

    Works for Fraction and CyclotomicNumber entries alike.
    """
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def rank_mod_p(rows, p: int) -> int:
    """Exact rank over the prime field Z/p."""
    rows = [[int(x) % p for x in r] for r in rows]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def float_rank(matrix, tol: float = FLOAT_RANK_TOL) -> int:
    """Numerical rank by partial-pivot elimination.

    The tolerance is relative to the largest absolute entry of the input.
    """
    a = np.array(matrix, dtype=complex)
    if a.size == 0:
        return 0
    scale = np.abs(a).max()
    if scale == 0:
        return 0
    cutoff = tol * scale
    m, n = a.shape
    rank = 0
    col = 0
    while rank < m and col < n:
        i = rank + int(np.argmax(np.abs(a[rank:, col])))
        if abs(a[i, col]) <= cutoff:
            col += 1
            continue
        a[[rank, i], :] = a[[i, rank], :]
        a[rank + 1 :, col:] -= np.outer(
            a[rank + 1 :, col] / a[rank, col], a[rank, col:]
        )
        rank += 1
        col += 1
    return rank
