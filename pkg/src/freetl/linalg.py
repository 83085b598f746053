"""Exact dense linear algebra over a field of scalars.

Works for any scalars supporting ``+ - * /`` and truthiness (Fraction,
RationalFunction).  Matrices are lists of rows.  Nothing here ever rounds.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["determinant", "leading_principal_minors", "row_reduce", "rank", "nullspace", "is_positive_definite"]


def _copy(m: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in m]


def _square(m) -> int:
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    return n


def determinant(m: Sequence[Sequence]):
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    a = _copy(m)
    n = _square(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
            row_i[k] = 0 * akk
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def leading_principal_minors(m: Sequence[Sequence]) -> list:
    """Leading principal minors ``D_1 .. D_n`` via Bareiss without pivoting.

    After step ``k`` the pivot ``a[k][k]`` equals ``D_{k+1}``.  When a minor
    vanishes the elimination cannot continue without pivoting; the remaining
    minors are then computed directly from their submatrices.
    """
    a = _copy(m)
    n = _square(a)
    minors = []
    prev = 1
    for k in range(n):
        akk = a[k][k]
        minors.append(akk)
        if not akk:
            minors.extend(determinant([row[: j + 1] for row in m[: j + 1]]) for j in range(k + 1, n))
            return minors
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
        prev = akk
    return minors


def is_positive_definite(m: Sequence[Sequence]) -> bool:
    """Sylvester's criterion on an exact symmetric matrix with ordered scalars."""
    return all(d > 0 for d in leading_principal_minors(m))


def row_reduce(m: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m or not m[0]:
        return 0
    return len(row_reduce(m)[1])


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Basis of the right kernel ``{x : m x = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    rref, pivots = row_reduce(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(tuple(v))
    return basis
