"""Exact integer and rational linear algebra.

Integer work (determinants, Hermite normal form) stays in plain Python ints;
rational work uses fractions.Fraction. Nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

IntVector = tuple[int, ...]


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(rows)
    a = [list(map(int, r)) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: exact division by previous pivot
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve a square linear system exactly; None if the matrix is singular."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if any(len(row) != n + 1 for row in a):
        raise ValueError("matrix is not square or rhs length mismatch")
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(row[n] for row in a)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    work = [[Fraction(x) for x in r] for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][col]
        work[r] = [x / inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def primitive_vector(v: Sequence[int]) -> IntVector:
    """Divide out the gcd of the entries (zero vector stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def cofactor_normal(rows: Sequence[Sequence[int]], dim: int) -> IntVector:
    """Integer vector orthogonal to dim-1 given row vectors of length dim.

    Entry j is (-1)^j times the minor obtained by deleting column j; the zero
    vector signals linear dependence. For dim == 1 (no rows) this is (1,).
    """
    if len(rows) != dim - 1:
        raise ValueError("need exactly dim-1 rows")
    normal = []
    for j in range(dim):
        minor = [[row[i] for i in range(dim) if i != j] for row in rows]
        normal.append((-1) ** j * det_int(minor))
    return tuple(normal)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the integer row lattice.

    Returns only the nonzero rows: row echelon with positive pivots, and
    entries above each pivot reduced into [0, pivot).
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValueError("ragged matrix")
    r = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r, len(work)) if work[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(work[i][col]), i))
            work[r], work[best] = work[best], work[r]
            if work[r][col] < 0:
                work[r] = [-x for x in work[r]]
            pivot = work[r][col]
            clean = True
            for i in range(r + 1, len(work)):
                if work[i][col] != 0:
                    q = work[i][col] // pivot
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                    if work[i][col] != 0:
                        clean = False
            if clean:
                break
        if r < len(work) and work[r][col] != 0:
            pivot = work[r][col]
            for i in range(r):
                q = work[i][col] // pivot
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
            r += 1
            if r == len(work):
                break
    return work[:r]


def is_identity(matrix: Sequence[Sequence[int]], dim: int) -> bool:
    if len(matrix) != dim:
        return False
    return all(
        len(row) == dim and all(row[j] == (1 if i == j else 0) for j in range(dim))
        for i, row in enumerate(matrix)
    )


def matrix_columns(rows: Sequence[Sequence[int]]) -> list[IntVector]:
    return [tuple(row[j] for row in rows) for j in range(len(rows[0]))]


def inverse_exact(rows: Sequence[Sequence[int]]) -> list[list[Fraction]] | None:
    """Exact inverse of a square integer matrix; None if singular."""
    n = len(rows)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        x = solve_exact(rows, e)
        if x is None:
            return None
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]
