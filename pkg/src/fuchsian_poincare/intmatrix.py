"""
Dense integer matrix kernels: products, determinants, characteristic
polynomials, integer kernels and Smith invariants.

Matrices are tuples of row tuples of ``int``.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> Matrix:
    return tuple((0,) * n for _ in range(m))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    if not a:
        return ()
    if not bt:
        return tuple(() for _ in a)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def matadd(a: Matrix, b: Matrix, scale: int = 1) -> Matrix:
    return tuple(tuple(x + scale * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    m, n = len(a), len(b)
    top = tuple(tuple(row) + (0,) * n for row in a)
    bottom = tuple((0,) * m + tuple(row) for row in b)
    return top + bottom


def is_symmetric(a: Matrix) -> bool:
    return all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(i))


def det(a: Matrix) -> int:
    """Fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def faddeev_leverrier(a: Matrix) -> tuple[list[int], Matrix]:
    """Characteristic polynomial and adjugate of a square integer matrix.

    Returns ``(c, adj)`` with ``det(tI - a) = sum(c[k] * t**k)`` (so
    ``c[n] == 1``) and ``adj`` the adjugate of ``a``. All divisions are
    exact over the integers.
    """
    n = len(a)
    c = [0] * (n + 1)
    c[n] = 1
    if n == 0:
        return c, ()
    ident = identity(n)
    mk = zeros(n, n)
    for k in range(1, n + 1):
        mk = matadd(matmul(a, mk), ident, c[n - k + 1])
        amk = matmul(a, mk)
        tr = sum(amk[i][i] for i in range(n))
        assert tr % k == 0
        c[n - k] = -tr // k
    # Cayley-Hamilton: a * mk + c[0] I = 0, and det(a) = (-1)^n c[0]
    sign = -1 if (n - 1) % 2 else 1
    adj = tuple(tuple(sign * x for x in row) for row in mk)
    return c, adj


def integer_kernel(a: Matrix) -> list[tuple[int, ...]]:
    """Saturated integral basis of ``{x in Z^n : a x = 0}``.

    Column-style Hermite reduction: unimodular column operations on ``a``
    are mirrored on an identity matrix; the tracked columns that end up
    under zero columns of the reduced ``a`` span the kernel, and being
    columns of a unimodular matrix they form a saturated basis.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return [tuple(int(i == j) for i in range(n)) for j in range(n)]
    # work with columns as lists: cols[j] = (column j of a, column j of U)
    cols = [([a[i][j] for i in range(m)], [int(i == j) for i in range(n)]) for j in range(n)]
    pivot_col = 0
    for row in range(m):
        if pivot_col >= n:
            break
        # gcd-combine columns pivot_col.. so that only pivot_col is nonzero in this row
        while True:
            nz = [j for j in range(pivot_col, n) if cols[j][0][row] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(cols[j][0][row]))
            cols[pivot_col], cols[jmin] = cols[jmin], cols[pivot_col]
            p = cols[pivot_col][0][row]
            done = True
            for j in range(pivot_col + 1, n):
                x = cols[j][0][row]
                if x:
                    q = x // p
                    aj, uj = cols[j]
                    ap, up = cols[pivot_col]
                    cols[j] = ([s - q * t for s, t in zip(aj, ap)],
                               [s - q * t for s, t in zip(uj, up)])
                    if cols[j][0][row]:
                        done = False
            if done:
                break
        if cols[pivot_col][0][row] != 0:
            pivot_col += 1
    return [tuple(cols[j][1]) for j in range(pivot_col, n)]


def smith_invariants(a: Matrix) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        clean = False
        while not clean:
            clean = True
            p = m[t][t]
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    clean = False
            if not clean:
                _, i, j = min((abs(m[i][j]), i, j)
                              for i, j in [(i, t) for i in range(t, rows)] + [(t, j) for j in range(t, cols)]
                              if m[i][j])
                m[t], m[i] = m[i], m[t]
                for row in m:
                    row[t], row[j] = row[j], row[t]
                continue
            # enforce divisibility of the rest of the block
            p = m[t][t]
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if m[i][j] % p), None)
            if bad is not None:
                i, _ = bad
                m[t] = [x + y for x, y in zip(m[t], m[i])]
                clean = False
        out.append(abs(m[t][t]))
        t += 1
    return out


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
