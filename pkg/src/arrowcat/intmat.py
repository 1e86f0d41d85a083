"""Exact integer matrix helpers.

Matrices are tuples of row tuples.  Dimensions are always passed or carried
explicitly so that 0xN and Nx0 matrices keep consistent shapes.
"""

from __future__ import annotations

Matrix = tuple[tuple[int, ...], ...]


def mat(rows) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def zeros(nrows: int, ncols: int) -> Matrix:
    return tuple((0,) * ncols for _ in range(nrows))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def shape_ok(m: Matrix, nrows: int, ncols: int) -> bool:
    return len(m) == nrows and all(len(r) == ncols for r in m)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in a)


def scale(c: int, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in a)


def mul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """a @ b where a is m x k and b is k x n."""
    if inner is None:
        inner = len(b)
    m = len(a)
    n = len(b[0]) if b else (0 if inner else 0)
    if inner == 0:
        n = _cols_of(b, 0)
        return zeros(m, n)
    n = len(b[0])
    return tuple(
        tuple(sum(ra[k] * b[k][j] for k in range(inner)) for j in range(n))
        for ra in a
    )


def _cols_of(b: Matrix, default: int) -> int:
    return len(b[0]) if b else default


def transpose(a: Matrix, ncols: int) -> Matrix:
    return tuple(tuple(r[j] for r in a) for j in range(ncols))


def hstack(blocks: list[Matrix], nrows: int) -> Matrix:
    out = []
    for i in range(nrows):
        row: list[int] = []
        for b in blocks:
            row.extend(b[i])
        out.append(tuple(row))
    return tuple(out)


def vstack(blocks: list[Matrix]) -> Matrix:
    out: list[tuple[int, ...]] = []
    for b in blocks:
        out.extend(b)
    return tuple(out)


def block_diag(blocks: list[tuple[Matrix, int, int]]) -> Matrix:
    """blocks are (matrix, nrows, ncols); returns their diagonal sum."""
    total_r = sum(r for _, r, _ in blocks)
    total_c = sum(c for _, _, c in blocks)
    out = [[0] * total_c for _ in range(total_r)]
    r0 = c0 = 0
    for b, r, c in blocks:
        for i in range(r):
            for j in range(c):
                out[r0 + i][c0 + j] = b[i][j]
        r0 += r
        c0 += c
    return mat(out)


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for r in a for x in r)


def det(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
