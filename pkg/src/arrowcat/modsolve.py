"""Linear solving modulo a prime: the fast path for field-ring systems."""

from __future__ import annotations


def _rref_mod_p(rows: list[list[int]], ncols: int, p: int):
    """Row-reduce in place; returns list of (row_index, pivot_col)."""
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % p:
                f = rows[i][col] % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_mod_p(a, b, nrows: int, ncols: int, p: int):
    """One solution of a x = b (mod p), or None."""
    aug = [[a[i][j] % p for j in range(ncols)] + [b[i] % p] for i in range(nrows)]
    pivots = _rref_mod_p(aug, ncols, p)
    rank = len(pivots)
    for i in range(rank, nrows):
        if aug[i][ncols] % p:
            return None
    x = [0] * ncols
    for r, c in pivots:
        x[c] = aug[r][ncols] % p
    return x


def nullspace_mod_p(a, nrows: int, ncols: int, p: int):
    """Basis of the nullspace of a (mod p)."""
    rows = [[a[i][j] % p for j in range(ncols)] for i in range(nrows)]
    pivots = _rref_mod_p(rows, ncols, p)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, c in pivots:
            v[c] = (-rows[r][free]) % p
        basis.append(tuple(v))
    return basis
