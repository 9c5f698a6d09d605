"""Pure-Python dense elimination kernels.

Fallback used when the compiled extension is missing (or forced via
RTORIC_BACKEND=pure).  Mod-p elimination vectorizes row updates with numpy
(int64 is safe: entries stay below p < 2**31, products below 2**62).  The
Smith reduction works on Python lists of arbitrary-precision ints, so it
never overflows; it is the correctness path the compiled kernel falls back
to on entry growth.
"""

from __future__ import annotations

from math import gcd

import numpy as np


def dense_rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an int64 matrix mod p (a is consumed)."""
    a = np.remainder(a, p)
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = a[rank] * inv % p
        below = np.nonzero(a[rank + 1 :, col])[0] + rank + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, col], a[rank])) % p
        rank += 1
    return rank


def dense_rref_mod_p(a: np.ndarray, p: int):
    """Full reduced row echelon form mod p.

    Returns (pivot column list, reduced rows as a list of int lists with the
    zero rows dropped)."""
    a = np.remainder(a, p)
    nrows, ncols = a.shape
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = a[rank] * inv % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, col], a[rank])) % p
        pivots.append(col)
        rank += 1
    return pivots, [[int(v) for v in a[i]] for i in range(rank)]


def dense_snf_diagonal(rows):
    """Diagonal of a Smith reduction of an integer matrix.

    `rows` is a list of lists of Python ints (consumed).  Returns the list of
    nonzero diagonal entries after full row/column reduction; divisibility
    normalization is left to the caller.  Never overflows."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    diag = []
    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        best = None
        best_val = None
        for i in range(t, nrows):
            row = rows[i]
            for j in range(t, ncols):
                v = row[j]
                if v:
                    a = abs(v)
                    if best_val is None or a < best_val:
                        best_val = a
                        best = (i, j)
                        if a == 1:
                            break
            if best_val == 1:
                break
        if best is None:
            break
        i, j = best
        if i != t:
            rows[i], rows[t] = rows[t], rows[i]
        if j != t:
            for row in rows:
                row[j], row[t] = row[t], row[j]
        if rows[t][t] < 0:
            rows[t] = [-v for v in rows[t]]
        while True:
            pivot = rows[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                v = rows[i][t]
                if v:
                    q = v // pivot
                    if q:
                        ri, rt = rows[i], rows[t]
                        rows[i] = [a - q * b for a, b in zip(ri, rt)]
                    if rows[i][t]:
                        dirty = True
            if dirty:
                # a remainder smaller than the pivot appeared; re-pick it
                for i in range(t + 1, nrows):
                    if rows[i][t] and abs(rows[i][t]) < abs(rows[t][t]):
                        rows[i], rows[t] = rows[t], rows[i]
                if rows[t][t] < 0:
                    rows[t] = [-v for v in rows[t]]
                continue
            pivot = rows[t][t]
            col_dirty = False
            rt = rows[t]
            for j in range(t + 1, ncols):
                v = rt[j]
                if v:
                    q = v // pivot
                    if q:
                        for row in rows:
                            row[j] -= q * row[t]
                    if rt[j]:
                        col_dirty = True
            if col_dirty:
                for j in range(t + 1, ncols):
                    if rt[j] and abs(rt[j]) < abs(rt[t]):
                        for row in rows:
                            row[j], row[t] = row[t], row[j]
                if rows[t][t] < 0:
                    rows[t] = [-v for v in rows[t]]
                continue
            break
        diag.append(rows[t][t])
        t += 1
    return diag


def dense_snf(a) -> list:
    """Entry point matching the compiled kernel: accepts an int64 numpy array
    or a list of lists, returns the (unnormalized) nonzero diagonal."""
    if isinstance(a, np.ndarray):
        rows = [[int(v) for v in row] for row in a]
    else:
        rows = [list(map(int, row)) for row in a]
    return dense_snf_diagonal(rows)


def chainify(diag):
    """Normalize a diagonal to the invariant-factor chain d1 | d2 | ..."""
    d = sorted(abs(v) for v in diag if v)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] // g * d[j]
                    changed = True
        if changed:
            d.sort()
    return d


def dense_snf_with_transforms(rows):
    """Smith form with unimodular transforms: returns (factors, U, V) with
    U * M * V diagonal, diagonal = factors padded with zeros.

    Dense, arbitrary precision, tracked transforms; intended for small
    matrices and debug verification, not for the hot path."""
    rows = [list(map(int, r)) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_op(i, k, q):  # row_i -= q * row_k
        rows[i] = [a - q * b for a, b in zip(rows[i], rows[k])]
        u[i] = [a - q * b for a, b in zip(u[i], u[k])]

    def col_op(j, k, q):  # col_j -= q * col_k
        for row in rows:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    def row_swap(i, k):
        rows[i], rows[k] = rows[k], rows[i]
        u[i], u[k] = u[k], u[i]

    def col_swap(j, k):
        for row in rows:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def row_negate(i):
        rows[i] = [-a for a in rows[i]]
        u[i] = [-a for a in u[i]]

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        best = None
        best_val = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                val = rows[i][j]
                if val:
                    a = abs(val)
                    if best_val is None or a < best_val:
                        best_val, best = a, (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)
        if rows[t][t] < 0:
            row_negate(t)
        again = True
        while again:
            again = False
            pivot = rows[t][t]
            for i in range(t + 1, nrows):
                if rows[i][t]:
                    row_op(i, t, rows[i][t] // pivot)
                    if rows[i][t]:
                        row_swap(i, t)
                        if rows[t][t] < 0:
                            row_negate(t)
                        again = True
            pivot = rows[t][t]
            for j in range(t + 1, ncols):
                if rows[t][j]:
                    col_op(j, t, rows[t][j] // pivot)
                    if rows[t][j]:
                        col_swap(j, t)
                        if rows[t][t] < 0:
                            row_negate(t)
                        again = True
        t += 1
    # enforce the divisibility chain with tracked operations
    changed = True
    while changed:
        changed = False
        for i in range(t):
            for j in range(i + 1, t):
                if rows[j][j] % rows[i][i]:
                    # fold entry (j,j) into column i, then re-reduce the 2x2 block
                    col_op(i, j, -1)
                    pivot_round = True
                    while pivot_round:
                        pivot_round = False
                        if abs(rows[j][i]) and (rows[i][i] == 0 or abs(rows[j][i]) < abs(rows[i][i])):
                            row_swap(i, j)
                        if rows[i][i] < 0:
                            row_negate(i)
                        if rows[j][i]:
                            row_op(j, i, rows[j][i] // rows[i][i])
                            if rows[j][i]:
                                pivot_round = True
                    if rows[i][j]:
                        col_op(j, i, rows[i][j] // rows[i][i])
                    if rows[j][j] < 0:
                        row_negate(j)
                    changed = True
    factors = [rows[k][k] for k in range(t) if rows[k][k]]
    return factors, u, v
