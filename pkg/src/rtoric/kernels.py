"""Exact elimination kernels with backend selection.

The compiled extension (rtoric._kernels_cy) is used when importable; the
pure implementation otherwise, or when RTORIC_BACKEND=pure is set.  Both
expose the same dense primitives; this module adds the shared sparse
front-end that eliminates cheap pivots before densifying the remainder.

Integer results are always exact: the compiled Smith kernel works in int64
behind a growth guard and signals overflow by returning None, after which
the arbitrary-precision pure kernel redoes the (already shrunken) core.
"""

from __future__ import annotations

import heapq
import os

import numpy as np

from . import _kernels_py

if os.environ.get("RTORIC_BACKEND", "").lower() == "pure":
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels_cy as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

# sparse elimination stops once the active block is this dense or this small
_DENSITY_CAP = 0.12
_SMALL_BLOCK = 48
_GROWTH_GUARD = 1 << 30


def _sparse_phase(nrows, ncols, entries, p=None):
    """Eliminate cheap pivots on a dict-of-dicts copy of the matrix.

    p=None runs over Z and only pivots on +-1 entries (those eliminations
    are unimodular, so they contribute exact unit invariant factors); with a
    prime p any nonzero pivot is used.  Returns (pivot count, remaining rows
    as {row: {col: value}}, flag for entries beyond the int64-safe range).
    """
    rows: dict = {}
    cols: dict = {}
    for (r, c), v in entries.items():
        if p is not None:
            v %= p
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
    heap = [(len(rs), c) for c, rs in cols.items()]
    heapq.heapify(heap)
    npivots = 0
    big = False
    nnz = sum(len(r) for r in rows.values())
    while heap:
        size, c = heapq.heappop(heap)
        col_rows = cols.get(c)
        if col_rows is None or len(col_rows) != size:
            if col_rows:
                heapq.heappush(heap, (len(col_rows), c))
            continue
        active_r = len(rows)
        active_c = len(cols)
        if min(active_r, active_c) <= _SMALL_BLOCK and max(active_r, active_c) <= 4 * _SMALL_BLOCK:
            break
        if nnz > _DENSITY_CAP * active_r * active_c:
            break
        pick = None
        for r in col_rows:
            v = rows[r][c]
            if p is None and v != 1 and v != -1:
                continue
            key = (len(rows[r]), r)
            if pick is None or key < pick[0]:
                pick = (key, r)
        if pick is None:
            # no unit entry in this column right now; updates re-queue it
            continue
        r = pick[1]
        pivot_row = rows.pop(r)
        pivot_val = pivot_row[c]
        for cc in pivot_row:
            cols[cc].discard(r)
        targets = [rr for rr in cols[c] if rr != r]
        if p is not None:
            inv = pow(pivot_val, p - 2, p)
        for rr in targets:
            row = rows[rr]
            if p is None:
                q = row[c] * pivot_val  # pivot is +-1
            else:
                q = row[c] * inv % p
            for cc, pv in pivot_row.items():
                cur = row.get(cc, 0) - q * pv
                if p is not None:
                    cur %= p
                if cur:
                    if cc not in row:
                        nnz += 1
                        cols.setdefault(cc, set()).add(rr)
                        heapq.heappush(heap, (len(cols[cc]), cc))
                    row[cc] = cur
                    if p is None and (cur > _GROWTH_GUARD or cur < -_GROWTH_GUARD):
                        big = True
                elif cc in row:
                    del row[cc]
                    nnz -= 1
                    cset = cols.get(cc)
                    cset.discard(rr)
                    if cset:
                        heapq.heappush(heap, (len(cset), cc))
                    else:
                        del cols[cc]
            if not row:
                del rows[rr]
        nnz -= len(pivot_row)
        for cc in list(pivot_row):
            cset = cols.get(cc)
            if cset is not None and not cset:
                del cols[cc]
        npivots += 1
    return npivots, rows, big


def _densify(rows, p=None, big=False):
    """Compact the sparse remainder to a dense matrix.

    Returns a numpy int64 array unless big (then lists of Python ints)."""
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    col_ids = sorted({c for row in rows.values() for c in row})
    col_pos = {c: i for i, c in enumerate(col_ids)}
    if big:
        out = [[0] * len(col_ids) for _ in rows]
        for i, r in enumerate(sorted(rows)):
            for c, v in rows[r].items():
                out[i][col_pos[c]] = v
        return out
    out = np.zeros((len(rows), len(col_ids)), dtype=np.int64)
    for i, r in enumerate(sorted(rows)):
        for c, v in rows[r].items():
            out[i, col_pos[c]] = v
    return out


def rank_mod_p(nrows, ncols, entries, p: int) -> int:
    """Rank over F_p of a sparse integer matrix."""
    if not entries:
        return 0
    npivots, rest, _ = _sparse_phase(nrows, ncols, entries, p=p)
    if not rest:
        return npivots
    core = _densify(rest, p=p)
    return npivots + _impl.dense_rank_mod_p(core, p)


def invariant_factors(nrows, ncols, entries) -> list:
    """Invariant factors d1 | d2 | ... (positive, no zeros) of an integer
    matrix; the number of factors is the rank over Q."""
    if not entries:
        return []
    npivots, rest, big = _sparse_phase(nrows, ncols, entries, p=None)
    factors = [1] * npivots
    if rest:
        core = _densify(rest, big=big)
        if big:
            diag = _kernels_py.dense_snf(core)
        else:
            diag = _impl.dense_snf(core)
            if diag is None:  # compiled kernel hit the growth guard
                diag = _kernels_py.dense_snf(_densify(rest, big=True))
        factors.extend(_kernels_py.chainify(diag))
    return factors


def rref_mod_p(nrows, ncols, entries, p: int):
    """Reduced row echelon form over F_p of a sparse matrix, dense output.

    Not a hot path (used for ring tables on small complexes)."""
    a = np.zeros((nrows, ncols), dtype=np.int64)
    for (r, c), v in entries.items():
        a[r, c] = v % p
    return _kernels_py.dense_rref_mod_p(a, p)
