# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense elimination kernels (int64).

Same contracts as rtoric._kernels_py: dense_rank_mod_p consumes an int64
array; dense_snf returns the unnormalized nonzero Smith diagonal, or None
when entries outgrow the guarded range (the caller then redoes the core
with the arbitrary-precision pure kernel).

All entries are kept below 2**30 in dense_snf, so every product in a row or
column update stays below 2**61 and int64 arithmetic is exact.
"""

import numpy as np

cimport cython
cimport numpy as cnp

cnp.import_array()

cdef long long GUARD = 1073741824  # 2**30


def dense_rank_mod_p(cnp.ndarray[cnp.int64_t, ndim=2] a, long long p):
    if p <= 1 or p > 2147483647:
        raise ValueError("modulus out of supported range")
    cdef cnp.ndarray[cnp.int64_t, ndim=2] m = np.remainder(a, p)
    cdef long long[:, ::1] v = m
    cdef Py_ssize_t nrows = v.shape[0], ncols = v.shape[1]
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef long long inv, f, tmp
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if v[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, ncols):
                tmp = v[rank, j]
                v[rank, j] = v[piv, j]
                v[piv, j] = tmp
        inv = pow(int(v[rank, col]), p - 2, p)
        if inv != 1:
            for j in range(col, ncols):
                v[rank, j] = v[rank, j] * inv % p
        for i in range(rank + 1, nrows):
            f = v[i, col]
            if f != 0:
                for j in range(col, ncols):
                    v[i, j] = (v[i, j] - f * v[rank, j]) % p
                    if v[i, j] < 0:
                        v[i, j] += p
        rank += 1
    return rank


cdef bint _swap_smaller_row(long long[:, ::1] v, Py_ssize_t t, Py_ssize_t nrows, Py_ssize_t ncols):
    """Bring the smallest nonzero column-t remainder below the pivot into
    the pivot slot; returns True if a swap happened."""
    cdef Py_ssize_t i, j, bi = -1
    cdef long long best, val, tmp
    best = v[t, t] if v[t, t] > 0 else -v[t, t]
    for i in range(t + 1, nrows):
        val = v[i, t]
        if val < 0:
            val = -val
        if val != 0 and (best == 0 or val < best):
            best = val
            bi = i
    if bi < 0:
        return False
    for j in range(t, ncols):
        tmp = v[t, j]
        v[t, j] = v[bi, j]
        v[bi, j] = tmp
    if v[t, t] < 0:
        for j in range(t, ncols):
            v[t, j] = -v[t, j]
    return True


def dense_snf(cnp.ndarray[cnp.int64_t, ndim=2] a):
    """Nonzero diagonal of a Smith reduction, or None on guard overflow."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] m = np.ascontiguousarray(a, dtype=np.int64).copy()
    cdef long long[:, ::1] v = m
    cdef Py_ssize_t nrows = v.shape[0], ncols = v.shape[1]
    cdef Py_ssize_t t = 0, i, j, bi, bj, limit
    cdef long long best, val, pivot, q, tmp
    cdef bint dirty
    for i in range(nrows):
        for j in range(ncols):
            val = v[i, j]
            if val > GUARD or val < -GUARD:
                return None
    diag = []
    limit = nrows if nrows < ncols else ncols
    while t < limit:
        best = 0
        bi = -1
        bj = -1
        for i in range(t, nrows):
            for j in range(t, ncols):
                val = v[i, j]
                if val != 0:
                    if val < 0:
                        val = -val
                    if best == 0 or val < best:
                        best = val
                        bi = i
                        bj = j
                        if best == 1:
                            break
            if best == 1:
                break
        if bi < 0:
            break
        if bi != t:
            for j in range(t, ncols):
                tmp = v[t, j]
                v[t, j] = v[bi, j]
                v[bi, j] = tmp
        if bj != t:
            for i in range(t, nrows):
                tmp = v[i, t]
                v[i, t] = v[i, bj]
                v[i, bj] = tmp
        if v[t, t] < 0:
            for j in range(t, ncols):
                v[t, j] = -v[t, j]
        while True:
            pivot = v[t, t]
            dirty = False
            for i in range(t + 1, nrows):
                val = v[i, t]
                if val != 0:
                    q = val // pivot
                    if q != 0:
                        for j in range(t, ncols):
                            v[i, j] = v[i, j] - q * v[t, j]
                            if v[i, j] > GUARD or v[i, j] < -GUARD:
                                return None
                    if v[i, t] != 0:
                        dirty = True
            if dirty:
                _swap_smaller_row(v, t, nrows, ncols)
                continue
            pivot = v[t, t]
            dirty = False
            for j in range(t + 1, ncols):
                val = v[t, j]
                if val != 0:
                    q = val // pivot
                    if q != 0:
                        for i in range(t, nrows):
                            v[i, j] = v[i, j] - q * v[i, t]
                            if v[i, j] > GUARD or v[i, j] < -GUARD:
                                return None
                    if v[t, j] != 0:
                        dirty = True
            if dirty:
                # column remainders: swap the smallest into the pivot column
                best = v[t, t] if v[t, t] > 0 else -v[t, t]
                bj = -1
                for j in range(t + 1, ncols):
                    val = v[t, j]
                    if val < 0:
                        val = -val
                    if val != 0 and (best == 0 or val < best):
                        best = val
                        bj = j
                if bj >= 0:
                    for i in range(t, nrows):
                        tmp = v[i, t]
                        v[i, t] = v[i, bj]
                        v[i, bj] = tmp
                    if v[t, t] < 0:
                        for j in range(t, ncols):
                            v[t, j] = -v[t, j]
                continue
            break
        diag.append(int(v[t, t]))
        t += 1
    return diag
