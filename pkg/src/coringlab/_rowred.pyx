# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan engine for int64 matrices modulo a prime.

Must stay behaviourally identical to ``coringlab._rowred_py``; the test
suite compares both on random inputs.
"""

import numpy as np


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long r0 = p, r1 = a % p
    cdef long long t0 = 0, t1 = 1
    cdef long long q, tmp
    while r1 != 0:
        q = r0 / r1
        tmp = r0 - q * r1
        r0 = r1
        r1 = tmp
        tmp = t0 - q * t1
        t0 = t1
        t1 = tmp
    if t0 < 0:
        t0 += p
    return t0


def rref_inplace(long long[:, ::1] m, long long p):
    """Reduce ``m`` to its unique RREF mod p, in place.

    Returns (pivot_columns, perm) where perm[i] is the original index of
    the row now sitting at position i.
    """
    cdef Py_ssize_t rows = m.shape[0]
    cdef Py_ssize_t cols = m.shape[1]
    perm_arr = np.arange(rows, dtype=np.int64)
    cdef long long[::1] perm = perm_arr
    pivots = []
    cdef Py_ssize_t r = 0, c, i, j, prow
    cdef long long inv, f, v
    for c in range(cols):
        if r == rows:
            break
        prow = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                prow = i
                break
        if prow < 0:
            continue
        if prow != r:
            for j in range(c, cols):
                v = m[r, j]
                m[r, j] = m[prow, j]
                m[prow, j] = v
            v = perm[r]
            perm[r] = perm[prow]
            perm[prow] = v
        inv = _inv_mod(m[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = m[i, c]
            if f != 0:
                for j in range(c, cols):
                    v = (m[i, j] - f * m[r, j]) % p
                    if v < 0:
                        v += p
                    m[i, j] = v
        pivots.append(c)
        r += 1
    return pivots, perm_arr
