"""Pure-numpy Gauss-Jordan engine, the fallback when the compiled kernel
is unavailable.  Semantics match ``coringlab._rowred`` exactly."""

from __future__ import annotations

import numpy as np


def rref_inplace(m: np.ndarray, p: int) -> tuple[list[int], np.ndarray]:
    """Reduce ``m`` to its unique RREF mod p, in place.

    Returns (pivot_columns, perm) where perm[i] is the original index of
    the row now sitting at position i.
    """
    rows, cols = m.shape
    perm = np.arange(rows, dtype=np.int64)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i], c:] = m[[i, r], c:]
            perm[[r, i]] = perm[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        if inv != 1:
            m[r, c:] = (m[r, c:] * inv) % p
        coeff = m[:, c].copy()
        coeff[r] = 0
        nzr = np.nonzero(coeff)[0]
        if nzr.size:
            m[nzr[:, None], np.arange(c, cols)[None, :]] = (
                m[nzr, c:] - np.outer(coeff[nzr], m[r, c:])
            ) % p
        pivots.append(c)
        r += 1
    return pivots, perm
