"""Independent brute-force oracles used only by the test suite.

These deliberately avoid the algorithms they check: subspaces are found
by exhaustive enumeration of RREF bases, radicals by scanning for the
largest nilpotent two-sided ideal, socles by summing the minimal stable
subspaces.  Only feasible for dim <= 4 over tiny primes.
"""

from __future__ import annotations

from itertools import product as iproduct

import numpy as np

from coringlab.linalg import Int, Subspace, rref, subspace_sum


def all_subspaces(p: int, n: int) -> list[Subspace]:
    """Every subspace of GF(p)^n, one RREF basis per subspace.

    Enumerates pivot-column sets and all fillings of the free entries
    (columns right of the row's pivot that are not pivots themselves),
    which is in bijection with subspaces.
    """
    from itertools import combinations

    out = [Subspace.zero(n, p)]
    for k in range(1, n + 1):
        for pivots in combinations(range(n), k):
            free_slots = [
                (i, c)
                for i in range(k)
                for c in range(pivots[i] + 1, n)
                if c not in pivots
            ]
            for filling in iproduct(range(p), repeat=len(free_slots)):
                m = np.zeros((k, n), dtype=Int)
                for i, c in enumerate(pivots):
                    m[i, c] = 1
                for (i, c), v in zip(free_slots, filling):
                    m[i, c] = v
                r, piv = rref(m, p)
                assert list(piv) == list(pivots)
                out.append(Subspace(m, list(pivots), n, p))
    return out


def is_stable(space: Subspace, mats) -> bool:
    return all(
        space.contains_vector((g @ row) % space.p) for g in mats for row in space.basis
    )


def is_nilpotent_ideal(alg, space: Subspace) -> bool:
    p = alg.p
    if not is_stable(space, alg.left_mats) or not is_stable(space, alg.right_mats):
        return False
    current = space
    for _ in range(alg.dim + 1):
        if current.dim == 0:
            return True
        vecs = [alg.mul_vec(x, y) for x in current.basis for y in space.basis]
        current = Subspace.from_vectors(vecs, alg.dim, p)
        if current.dim >= space.dim and current == space:
            return False
    return current.dim == 0


def brute_force_radical(alg) -> Subspace:
    """The unique largest nilpotent two-sided ideal, by enumeration."""
    best = Subspace.zero(alg.dim, alg.p)
    for space in all_subspaces(alg.p, alg.dim):
        if space.dim > best.dim and is_nilpotent_ideal(alg, space):
            best = space
    return best


def brute_force_minimal_submodules(mats, p: int, n: int) -> list[Subspace]:
    """All minimal nonzero action-stable subspaces, by enumeration."""
    stable = [s for s in all_subspaces(p, n) if s.dim > 0 and is_stable(s, mats)]
    minimal = []
    for s in stable:
        if not any(t.dim < s.dim and s.contains(t) for t in stable):
            minimal.append(s)
    return minimal


def brute_force_socle(mats, p: int, n: int) -> Subspace:
    soc = Subspace.zero(n, p)
    for s in brute_force_minimal_submodules(mats, p, n):
        soc = subspace_sum(soc, s)
    return soc


def brute_force_is_simple(mats, p: int, n: int) -> bool:
    if n == 0:
        return False
    return all(
        not (0 < s.dim < n) or not is_stable(s, mats) for s in all_subspaces(p, n)
    )
