"""MeatAxe-style machinery for matrix algebras over GF(p).

Works with raw generator lists (d x d matrices); the module-level API in
``module_theory`` wraps these for typed modules.  The irreducibility test
follows Norton's criterion: a random element of the generated algebra is
sampled, its minimal polynomial factored, and nullspace vectors of the
irreducible factors are spun.  A minimal-nullity factor whose spin fills
the space on both the module and its transpose certifies irreducibility.
Proper stable subspaces are returned as soon as any spin finds one.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from coringlab.errors import IndeterminateError
from coringlab.linalg import (
    Int,
    RrefAccumulator,
    Subspace,
    asmat,
    eye,
    matmul_mod,
    nullspace_matrix,
    solve_matrix,
    vector_blocks,
)

_EXHAUSTIVE_LIMIT = 1 << 16


def spin(vectors, gens: Sequence[np.ndarray], p: int) -> Subspace:
    """Closure of the span of ``vectors`` under the generator action."""
    d = gens[0].shape[0] if gens else len(np.atleast_2d(vectors)[0])
    acc = RrefAccumulator(d, p)
    queue = [np.asarray(v, dtype=Int) % p for v in np.atleast_2d(vectors)]
    queue = [v for v in queue if acc.add(v)]
    while queue and acc.dim < d:
        v = queue.pop()
        for g in gens:
            w = (g @ v) % p
            if acc.add(w):
                queue.append(w)
    return acc.to_subspace()


def minimal_polynomial(theta: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of ``theta`` mod p, ascending coefficients."""
    d = theta.shape[0]
    acc = RrefAccumulator(d * d, p)
    powers = [eye(d)]
    acc.add(powers[0].ravel())
    while True:
        nxt = matmul_mod(powers[-1], theta, p)
        if not acc.add(nxt.ravel()):
            k = len(powers)
            basis = np.stack([m.ravel() for m in powers], axis=1)
            coeffs = solve_matrix(basis, nxt.ravel().reshape(-1, 1), p)
            assert coeffs is not None
            poly = [(-int(c)) % p for c in coeffs[:, 0]] + [1]
            return poly
        powers.append(nxt)


def factor_poly(poly_ascending: list[int], p: int) -> list[tuple[list[int], int]]:
    """Irreducible factors over GF(p): list of (ascending coeffs, mult)."""
    desc = [int(c) % p for c in reversed(poly_ascending)]
    _, factors = gf_factor(ZZ.map(desc), p, ZZ)
    return [([int(c) % p for c in reversed(f)], m) for f, m in factors]


def poly_apply(poly_ascending: Sequence[int], theta: np.ndarray, p: int) -> np.ndarray:
    """Evaluate a polynomial at a matrix (Horner)."""
    d = theta.shape[0]
    out = np.zeros((d, d), dtype=Int)
    for c in reversed(list(poly_ascending)):
        out = matmul_mod(out, theta, p)
        if c % p:
            out = (out + (c % p) * eye(d)) % p
    return out


def random_algebra_element(gens: Sequence[np.ndarray], p: int, rng) -> np.ndarray:
    """A random element of the unital algebra generated by ``gens``."""
    d = gens[0].shape[0]
    pool = list(gens) + [eye(d)]
    theta = np.zeros((d, d), dtype=Int)
    for g in pool:
        theta = (theta + int(rng.integers(0, p)) * g) % p
    for _ in range(int(rng.integers(1, 4))):
        a = pool[int(rng.integers(0, len(pool)))]
        b = pool[int(rng.integers(0, len(pool)))]
        theta = (theta + int(rng.integers(1, p)) * matmul_mod(a, b, p)) % p
    return theta


def _perp(sub: Subspace, p: int) -> Subspace:
    basis = nullspace_matrix(sub.basis, p)
    return Subspace.from_vectors(basis, sub.ambient, p)


def find_stable_subspace(
    gens: Sequence[np.ndarray],
    p: int,
    seed: int = 0,
    tries: int = 48,
) -> Optional[Subspace]:
    """A proper nonzero subspace stable under every generator, or None
    when the module is (provably) irreducible.

    Deterministic for a fixed seed.  Raises IndeterminateError when no
    Norton certificate appears within the budget and the dimension is too
    large for exhaustive vector enumeration (not expected at this scale).
    """
    gens = [asmat(g, p) for g in gens]
    d = gens[0].shape[0]
    if d == 0:
        raise ValueError("zero module has no stable-subspace structure")
    if d == 1:
        return None
    rng = np.random.default_rng(seed)

    probes = [eye(d)[i] for i in range(min(d, 4))]
    probes += [rng.integers(0, p, size=d) for _ in range(3)]
    for v in probes:
        if not np.asarray(v).any():
            continue
        w = spin([v], gens, p)
        if 0 < w.dim < d:
            return w

    gens_t = [np.ascontiguousarray(g.T) for g in gens]
    for _ in range(tries):
        theta = random_algebra_element(gens, p, rng)
        minpoly = minimal_polynomial(theta, p)
        factors = sorted(factor_poly(minpoly, p), key=lambda fm: len(fm[0]))
        for f, _mult in factors:
            deg = len(f) - 1
            a_f = poly_apply(f, theta, p)
            kern = nullspace_matrix(a_f, p)
            if kern.shape[0] == 0:
                continue
            for v in kern[: min(3, kern.shape[0])]:
                w = spin([v], gens, p)
                if w.dim < d:
                    return w
            if kern.shape[0] == deg:
                kern_t = nullspace_matrix(a_f.T, p)
                wt = spin([kern_t[0]], gens_t, p)
                if wt.dim < d:
                    sub = _perp(wt, p)
                    assert 0 < sub.dim < d
                    return sub
                return None  # Norton certificate: irreducible

    if p**d <= _EXHAUSTIVE_LIMIT:
        for block in vector_blocks(p, d):
            for v in block:
                if not v.any():
                    continue
                w = spin([v], gens, p)
                if w.dim < d:
                    return w
        return None
    raise IndeterminateError(
        f"meataxe budget exhausted on a dim-{d} module over GF({p})"
    )


def is_irreducible(gens: Sequence[np.ndarray], p: int, seed: int = 0) -> bool:
    return find_stable_subspace(gens, p, seed=seed) is None


def restrict_gens(
    gens: Sequence[np.ndarray], sub: Subspace, p: int
) -> list[np.ndarray]:
    """Action matrices on a stable subspace, in its basis coordinates."""
    bt = np.ascontiguousarray(sub.basis.T)
    out = []
    for g in gens:
        img = matmul_mod(g, bt, p)
        x = solve_matrix(bt, img, p)
        if x is None:
            raise ValueError("subspace is not stable under the generators")
        out.append(x)
    return out


def quotient_gens(
    gens: Sequence[np.ndarray], sub: Subspace, p: int
) -> tuple[list[np.ndarray], np.ndarray]:
    """Action on the quotient by a stable subspace.

    Returns (gens_on_quotient, projection); representatives are the
    non-pivot coordinates of the subspace basis.
    """
    d = sub.ambient
    piv = set(sub.pivots)
    free = [c for c in range(d) if c not in piv]
    proj = np.zeros((len(free), d), dtype=Int)
    for i, c in enumerate(free):
        proj[i, c] = 1
    if sub.dim:
        proj[:, sub.pivots] = (-sub.basis[:, free].T) % p
    sect = np.zeros((d, len(free)), dtype=Int)
    for i, c in enumerate(free):
        sect[c, i] = 1
    out = [matmul_mod(matmul_mod(proj, g, p), sect, p) for g in gens]
    return out, proj


def composition_factors(
    gens: Sequence[np.ndarray], p: int, seed: int = 0
) -> list[list[np.ndarray]]:
    """Generator lists of the composition factors (abstract modules).

    The generator lists stay index-aligned with the input, so annihilator
    computations against an algebra basis remain meaningful.
    """
    gens = [asmat(g, p) for g in gens]
    d = gens[0].shape[0]
    if d == 0:
        return []
    sub = find_stable_subspace(gens, p, seed=seed)
    if sub is None:
        return [list(gens)]
    below = composition_factors(restrict_gens(gens, sub, p), p, seed + 1)
    above = composition_factors(quotient_gens(gens, sub, p)[0], p, seed + 2)
    return below + above
