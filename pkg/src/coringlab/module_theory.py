"""Representation theory over structure-constant algebras: intertwiner
spaces, projectivity, simple submodules, socle and isotypic components.

Flatness is decided as projectivity here: for finite-dimensional modules
over a finite-dimensional algebra the two coincide, and every caller that
speaks of flatness routes through ``is_projective``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from coringlab import meataxe
from coringlab.algebra import Algebra, radical
from coringlab.bimodule import (
    LeftModule,
    ModuleMap,
    RightModule,
    quotient_module,
    restrict_module,
)
from coringlab.errors import DimensionMismatch, IndeterminateError
from coringlab.linalg import (
    Int,
    Subspace,
    all_vectors,
    eye,
    kron,
    matmul_mod,
    nullspace_matrix,
    rank,
    solve,
    subspace_sum,
    zeros,
)

OneSided = Union[LeftModule, RightModule]


@dataclass
class HomSpace:
    source: OneSided
    target: OneSided
    basis: list[ModuleMap]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class DecompositionReport:
    """Simple constituents of the socle grouped by isomorphism class."""

    simples: list[tuple[Subspace, int]]  # (representative submodule, multiplicity)
    isotypic: list[Subspace]
    is_semisimple: bool


def _same_kind(m: OneSided, n: OneSided) -> None:
    if type(m) is not type(n) or m.algebra != n.algebra:
        raise DimensionMismatch("hom space needs the same algebra and sidedness")


def hom_space(m: OneSided, n: OneSided) -> HomSpace:
    """All intertwiners m -> n, via one stacked kernel computation."""
    _same_kind(m, n)
    p = m.p
    rows = []
    for i in range(m.algebra.dim):
        # X @ A_i - B_i @ X = 0 on row-major vec(X), X of shape (dim n, dim m)
        rows.append((kron(eye(n.dim), m.mats[i].T, p) - kron(n.mats[i], eye(m.dim), p)) % p)
    stacked = np.vstack(rows) if rows else zeros(0, n.dim * m.dim)
    basis_vecs = nullspace_matrix(stacked, p)
    maps = [ModuleMap(m, n, v.reshape(n.dim, m.dim), validate=False) for v in basis_vecs]
    return HomSpace(m, n, maps)


def projectivity_section(m: OneSided) -> Optional[np.ndarray]:
    """A module-linear section of the canonical surjection A^d -> m.

    For a left module the surjection sends (a_1..a_d) to sum a_i * b_i over
    the basis b_i of m; a section exists iff m is projective.  Returns the
    stacked section matrix (d*dimA x dim m) or None.
    """
    alg = m.algebra
    p = m.p
    d, da = m.dim, alg.dim
    if d == 0:
        return zeros(0, 0)
    left = isinstance(m, LeftModule)
    reg = alg.left_mats if left else alg.right_mats
    # pi: A^d -> m, block i holds a -> a * b_i (resp. b_i * a)
    pi = zeros(d, d * da)
    for i in range(d):
        for j in range(da):
            pi[:, i * da + j] = m.mats[j][:, i]
    # unknown sigma: m -> A^d, blocks sigma_i of shape (da, d); constraints:
    #   sigma_i @ M_j = Reg_j @ sigma_i  (module-linearity)
    #   sum_i pi_block_i @ sigma_i = identity
    nvar = d * da * d
    lin_rows = []
    for i in range(d):
        for j in range(da):
            block = (kron(eye(da), m.mats[j].T, p) - kron(reg[j], eye(d), p)) % p
            wide = zeros(block.shape[0], nvar)
            wide[:, i * da * d : (i + 1) * da * d] = block
            lin_rows.append(wide)
    # composition rows: vec(pi_block_i @ sigma_i) summed over i equals vec(I)
    eq_rows = zeros(d * d, nvar)
    for i in range(d):
        blk = pi[:, i * da : (i + 1) * da]  # (d, da)
        eq_rows[:, i * da * d : (i + 1) * da * d] = kron(blk, eye(d), p)
    top = np.vstack(lin_rows) if lin_rows else zeros(0, nvar)
    system = np.vstack([top, eq_rows])
    target = np.concatenate([zeros(1, top.shape[0])[0], eye(d).ravel()])
    x = solve(system, target, p)
    if x is None:
        return None
    return x.reshape(d * da, d)


def is_projective(m: OneSided) -> bool:
    """True iff the canonical surjection A^d -> m splits module-linearly."""
    return projectivity_section(m) is not None


def simple_submodule(m: OneSided, seed: int = 0) -> Subspace:
    """An action-stable subspace with no proper nonzero stable subspace."""
    if m.dim == 0:
        raise ValueError("the zero module has no simple submodule")
    p = m.p
    gens = [np.ascontiguousarray(g) for g in m.mats]
    basis = eye(m.dim)
    depth = 0
    while True:
        sub = meataxe.find_stable_subspace(gens, p, seed=seed + depth)
        if sub is None:
            return Subspace.from_vectors(basis, m.dim, p)
        gens = meataxe.restrict_gens(gens, sub, p)
        basis = matmul_mod(sub.basis, basis, p)
        depth += 1


def socle(m: OneSided, seed: int = 0) -> Subspace:
    """{v : rad(A) * v = 0}, the largest semisimple submodule."""
    p = m.p
    if m.dim == 0:
        return Subspace.zero(0, p)
    rad = radical(m.algebra, seed=seed)
    if rad.dim == 0:
        return Subspace.full(m.dim, p)
    mats = [np.tensordot(x, m.mats, axes=(0, 0)) % p for x in rad.space.basis]
    stacked = np.vstack(mats)
    return Subspace.from_vectors(nullspace_matrix(stacked, p), m.dim, p)


def _restricted(m: OneSided, s: Subspace) -> OneSided:
    sub, _ = restrict_module(m, s)
    return sub


def _image_sum(maps: list[ModuleMap], ambient: int, p: int) -> Subspace:
    vecs = []
    for h in maps:
        vecs.extend(h.matrix.T)  # columns span the image
    return Subspace.from_vectors(vecs, ambient, p) if vecs else Subspace.zero(ambient, p)


def isotypic_decomposition(m: OneSided, seed: int = 0) -> DecompositionReport:
    """Chop the socle into isotypic components.

    Components are sums of images of hom(S, socle) for representative
    simples S; their independence and exhaustion of the socle is asserted.
    """
    p = m.p
    soc = socle(m, seed=seed)
    if soc.dim == 0:
        return DecompositionReport([], [], is_semisimple=(m.dim == 0))
    socmod = _restricted(m, soc)
    covered = Subspace.zero(soc.dim, p)
    simples: list[tuple[Subspace, int]] = []
    isotypic: list[Subspace] = []
    guard = 0
    while covered.dim < soc.dim:
        guard += 1
        assert guard <= soc.dim + 1
        if covered.dim == 0:
            probe = socmod
            lift = eye(soc.dim)
        else:
            probe, proj = quotient_module(socmod, covered)
            lift = proj
        s_in_probe = simple_submodule(probe, seed=seed + guard)
        s_mod = _restricted(probe, s_in_probe)
        homs = hom_space(s_mod, socmod)
        comp_in_soc = _image_sum(homs.basis, soc.dim, p)
        assert comp_in_soc.dim % s_in_probe.dim == 0
        mult = comp_in_soc.dim // s_in_probe.dim
        rep = None
        for h in homs.basis:
            if rank(h.matrix, p) == s_in_probe.dim:
                rep = Subspace.from_vectors(h.matrix.T, soc.dim, p)
                break
        assert rep is not None, "no injective hom from a simple (Schur violation)"
        simples.append((_to_ambient(rep, soc, p), mult))
        isotypic.append(_to_ambient(comp_in_soc, soc, p))
        new_covered = subspace_sum(covered, comp_in_soc)
        assert new_covered.dim == covered.dim + comp_in_soc.dim, "isotypic components overlap"
        covered = new_covered
    assert covered.dim == soc.dim
    return DecompositionReport(simples, isotypic, is_semisimple=(soc.dim == m.dim))


def _to_ambient(sub_in_socle: Subspace, soc: Subspace, p: int) -> Subspace:
    vecs = matmul_mod(sub_in_socle.basis, soc.basis, p)
    return Subspace.from_vectors(vecs, soc.ambient, p)


def modules_isomorphic(
    m: OneSided,
    n: OneSided,
    seed: int = 0,
    trials: int = 64,
    budget: int = 3**12,
) -> bool:
    """True iff some element of hom(m, n) is invertible.

    Random invertibility trials first, exhaustive search over the hom
    space when its size fits the budget; raises IndeterminateError rather
    than answering False when the budget is exceeded.
    """
    _same_kind(m, n)
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    h = hom_space(m, n)
    if h.dim == 0:
        return False
    p = m.p
    mats = np.array([hm.matrix for hm in h.basis], dtype=Int)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeff = rng.integers(0, p, size=h.dim)
        cand = np.tensordot(coeff, mats, axes=(0, 0)) % p
        if rank(cand, p) == m.dim:
            return True
    if p**h.dim <= budget:
        for coeff in all_vectors(p, h.dim, limit=budget):
            cand = np.tensordot(coeff, mats, axes=(0, 0)) % p
            if rank(cand, p) == m.dim:
                return True
        return False
    raise IndeterminateError(
        f"isomorphism search budget exceeded (hom dim {h.dim} over GF({p}))"
    )
