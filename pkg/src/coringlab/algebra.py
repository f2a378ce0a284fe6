"""Finite-dimensional unital associative GF(p)-algebras via structure
constants, with radical and (simple/semi)simplicity decisions.

Structure constants are stored as ``mul[i, j, k]``: the coefficient of
e_k in e_i * e_j.  Tables are validated eagerly at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from coringlab import meataxe
from coringlab.errors import DimensionMismatch, ValidationError
from coringlab.linalg import (
    Int,
    CoordSolver,
    PrimeField,
    RrefAccumulator,
    Subspace,
    asmat,
    asvec,
    eye,
    matmul_mod,
    nullspace_matrix,
    rank,
    subspace_intersect,
    zeros,
)

_REPORT_CAP = 20


class Algebra:
    """A unital associative algebra over GF(p), given by structure constants."""

    def __init__(self, p, mul, unit, *, names=None, validate: bool = True):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        pp = self.field.p
        self.mul = np.ascontiguousarray(np.asarray(mul, dtype=Int) % pp)
        if self.mul.ndim != 3 or len(set(self.mul.shape)) != 1:
            raise ValidationError(f"structure constants must be (d,d,d), got {self.mul.shape}")
        self.unit = asvec(unit, pp)
        if self.unit.shape[0] != self.mul.shape[0]:
            raise ValidationError("unit length does not match dimension")
        self.names = list(names) if names else None
        d = self.mul.shape[0]
        # left_mats[i] maps y -> e_i * y; right_mats[j] maps x -> x * e_j
        self.left_mats = np.ascontiguousarray(self.mul.transpose(0, 2, 1))
        self.right_mats = np.ascontiguousarray(self.mul.transpose(1, 2, 0))
        if validate:
            report = check_algebra(self)
            if report:
                raise ValidationError("algebra axioms fail", report)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return self.mul.shape[0]

    def mul_vec(self, x, y) -> np.ndarray:
        x = asvec(x, self.p)
        y = asvec(y, self.p)
        m = np.tensordot(x, self.mul, axes=(0, 0))  # (j, k)
        return (y @ m) % self.p

    def left_mat_of(self, x) -> np.ndarray:
        """Matrix of y -> x*y."""
        x = asvec(x, self.p)
        return np.tensordot(x, self.left_mats, axes=(0, 0)) % self.p

    def right_mat_of(self, y) -> np.ndarray:
        """Matrix of x -> x*y."""
        y = asvec(y, self.p)
        return np.tensordot(y, self.right_mats, axes=(0, 0)) % self.p

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, asvec(coords, self.p))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Algebra)
            and self.p == other.p
            and self.mul.shape == other.mul.shape
            and bool(np.array_equal(self.mul, other.mul))
            and bool(np.array_equal(self.unit, other.unit))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.mul.tobytes(), self.unit.tobytes()))

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, p={self.p})"


@dataclass
class AlgebraElement:
    parent: Algebra
    coords: np.ndarray

    def __post_init__(self):
        self.coords = asvec(self.coords, self.parent.p)
        if self.coords.shape[0] != self.parent.dim:
            raise DimensionMismatch("element coordinates do not match the algebra")


class Ideal:
    """A two-sided ideal, stored as a subspace closed under both actions."""

    def __init__(self, parent: Algebra, space: Subspace, *, validate: bool = True):
        self.parent = parent
        self.space = space
        if validate and not _is_two_sided_stable(parent, space):
            raise ValidationError("subspace is not a two-sided ideal")

    @property
    def dim(self) -> int:
        return self.space.dim


class AlgebraHom:
    """An algebra homomorphism given by its matrix on basis coordinates.

    Ring antimorphisms are represented as homomorphisms into the opposite
    algebra; construct the target with ``opposite`` first.
    """

    def __init__(self, source: Algebra, target: Algebra, matrix, *, validate: bool = True):
        self.source = source
        self.target = target
        self.matrix = asmat(matrix, target.p)
        if self.matrix.shape != (target.dim, source.dim):
            raise DimensionMismatch(
                f"hom matrix {self.matrix.shape} does not map dim {source.dim} to {target.dim}"
            )
        if validate:
            rep = self.check()
            if rep:
                raise ValidationError("not an algebra homomorphism", rep)

    def check(self) -> list[str]:
        p = self.target.p
        m = self.matrix
        lhs = np.einsum("ijm,km->ijk", self.source.mul, m) % p
        rhs = np.einsum("ai,bj,abk->ijk", m, m, self.target.mul) % p
        report = []
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere((lhs - rhs) % p != 0)
            for i, j, _ in bad[:_REPORT_CAP]:
                report.append(f"multiplicativity fails on basis pair ({i},{j})")
                break
        if not np.array_equal((m @ self.source.unit) % p, self.target.unit):
            report.append("unit is not preserved")
        return report

    def apply(self, x) -> np.ndarray:
        return matmul_mod(self.matrix, asvec(x, self.source.p).reshape(-1, 1), self.source.p)[:, 0]

    @property
    def injective(self) -> bool:
        return rank(self.matrix, self.target.p) == self.source.dim


def check_algebra(a: Algebra) -> list[str]:
    """Every violated associativity/unit identity; empty means valid."""
    p = a.p
    report: list[str] = []
    left = np.einsum("ijm,mkl->ijkl", a.mul, a.mul) % p
    right = np.einsum("jkm,iml->ijkl", a.mul, a.mul) % p
    diff = np.argwhere((left - right) % p != 0)
    seen = set()
    for i, j, k, _l in diff:
        key = (int(i), int(j), int(k))
        if key in seen:
            continue
        seen.add(key)
        if len(report) < _REPORT_CAP:
            report.append(f"associativity fails at basis triple {key}")
    lu = np.tensordot(a.unit, a.mul, axes=(0, 0)) % p  # (j, k): 1*e_j
    ru = np.tensordot(a.mul, a.unit, axes=(1, 0)) % p  # (i, k): e_i*1
    if not np.array_equal(lu, eye(a.dim)):
        report.append("left unit law fails")
    if not np.array_equal(ru, eye(a.dim)):
        report.append("right unit law fails")
    return report


def field_algebra(p: int) -> Algebra:
    return Algebra(p, np.ones((1, 1, 1), dtype=Int), [1])


def matrix_algebra(n: int, p: int) -> Algebra:
    """M_n(GF(p)) on the matrix-unit basis E_ij at index i*n+j."""
    if n < 1:
        raise ValueError("matrix_algebra needs n >= 1")
    d = n * n
    mul = zeros(d, d * d).reshape(d, d, d)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        mul[i * n + j, k * n + l, i * n + l] = 1
    unit = zeros(1, d)[0]
    for i in range(n):
        unit[i * n + i] = 1
    names = [f"E{i}{j}" for i in range(n) for j in range(n)]
    return Algebra(p, mul, unit, names=names)


def dual_numbers(p: int) -> Algebra:
    """GF(p)[x]/(x^2) on the basis {1, x}."""
    mul = zeros(2, 4).reshape(2, 2, 2)
    mul[0, 0, 0] = 1
    mul[0, 1, 1] = 1
    mul[1, 0, 1] = 1
    return Algebra(p, mul, [1, 0], names=["1", "x"])


def group_algebra_z2(p: int) -> Algebra:
    """GF(p)[g]/(g^2 - 1) on the basis {1, g}."""
    mul = zeros(2, 4).reshape(2, 2, 2)
    mul[0, 0, 0] = 1
    mul[0, 1, 1] = 1
    mul[1, 0, 1] = 1
    mul[1, 1, 0] = 1
    return Algebra(p, mul, [1, 0], names=["1", "g"])


def opposite(a: Algebra) -> Algebra:
    return Algebra(a.field, a.mul.transpose(1, 0, 2), a.unit, validate=False)


def product(a1: Algebra, a2: Algebra) -> Algebra:
    if a1.p != a2.p:
        raise DimensionMismatch("product of algebras over different primes")
    d1, d2 = a1.dim, a2.dim
    d = d1 + d2
    mul = zeros(d, d * d).reshape(d, d, d)
    mul[:d1, :d1, :d1] = a1.mul
    mul[d1:, d1:, d1:] = a2.mul
    unit = np.concatenate([a1.unit, a2.unit])
    return Algebra(a1.field, mul, unit, validate=False)


def upper_triangular_2x2(p: int) -> Algebra:
    """Upper-triangular 2x2 matrices on the basis {E11, E12, E22}."""
    m2 = matrix_algebra(2, p)
    basis = zeros(3, 4)
    basis[0, 0] = 1  # E11
    basis[1, 1] = 1  # E12
    basis[2, 3] = 1  # E22
    return subalgebra_on_basis(m2, basis).source


def subalgebra_generated(a: Algebra, gens, adjoin_unit: bool = False) -> Subspace:
    """Closure of the span of ``gens`` under multiplication.

    The unit is adjoined only on request; E11 inside M_2 generates the
    non-unital line span{E11}.
    """
    acc = RrefAccumulator(a.dim, a.p)
    seeds = [asvec(g, a.p) for g in np.atleast_2d(np.asarray(gens, dtype=Int))]
    if adjoin_unit:
        seeds.append(a.unit)
    for v in seeds:
        acc.add(v)
    changed = True
    while changed:
        changed = False
        basis = [row.copy() for row in acc.rows]
        for x in basis:
            for y in basis:
                if acc.add(a.mul_vec(x, y)):
                    changed = True
    return acc.to_subspace()


def subalgebra_on_basis(a: Algebra, basis_rows) -> AlgebraHom:
    """The unital subalgebra spanned by ``basis_rows``, as an inclusion hom.

    Raises when the span is not closed under multiplication or does not
    contain the unit.
    """
    basis = asmat(basis_rows, a.p)
    solver = CoordSolver(basis, a.p)
    k = basis.shape[0]
    mul = zeros(k, k * k).reshape(k, k, k)
    try:
        for i in range(k):
            for j in range(k):
                mul[i, j] = solver.coords(a.mul_vec(basis[i], basis[j]))
        unit = solver.coords(a.unit)
    except ValueError as exc:
        raise ValidationError(f"not a unital subalgebra: {exc}") from exc
    sub = Algebra(a.field, mul, unit)
    return AlgebraHom(sub, a, basis.T)


def triangular_algebra(r: Algebra, s: Algebra, b) -> tuple[Algebra, Ideal]:
    """Generalized triangular matrix ring [[R, B], [0, S]].

    ``b`` is a bimodule with left R-action and right S-action; returns the
    ring A together with the ideal I = [[R, B], [0, 0]].
    """
    if b.left_algebra != r or b.right_algebra != s:
        raise DimensionMismatch("bimodule actions do not match the corner rings")
    p = r.p
    dr, db, ds = r.dim, b.dim, s.dim
    d = dr + db + ds
    mul = zeros(d, d * d).reshape(d, d, d)
    mul[:dr, :dr, :dr] = r.mul
    mul[dr + db :, dr + db :, dr + db :] = s.mul
    # r * b' lands in B via the left action; b * s' via the right action
    for i in range(dr):
        mul[i, dr : dr + db, dr : dr + db] = b.left_mats[i].T % p
    for j in range(ds):
        mul[dr : dr + db, dr + db + j, dr : dr + db] = b.right_mats[j].T % p
    unit = zeros(1, d)[0]
    unit[:dr] = r.unit
    unit[dr + db :] = s.unit
    alg = Algebra(p, mul, unit)
    ideal_basis = eye(d)[: dr + db]
    ideal = Ideal(alg, Subspace.from_vectors(ideal_basis, d, p))
    return alg, ideal


def _is_two_sided_stable(a: Algebra, space: Subspace) -> bool:
    for i in range(a.dim):
        for row in space.basis:
            if not space.contains_vector(matmul_mod(a.left_mats[i], row.reshape(-1, 1), a.p)[:, 0]):
                return False
            if not space.contains_vector(matmul_mod(a.right_mats[i], row.reshape(-1, 1), a.p)[:, 0]):
                return False
    return True


def _trace_form_radical(a: Algebra) -> Subspace:
    d = a.dim
    g = zeros(d, d)
    for i in range(d):
        for j in range(d):
            g[i, j] = int(np.trace(matmul_mod(a.left_mats[i], a.left_mats[j], a.p))) % a.p
    return Subspace.from_vectors(nullspace_matrix(g, a.p), d, a.p)


def _annihilator(a: Algebra, factor_gens: list[np.ndarray]) -> Subspace:
    # {x in A : x acts as zero on the factor}; factor_gens are the images
    # of the algebra basis, so the action of x is the x-weighted sum
    k = factor_gens[0].shape[0]
    cols = np.stack([g.ravel() for g in factor_gens], axis=1)  # (k*k, dimA)
    return Subspace.from_vectors(nullspace_matrix(cols, a.p), a.dim, a.p)


def radical(a: Algebra, seed: int = 0) -> Ideal:
    """The Jacobson radical.

    Trace-form method when p > dim (Dickson's criterion applies); in small
    characteristic the radical is the intersection of the annihilators of
    the composition factors of the left regular module.
    """
    if a.dim == 0:
        return Ideal(a, Subspace.zero(0, a.p), validate=False)
    if a.p > a.dim:
        space = _trace_form_radical(a)
    else:
        factors = meataxe.composition_factors(list(a.left_mats), a.p, seed=seed)
        space = Subspace.full(a.dim, a.p)
        for gens in factors:
            space = subspace_intersect(space, _annihilator(a, gens))
    ideal = Ideal(a, space)
    _assert_nilpotent(a, space)
    return ideal


def _assert_nilpotent(a: Algebra, space: Subspace) -> None:
    current = space
    for _ in range(a.dim + 1):
        if current.dim == 0:
            return
        acc = RrefAccumulator(a.dim, a.p)
        for x in current.basis:
            for y in space.basis:
                acc.add(a.mul_vec(x, y))
        nxt = acc.to_subspace()
        if nxt.dim >= current.dim:
            raise ValidationError("computed radical is not nilpotent (bug)")
        current = nxt


def is_semisimple(a: Algebra, seed: int = 0) -> bool:
    return radical(a, seed=seed).dim == 0


def is_simple_artinian(a: Algebra, seed: int = 0) -> bool:
    """Simple (no nontrivial two-sided ideal); at finite dimension this
    forces semisimplicity, so it matches 'simple artinian'."""
    if a.dim == 1:
        return True
    gens = list(a.left_mats) + list(a.right_mats)
    return meataxe.find_stable_subspace(gens, a.p, seed=seed) is None


def algebra_isomorphic_as_opposite(a: Algebra, d: Algebra, hom: AlgebraHom) -> bool:
    """Check that ``hom`` is a bijective homomorphism opposite(a) -> d."""
    return hom.source == opposite(a) and hom.target == d and rank(hom.matrix, a.p) == a.dim == d.dim
