"""Modules over structure-constant algebras and the tensor product over A.

The balanced tensor M (x)_A N is represented concretely: a projection
matrix from Kronecker coordinates onto carrier coordinates whose kernel
is exactly the balancing subspace span{(m*a) (x) n - m (x) (a*n)}.
Representatives are the non-pivot coordinates of the balancing RREF, so
equality in the quotient is bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from coringlab.algebra import Algebra
from coringlab.errors import DimensionMismatch, ValidationError
from coringlab.linalg import (
    Int,
    RrefAccumulator,
    Subspace,
    asmat,
    asvec,
    eye,
    kron,
    matmul_mod,
    solve_matrix,
    zeros,
)

_REPORT_CAP = 12


def _mats3(mats, d: int, da: int, p: int) -> np.ndarray:
    a = np.asarray(mats, dtype=Int) % p
    if a.shape != (da, d, d):
        raise ValidationError(f"action array has shape {a.shape}, expected {(da, d, d)}")
    return np.ascontiguousarray(a)


def _check_left_action(alg: Algebra, mats: np.ndarray) -> list[str]:
    p = alg.p
    report = []
    unit_act = np.tensordot(alg.unit, mats, axes=(0, 0)) % p
    if not np.array_equal(unit_act, eye(mats.shape[1])):
        report.append("unit does not act as identity (left)")
    lhs = np.einsum("iab,jbc->ijac", mats, mats) % p
    rhs = np.einsum("ijk,kac->ijac", alg.mul, mats) % p
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(((lhs - rhs) % p).any(axis=(2, 3)))
        for i, j in bad[:_REPORT_CAP]:
            report.append(f"left action violates e_{i}*e_{j} relation")
    return report


def _check_right_action(alg: Algebra, mats: np.ndarray) -> list[str]:
    p = alg.p
    report = []
    unit_act = np.tensordot(alg.unit, mats, axes=(0, 0)) % p
    if not np.array_equal(unit_act, eye(mats.shape[1])):
        report.append("unit does not act as identity (right)")
    # (v*e_i)*e_j = v*(e_i e_j): R[e_i e_j] = R_j @ R_i
    lhs = np.einsum("jab,ibc->ijac", mats, mats) % p
    rhs = np.einsum("ijk,kac->ijac", alg.mul, mats) % p
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(((lhs - rhs) % p).any(axis=(2, 3)))
        for i, j in bad[:_REPORT_CAP]:
            report.append(f"right action violates e_{i}*e_{j} relation")
    return report


class LeftModule:
    """A left module: one action matrix per algebra basis element."""

    side = "left"

    def __init__(self, algebra: Algebra, mats, *, validate: bool = True):
        self.algebra = algebra
        m = np.asarray(mats, dtype=Int)
        self.mats = _mats3(m, m.shape[1], algebra.dim, algebra.p)
        if validate:
            report = _check_left_action(algebra, self.mats)
            if report:
                raise ValidationError("left module axioms fail", report)

    @property
    def dim(self) -> int:
        return self.mats.shape[1]

    @property
    def p(self) -> int:
        return self.algebra.p

    def act(self, a, v) -> np.ndarray:
        mat = np.tensordot(asvec(a, self.p), self.mats, axes=(0, 0)) % self.p
        return (mat @ asvec(v, self.p)) % self.p

    def __repr__(self) -> str:
        return f"LeftModule(dim={self.dim}, over dim-{self.algebra.dim} algebra)"


class RightModule:
    side = "right"

    def __init__(self, algebra: Algebra, mats, *, validate: bool = True):
        self.algebra = algebra
        m = np.asarray(mats, dtype=Int)
        self.mats = _mats3(m, m.shape[1], algebra.dim, algebra.p)
        if validate:
            report = _check_right_action(algebra, self.mats)
            if report:
                raise ValidationError("right module axioms fail", report)

    @property
    def dim(self) -> int:
        return self.mats.shape[1]

    @property
    def p(self) -> int:
        return self.algebra.p

    def act(self, v, a) -> np.ndarray:
        mat = np.tensordot(asvec(a, self.p), self.mats, axes=(0, 0)) % self.p
        return (mat @ asvec(v, self.p)) % self.p

    def __repr__(self) -> str:
        return f"RightModule(dim={self.dim}, over dim-{self.algebra.dim} algebra)"


class Bimodule:
    """Commuting left and right actions, possibly over distinct algebras."""

    side = "bi"

    def __init__(self, left_algebra: Algebra, right_algebra: Algebra, lmats, rmats, *, validate: bool = True):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        lm = np.asarray(lmats, dtype=Int)
        self.left_mats = _mats3(lm, lm.shape[1], left_algebra.dim, left_algebra.p)
        rm = np.asarray(rmats, dtype=Int)
        self.right_mats = _mats3(rm, rm.shape[1], right_algebra.dim, right_algebra.p)
        if self.left_mats.shape[1] != self.right_mats.shape[1]:
            raise ValidationError("left and right actions disagree on the dimension")
        if left_algebra.p != right_algebra.p:
            raise ValidationError("bimodule over different primes")
        if validate:
            report = self.check()
            if report:
                raise ValidationError("bimodule axioms fail", report)

    def check(self) -> list[str]:
        report = _check_left_action(self.left_algebra, self.left_mats)
        report += _check_right_action(self.right_algebra, self.right_mats)
        p = self.p
        lhs = np.einsum("iab,jbc->ijac", self.left_mats, self.right_mats) % p
        rhs = np.einsum("jab,ibc->ijac", self.right_mats, self.left_mats) % p
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(((lhs - rhs) % p).any(axis=(2, 3)))
            for i, j in bad[:_REPORT_CAP]:
                report.append(f"left action of e_{i} does not commute with right action of e_{j}")
        return report

    @property
    def dim(self) -> int:
        return self.left_mats.shape[1]

    @property
    def p(self) -> int:
        return self.left_algebra.p

    def left(self) -> LeftModule:
        return LeftModule(self.left_algebra, self.left_mats, validate=False)

    def right(self) -> RightModule:
        return RightModule(self.right_algebra, self.right_mats, validate=False)

    def __repr__(self) -> str:
        return f"Bimodule(dim={self.dim}, p={self.p})"


Module = Union[LeftModule, RightModule, Bimodule]


def regular_bimodule(a: Algebra) -> Bimodule:
    return Bimodule(a, a, a.left_mats, a.right_mats, validate=False)


def module_map(source, target, matrix, p: int) -> "ModuleMap":
    return ModuleMap(source, target, matrix)


class ModuleMap:
    """A linear map intertwining every declared action of its endpoints."""

    def __init__(self, source: Module, target: Module, matrix, *, validate: bool = True):
        self.source = source
        self.target = target
        self.matrix = asmat(matrix, source.p)
        if self.matrix.shape != (target.dim, source.dim):
            raise DimensionMismatch(
                f"map matrix {self.matrix.shape} does not go dim {source.dim} -> {target.dim}"
            )
        if validate:
            rep = self.check()
            if rep:
                raise ValidationError("map does not intertwine the actions", rep)

    def check(self) -> list[str]:
        p = self.source.p
        report = []
        pairs = []
        if isinstance(self.source, (LeftModule,)) and isinstance(self.target, (LeftModule,)):
            pairs.append((self.source.mats, self.target.mats, "left"))
        elif isinstance(self.source, (RightModule,)) and isinstance(self.target, (RightModule,)):
            pairs.append((self.source.mats, self.target.mats, "right"))
        elif isinstance(self.source, Bimodule) and isinstance(self.target, Bimodule):
            pairs.append((self.source.left_mats, self.target.left_mats, "left"))
            pairs.append((self.source.right_mats, self.target.right_mats, "right"))
        else:
            raise DimensionMismatch("module map endpoints have different kinds")
        for smats, tmats, label in pairs:
            if smats.shape[0] != tmats.shape[0]:
                raise DimensionMismatch("module map endpoints over different algebras")
            for i in range(smats.shape[0]):
                lhs = matmul_mod(self.matrix, smats[i], p)
                rhs = matmul_mod(tmats[i], self.matrix, p)
                if not np.array_equal(lhs, rhs):
                    report.append(f"{label} action of e_{i} is not intertwined")
                    break
        return report

    def __repr__(self) -> str:
        return f"ModuleMap({self.source.dim} -> {self.target.dim})"


def _right_data(m: Module) -> tuple[Algebra, np.ndarray]:
    if isinstance(m, Bimodule):
        return m.right_algebra, m.right_mats
    if isinstance(m, RightModule):
        return m.algebra, m.mats
    raise DimensionMismatch("left tensor factor carries no right action")


def _left_data(m: Module) -> tuple[Algebra, np.ndarray]:
    if isinstance(m, Bimodule):
        return m.left_algebra, m.left_mats
    if isinstance(m, LeftModule):
        return m.algebra, m.mats
    raise DimensionMismatch("right tensor factor carries no left action")


class TensorOverA:
    """The balanced tensor product of a right module and a left module.

    carrier coordinates = non-pivot Kronecker coordinates modulo the
    balancing subspace; ``projection @ section = identity`` and
    ``kernel(projection) = balancing``.
    """

    def __init__(self, left_factor: Module, right_factor: Module):
        mid_l, rmats = _right_data(left_factor)
        mid_r, lmats = _left_data(right_factor)
        if mid_l != mid_r:
            raise DimensionMismatch("tensor factors are balanced over different algebras")
        self.left_factor = left_factor
        self.right_factor = right_factor
        self.algebra = mid_l
        p = self.algebra.p
        self.p = p
        dm, dn, da = left_factor.dim, right_factor.dim, self.algebra.dim
        self.kron_dim = dm * dn
        gens = []
        idm, idn = eye(dm), eye(dn)
        for j in range(da):
            bj = (kron(rmats[j], idn, p) - kron(idm, lmats[j], p)) % p
            gens.append(bj.T)
        stacked = np.vstack(gens) if gens else zeros(0, self.kron_dim)
        self.balancing = Subspace.from_vectors(stacked, self.kron_dim, p)
        piv = self.balancing.pivots
        free = [c for c in range(self.kron_dim) if c not in set(piv)]
        self.carrier_dim = len(free)
        self._free = free
        proj = zeros(self.carrier_dim, self.kron_dim)
        for i, c in enumerate(free):
            proj[i, c] = 1
        if self.balancing.dim:
            proj[:, piv] = (-self.balancing.basis[:, free].T) % p
        self.projection = proj
        sect = zeros(self.kron_dim, self.carrier_dim)
        for i, c in enumerate(free):
            sect[c, i] = 1
        self.section = sect
        self._build_inherited()

    def _build_inherited(self) -> None:
        p = self.p
        self.left_module: Optional[LeftModule] = None
        self.right_module: Optional[RightModule] = None
        self.bimodule: Optional[Bimodule] = None
        outer_left = None
        if isinstance(self.left_factor, Bimodule):
            alg = self.left_factor.left_algebra
            mats = [
                self._descend(kron(self.left_factor.left_mats[i], eye(self.right_factor.dim), p), "left outer action")
                for i in range(alg.dim)
            ]
            outer_left = (alg, np.array(mats, dtype=Int))
            self.left_module = LeftModule(alg, outer_left[1], validate=False)
        outer_right = None
        if isinstance(self.right_factor, Bimodule):
            alg = self.right_factor.right_algebra
            mats = [
                self._descend(kron(eye(self.left_factor.dim), self.right_factor.right_mats[j], p), "right outer action")
                for j in range(alg.dim)
            ]
            outer_right = (alg, np.array(mats, dtype=Int))
            self.right_module = RightModule(alg, outer_right[1], validate=False)
        if outer_left and outer_right:
            self.bimodule = Bimodule(outer_left[0], outer_right[0], outer_left[1], outer_right[1], validate=False)

    def _descend(self, kron_map: np.ndarray, label: str) -> np.ndarray:
        """Push a Kronecker-space operator down to the carrier; it must
        preserve the balancing subspace."""
        top = matmul_mod(self.projection, kron_map, self.p)
        if self.balancing.dim:
            resid = matmul_mod(top, np.ascontiguousarray(self.balancing.basis.T), self.p)
            if resid.any():
                raise ValidationError(f"{label} does not preserve the balancing subspace")
        return matmul_mod(top, self.section, self.p)

    def pure(self, m, n) -> np.ndarray:
        """Class of the pure tensor m (x) n in carrier coordinates."""
        m = asvec(m, self.p)
        n = asvec(n, self.p)
        if m.shape[0] != self.left_factor.dim or n.shape[0] != self.right_factor.dim:
            raise DimensionMismatch("pure tensor coordinate lengths do not match the factors")
        return (self.projection @ np.kron(m, n)) % self.p

    def __repr__(self) -> str:
        return f"TensorOverA(carrier_dim={self.carrier_dim}, kron_dim={self.kron_dim})"


def tensor_over_A(m: Module, n: Module) -> TensorOverA:
    return TensorOverA(m, n)


def pure_tensor(t: TensorOverA, m, n) -> np.ndarray:
    return t.pure(m, n)


def induced_map(t1: TensorOverA, t2: TensorOverA, f, g) -> np.ndarray:
    """Matrix of f (x) g between tensor carriers.

    Raises when kron(f, g) fails to preserve balancing, which signals a
    non-A-linear input map.
    """
    fm = f.matrix if isinstance(f, ModuleMap) else asmat(f, t1.p)
    gm = g.matrix if isinstance(g, ModuleMap) else asmat(g, t1.p)
    kf = kron(fm, gm, t1.p)
    if kf.shape != (t2.kron_dim, t1.kron_dim):
        raise DimensionMismatch("factor maps do not match the tensor factors")
    top = matmul_mod(t2.projection, kf, t1.p)
    if t1.balancing.dim:
        resid = matmul_mod(top, np.ascontiguousarray(t1.balancing.basis.T), t1.p)
        if resid.any():
            raise ValidationError("induced map is ill-defined: balancing is not preserved")
    return matmul_mod(top, t1.section, t1.p)


@dataclass
class TripleTensor:
    """Doubly-balanced quotient of M (x) N (x) P with coherence maps.

    The carrier is the left-iterated quotient (M (x)_A N) (x)_A P; the
    right-iterated version maps onto it by the invertible ``iso_right``.
    Both composite projections have equal kernels (each contains both
    balancing families), which is asserted at construction.
    """

    t12: TensorOverA
    t12_3: TensorOverA
    t23: TensorOverA
    t1_23: TensorOverA
    projection: np.ndarray
    section: np.ndarray
    projection_right: np.ndarray
    iso_right: np.ndarray
    iso_right_inv: np.ndarray
    carrier_dim: int


def triple_tensor(
    m: Module,
    n: Module,
    q: Module,
    t12: Optional[TensorOverA] = None,
    t23: Optional[TensorOverA] = None,
) -> TripleTensor:
    p = n.p
    t12 = t12 if t12 is not None else tensor_over_A(m, n)
    t23 = t23 if t23 is not None else tensor_over_A(n, q)
    left_carrier = t12.bimodule or t12.right_module
    if left_carrier is None:
        raise DimensionMismatch("middle factor must carry a right action")
    t12_3 = tensor_over_A(left_carrier, q)
    right_carrier = t23.bimodule or t23.left_module
    if right_carrier is None:
        raise DimensionMismatch("middle factor must carry a left action")
    t1_23 = tensor_over_A(m, right_carrier)

    q_left = matmul_mod(t12_3.projection, kron(t12.projection, eye(q.dim), p), p)
    q_right = matmul_mod(t1_23.projection, kron(eye(m.dim), t23.projection, p), p)
    s_left = matmul_mod(kron(t12.section, eye(q.dim), p), t12_3.section, p)
    s_right = matmul_mod(kron(eye(m.dim), t23.section, p), t1_23.section, p)
    assert np.array_equal(matmul_mod(q_left, s_left, p), eye(t12_3.carrier_dim))
    assert np.array_equal(matmul_mod(q_right, s_right, p), eye(t1_23.carrier_dim))

    x = matmul_mod(q_left, s_right, p)
    y = matmul_mod(q_right, s_left, p)
    # equal kernels: each composite factors through the other
    if not np.array_equal(matmul_mod(x, q_right, p), q_left):
        raise ValidationError("triple tensor coherence failure (left through right)")
    if not np.array_equal(matmul_mod(y, q_left, p), q_right):
        raise ValidationError("triple tensor coherence failure (right through left)")
    if not np.array_equal(matmul_mod(x, y, p), eye(t12_3.carrier_dim)):
        raise ValidationError("triple tensor coherence maps are not mutually inverse")
    return TripleTensor(
        t12=t12,
        t12_3=t12_3,
        t23=t23,
        t1_23=t1_23,
        projection=q_left,
        section=s_left,
        projection_right=q_right,
        iso_right=x,
        iso_right_inv=y,
        carrier_dim=t12_3.carrier_dim,
    )


@dataclass
class UnitIsomorphism:
    """A (x)_A M = M (or M (x)_A A = M): forward sends a (x) m to a*m."""

    tensor: TensorOverA
    forward: np.ndarray
    inverse: np.ndarray


def unit_iso_left(m: Module) -> UnitIsomorphism:
    """A (x)_A M = M via a (x) v -> a*v."""
    alg, lmats = _left_data(m)
    p = alg.p
    t = tensor_over_A(regular_bimodule(alg), m)
    ev = np.hstack([lmats[i] for i in range(alg.dim)])  # column (i,k) -> e_i * e_k
    forward = matmul_mod(ev, t.section, p)
    col = alg.unit.reshape(-1, 1)
    inv = matmul_mod(t.projection, kron(col, eye(m.dim), p), p)
    assert np.array_equal(matmul_mod(forward, inv, p), eye(m.dim))
    assert np.array_equal(matmul_mod(inv, forward, p), eye(t.carrier_dim))
    return UnitIsomorphism(t, forward, inv)


def unit_iso_right(m: Module) -> UnitIsomorphism:
    """M (x)_A A = M via v (x) a -> v*a."""
    alg, rmats = _right_data(m)
    p = alg.p
    t = tensor_over_A(m, regular_bimodule(alg))
    da = alg.dim
    ev = zeros(m.dim, m.dim * da)
    for k in range(m.dim):
        for i in range(da):
            ev[:, k * da + i] = rmats[i][:, k]
    forward = matmul_mod(ev, t.section, p)
    col = alg.unit.reshape(-1, 1)
    inv = matmul_mod(t.projection, kron(eye(m.dim), col, p), p)
    assert np.array_equal(matmul_mod(forward, inv, p), eye(m.dim))
    assert np.array_equal(matmul_mod(inv, forward, p), eye(t.carrier_dim))
    return UnitIsomorphism(t, forward, inv)


def _action_mats(m: Module) -> list[np.ndarray]:
    if isinstance(m, Bimodule):
        return list(m.left_mats) + list(m.right_mats)
    return list(m.mats)


def submodule_generated(m: Module, vectors) -> Subspace:
    """Closure of the span of ``vectors`` under all declared actions."""
    acc = RrefAccumulator(m.dim, m.p)
    vecs = np.atleast_2d(np.asarray(vectors, dtype=Int)) % m.p
    queue = [v for v in vecs if acc.add(v)]
    mats = _action_mats(m)
    while queue and acc.dim < m.dim:
        v = queue.pop()
        for g in mats:
            w = (g @ v) % m.p
            if acc.add(w):
                queue.append(w)
    return acc.to_subspace()


def restrict_module(m: Module, s: Subspace):
    """The module structure induced on an action-stable subspace.

    Returns (module, embedding) with embedding of shape (dim m, dim s).
    """
    bt = np.ascontiguousarray(s.basis.T)

    def restrict(mats):
        out = []
        for g in mats:
            x = solve_matrix(bt, matmul_mod(g, bt, m.p), m.p)
            if x is None:
                raise ValidationError("subspace is not stable under the action")
            out.append(x)
        return np.array(out, dtype=Int).reshape(len(mats), s.dim, s.dim)

    if isinstance(m, Bimodule):
        sub = Bimodule(m.left_algebra, m.right_algebra, restrict(m.left_mats), restrict(m.right_mats), validate=False)
    elif isinstance(m, LeftModule):
        sub = LeftModule(m.algebra, restrict(m.mats), validate=False)
    else:
        sub = RightModule(m.algebra, restrict(m.mats), validate=False)
    return sub, bt


def quotient_module(m: Module, s: Subspace):
    """The quotient by an action-stable subspace.

    Returns (module, projection); representatives are the non-pivot
    coordinates of the subspace basis.
    """
    p = m.p
    d = m.dim
    piv = set(s.pivots)
    free = [c for c in range(d) if c not in piv]
    proj = zeros(len(free), d)
    for i, c in enumerate(free):
        proj[i, c] = 1
    if s.dim:
        proj[:, s.pivots] = (-s.basis[:, free].T) % p
    sect = zeros(d, len(free))
    for i, c in enumerate(free):
        sect[c, i] = 1

    def push(mats):
        out = []
        for g in mats:
            top = matmul_mod(proj, g, p)
            if s.dim:
                resid = matmul_mod(top, np.ascontiguousarray(s.basis.T), p)
                if resid.any():
                    raise ValidationError("subspace is not stable; quotient is ill-defined")
            out.append(matmul_mod(top, sect, p))
        return np.array(out, dtype=Int).reshape(len(mats), len(free), len(free))

    if isinstance(m, Bimodule):
        quo = Bimodule(m.left_algebra, m.right_algebra, push(m.left_mats), push(m.right_mats), validate=False)
    elif isinstance(m, LeftModule):
        quo = LeftModule(m.algebra, push(m.mats), validate=False)
    else:
        quo = RightModule(m.algebra, push(m.mats), validate=False)
    return quo, proj
