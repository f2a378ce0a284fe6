"""Balanced tensor products, coherence, unit isomorphisms, quotients."""

import numpy as np
import pytest

from coringlab.algebra import field_algebra, matrix_algebra, subalgebra_on_basis
from coringlab.bimodule import (
    Bimodule,
    LeftModule,
    ModuleMap,
    RightModule,
    induced_map,
    pure_tensor,
    quotient_module,
    regular_bimodule,
    restrict_module,
    submodule_generated,
    tensor_over_A,
    triple_tensor,
    unit_iso_left,
    unit_iso_right,
)
from coringlab.errors import DimensionMismatch, ValidationError
from coringlab.linalg import Subspace, eye, matmul_mod, rank, zeros


def _mod_as_bimodule_over(a, iota):
    """The target algebra of ``iota`` as a bimodule over iota's source,
    acting through iota on both sides."""
    src, tgt = iota.source, iota.target
    lmats = np.stack([tgt.left_mat_of(iota.matrix[:, j]) for j in range(src.dim)])
    rmats = np.stack([tgt.right_mat_of(iota.matrix[:, j]) for j in range(src.dim)])
    return Bimodule(src, src, lmats, rmats)


def _diag_inclusion(p):
    a = matrix_algebra(2, p)
    basis = zeros(2, 4)
    basis[0, 0] = 1
    basis[1, 3] = 1
    return subalgebra_on_basis(a, basis)


def test_unit_isomorphism_regular():
    # A (x)_A A = A, with carrier dimension dim A
    a = matrix_algebra(2, 3)
    t = tensor_over_A(regular_bimodule(a), regular_bimodule(a))
    assert t.carrier_dim == a.dim


def test_base_field_tensor():
    # over the base field the tensor does not collapse: dim 2 * dim 2 = 4
    f3 = field_algebra(3)
    v = RightModule(f3, np.stack([eye(2)]))
    w = LeftModule(f3, np.stack([eye(2)]))
    t = tensor_over_A(v, w)
    assert t.carrier_dim == 4


def test_tensor_over_diagonal_subalgebra():
    # A = M_2(GF(3)), D = diagonal: dim A (x)_D A = 8
    iota = _diag_inclusion(3)
    m = _mod_as_bimodule_over(iota.target, iota)
    t = tensor_over_A(m, m)
    assert t.carrier_dim == 8


def test_pure_tensor_bilinear_and_balanced():
    iota = _diag_inclusion(3)
    a = iota.target
    m = _mod_as_bimodule_over(a, iota)
    t = tensor_over_A(m, m)
    rng = np.random.default_rng(0)
    for _ in range(20):
        x = rng.integers(0, 3, size=4)
        y = rng.integers(0, 3, size=4)
        d = rng.integers(0, 3, size=2)
        # m*d (x) n == m (x) d*n
        xd = m.right().act(x, d)
        dy = m.left().act(d, y)
        assert np.array_equal(t.pure(xd, y), t.pure(x, dy))
        assert not t.pure(np.zeros(4), y).any()


def test_pure_tensor_unit_iso():
    a = matrix_algebra(2, 3)
    iso = unit_iso_left(regular_bimodule(a).left())
    t = iso.tensor
    rng = np.random.default_rng(1)
    for _ in range(10):
        x = rng.integers(0, 3, size=4)
        # pure(x, 1) maps to x under the unit isomorphism
        v = t.pure(x, a.unit)
        assert np.array_equal(matmul_mod(iso.forward, v.reshape(-1, 1), 3)[:, 0], x % 3)


def test_unit_iso_right_inverse():
    a = matrix_algebra(2, 3)
    iso = unit_iso_right(regular_bimodule(a).right())
    assert np.array_equal(matmul_mod(iso.forward, iso.inverse, 3), eye(4))


def test_induced_map_identity_and_functorial():
    iota = _diag_inclusion(3)
    a = iota.target
    m = _mod_as_bimodule_over(a, iota)
    t = tensor_over_A(m, m)
    ident = induced_map(t, t, eye(4), eye(4))
    assert np.array_equal(ident, eye(t.carrier_dim))
    # f = left mult by a unit-group element is a right-module map
    rng = np.random.default_rng(3)
    for _ in range(6):
        f1 = a.left_mat_of(rng.integers(0, 3, size=4))
        f2 = a.left_mat_of(rng.integers(0, 3, size=4))
        g = eye(4)
        lhs = induced_map(t, t, matmul_mod(f1, f2, 3), g)
        rhs = matmul_mod(induced_map(t, t, f1, g), induced_map(t, t, f2, g), 3)
        assert np.array_equal(lhs, rhs)


def test_induced_map_rejects_non_balanced():
    iota = _diag_inclusion(3)
    m = _mod_as_bimodule_over(iota.target, iota)
    t = tensor_over_A(m, m)
    # a generic non-module map fails to preserve balancing
    bad = zeros(4, 4)
    bad[0, 1] = 1
    with pytest.raises(ValidationError):
        induced_map(t, t, bad, eye(4))


def test_triple_tensor_regular():
    a = matrix_algebra(2, 3)
    r = regular_bimodule(a)
    t3 = triple_tensor(r, r, r)
    assert t3.carrier_dim == a.dim
    assert rank(t3.iso_right, 3) == t3.carrier_dim


def test_triple_tensor_diag_subalgebra_coherence():
    iota = _diag_inclusion(3)
    m = _mod_as_bimodule_over(iota.target, iota)
    t3 = triple_tensor(m, m, m)
    # iterated-left and iterated-right carriers agree in dimension and the
    # coherence isos agree on random pure tensors
    assert t3.t12_3.carrier_dim == t3.t1_23.carrier_dim
    p = 3
    rng = np.random.default_rng(5)
    for _ in range(10):
        x, y, z = (rng.integers(0, p, size=4) for _ in range(3))
        k = np.kron(np.kron(x, y), z) % p
        left = (t3.projection @ k) % p
        right = (t3.projection_right @ k) % p
        assert np.array_equal(matmul_mod(t3.iso_right, right.reshape(-1, 1), p)[:, 0], left)


def test_tensor_mismatch_raises():
    f2 = field_algebra(2)
    f3 = field_algebra(3)
    v = RightModule(f3, np.stack([eye(2)]))
    w = LeftModule(f2, np.stack([eye(2)]))
    with pytest.raises((DimensionMismatch, ValidationError)):
        tensor_over_A(v, w)


def test_submodule_generated_column_space():
    # left ideal M_2 * E11 is the span of E11, E21
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    s = submodule_generated(m, [eye(4)[0]])
    assert s.dim == 2
    assert s.contains_vector(eye(4)[0]) and s.contains_vector(eye(4)[2])


def test_submodule_generated_zero():
    a = matrix_algebra(2, 3)
    s = submodule_generated(regular_bimodule(a).left(), [np.zeros(4)])
    assert s.dim == 0


def test_quotient_by_full_space_and_restriction():
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    q, _ = quotient_module(m, Subspace.full(4, 3))
    assert q.dim == 0
    s = submodule_generated(m, [eye(4)[0]])
    sub, emb = restrict_module(m, s)
    assert sub.dim == 2 and emb.shape == (4, 2)


def test_module_map_validation():
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    ModuleMap(m, m, a.right_mat_of(eye(4)[1]))  # right mult is left-linear
    with pytest.raises(ValidationError):
        bad = zeros(4, 4)
        bad[0, 1] = 1
        ModuleMap(m, m, bad)
