"""Hom spaces, projectivity, MeatAxe simples, socle, isotypic components."""

import numpy as np
import pytest

from coringlab.algebra import (
    dual_numbers,
    field_algebra,
    matrix_algebra,
    product,
    upper_triangular_2x2,
)
from coringlab.bimodule import (
    Bimodule,
    LeftModule,
    regular_bimodule,
    restrict_module,
    submodule_generated,
)
from coringlab.module_theory import (
    hom_space,
    is_projective,
    isotypic_decomposition,
    modules_isomorphic,
    simple_submodule,
    socle,
)
from coringlab.linalg import Subspace, eye, zeros

from oracles import (
    brute_force_is_simple,
    brute_force_minimal_submodules,
    brute_force_socle,
)


def _trivial_module_over_dual_numbers(p=2):
    # GF(p) with x acting as 0
    a = dual_numbers(p)
    return LeftModule(a, np.stack([eye(1), zeros(1, 1)]))


def _ut2_simples(p=3):
    """The two non-isomorphic simples of upper-triangular 2x2 matrices.

    Basis {E11, E12, E22}.  span{E12} is a left submodule on which E11
    acts as 1 and E22 as 0; the quotient by the left submodule
    span{E11, E12} carries the other type (E22 acts as 1).
    """
    from coringlab.bimodule import quotient_module

    a = upper_triangular_2x2(p)
    reg = regular_bimodule(a).left()
    s1_space = submodule_generated(reg, [eye(3)[1]])
    s1, _ = restrict_module(reg, s1_space)
    top = Subspace.from_vectors([eye(3)[0], eye(3)[1]], 3, p)
    s2, _ = quotient_module(reg, top)
    return s1, s2


def test_hom_contains_identity():
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    h = hom_space(m, m)
    assert any(np.array_equal(b.matrix, eye(4)) for b in h.basis) or h.dim >= 1


def test_hom_regular_to_module_dimension():
    # dim Hom(A_A, M) = dim M for the regular right module
    a = matrix_algebra(2, 3)
    reg = regular_bimodule(a).right()
    h = hom_space(reg, reg)
    assert h.dim == a.dim


def test_schur_non_isomorphic_simples():
    s1, s2 = _ut2_simples(3)
    assert hom_space(s1, s2).dim == 0
    assert hom_space(s2, s1).dim == 0


def test_projective_free_module():
    a = matrix_algebra(2, 3)
    assert is_projective(regular_bimodule(a).right())
    assert is_projective(regular_bimodule(a).left())


def test_projective_negative_dual_numbers():
    # GF(2) over GF(2)[x]/(x^2) with x -> 0: the cover does not split
    m = _trivial_module_over_dual_numbers(2)
    assert not is_projective(m)


def test_simple_submodule_one_dim():
    m = _trivial_module_over_dual_numbers(2)
    assert simple_submodule(m).dim == 1


def test_simple_submodule_matrix_regular():
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    s = simple_submodule(m, seed=0)
    assert s.dim == 2
    assert s in brute_force_minimal_submodules(m.mats, 3, 4) or any(
        s == t for t in brute_force_minimal_submodules(m.mats, 3, 4)
    )


def test_simple_submodule_dual_numbers_regular():
    a = dual_numbers(2)
    m = regular_bimodule(a).left()
    s = simple_submodule(m)
    assert s.dim == 1
    assert s.contains_vector([0, 1])  # the radical line


def test_socle_semisimple_algebra_full():
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    assert socle(m) == Subspace.full(4, 3)


def test_socle_dual_numbers():
    a = dual_numbers(2)
    m = regular_bimodule(a).left()
    s = socle(m)
    assert s.dim == 1 and s.contains_vector([0, 1])


def test_socle_matches_brute_force():
    cases = []
    a = dual_numbers(2)
    cases.append(regular_bimodule(a).left())
    b = upper_triangular_2x2(2)
    cases.append(regular_bimodule(b).left())
    cases.append(regular_bimodule(b).right())
    c = matrix_algebra(2, 2)
    cases.append(regular_bimodule(c).left())
    for m in cases:
        assert socle(m) == brute_force_socle(m.mats, m.p, m.dim)


def test_isotypic_matrix_regular():
    a = matrix_algebra(2, 3)
    rep = isotypic_decomposition(regular_bimodule(a).left())
    assert rep.is_semisimple
    assert len(rep.simples) == 1
    assert rep.simples[0][1] == 2  # one class, multiplicity 2
    assert rep.isotypic[0].dim == 4


def test_isotypic_product_of_fields():
    a = product(field_algebra(3), field_algebra(3))
    rep = isotypic_decomposition(regular_bimodule(a).left())
    assert rep.is_semisimple
    assert len(rep.simples) == 2
    assert all(mult == 1 for _, mult in rep.simples)


def test_isotypic_simple_module():
    s1, _ = _ut2_simples(3)
    rep = isotypic_decomposition(s1)
    assert rep.is_semisimple and len(rep.simples) == 1 and rep.simples[0][1] == 1


def test_modules_isomorphic_basic():
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    assert modules_isomorphic(m, m)
    s1, s2 = _ut2_simples(3)
    assert not modules_isomorphic(s1, s2)


def test_modules_isomorphic_conjugated():
    # the same simple under a basis change
    a = matrix_algebra(2, 3)
    m = regular_bimodule(a).left()
    s = simple_submodule(m, seed=1)
    sub, _ = restrict_module(m, s)
    g = np.array([[1, 1], [0, 1]])
    conj = LeftModule(a, np.stack([(g @ mm @ np.array([[1, 2], [0, 1]])) % 3 for mm in sub.mats]))
    assert modules_isomorphic(sub, conj)


def test_meataxe_simplicity_matches_oracle_small():
    rng = np.random.default_rng(0)
    checked = 0
    algebras = [dual_numbers(2), upper_triangular_2x2(2), matrix_algebra(2, 2)]
    for alg in algebras:
        reg = regular_bimodule(alg).left()
        s = simple_submodule(reg, seed=3)
        sub, _ = restrict_module(reg, s)
        assert brute_force_is_simple(sub.mats, sub.p, sub.dim)
        checked += 1
    assert checked == 3
