"""Structure-constant algebras: constructors, radical, simplicity."""

import numpy as np
import pytest

from coringlab.algebra import (
    Algebra,
    AlgebraHom,
    dual_numbers,
    field_algebra,
    group_algebra_z2,
    is_semisimple,
    is_simple_artinian,
    matrix_algebra,
    opposite,
    product,
    radical,
    subalgebra_generated,
    subalgebra_on_basis,
    triangular_algebra,
    upper_triangular_2x2,
    check_algebra,
)
from coringlab.bimodule import Bimodule
from coringlab.errors import ValidationError
from coringlab.linalg import Subspace, eye, zeros

from oracles import brute_force_radical


def test_field_algebra_valid():
    a = field_algebra(3)
    assert check_algebra(a) == []
    assert a.dim == 1


def test_matrix_algebra_relations():
    a = matrix_algebra(2, 3)
    assert a.dim == 4
    e11, e12 = eye(4)[0], eye(4)[1]
    assert np.array_equal(a.mul_vec(e11, e12), e12)
    assert not a.mul_vec(e12, e11).any()


def test_tampered_structure_constants_detected():
    a = matrix_algebra(2, 3)
    bad = a.mul.copy()
    bad[0, 1, 2] = (bad[0, 1, 2] + 1) % 3
    with pytest.raises(ValidationError) as err:
        Algebra(3, bad, a.unit)
    assert any("associativity" in line for line in err.value.report)


def test_check_algebra_reports_triple():
    a = matrix_algebra(2, 3)
    bad = a.mul.copy()
    bad[0, 1, 2] = (bad[0, 1, 2] + 1) % 3
    b = Algebra(3, bad, a.unit, validate=False)
    report = check_algebra(b)
    assert report and any("(" in line for line in report)


def test_opposite_involution_and_commutative_fixed():
    a = matrix_algebra(2, 5)
    assert opposite(opposite(a)) == a
    c = dual_numbers(3)  # commutative
    assert opposite(c) == c


def test_product_and_radical_of_product():
    a = product(matrix_algebra(2, 3), matrix_algebra(1, 3))
    assert a.dim == 5
    assert is_semisimple(a)


def test_subalgebra_generated_by_e11():
    a = matrix_algebra(2, 3)
    e11 = eye(4)[0]
    s = subalgebra_generated(a, [e11])
    assert s.dim == 1 and s.contains_vector(e11)
    s_unital = subalgebra_generated(a, [e11], adjoin_unit=True)
    assert s_unital.dim == 2


def test_radical_matrix_algebra_is_zero():
    for n, p in [(2, 3), (2, 2), (3, 2)]:
        assert radical(matrix_algebra(n, p)).dim == 0


def test_radical_dual_numbers():
    a = dual_numbers(2)
    r = radical(a)
    assert r.dim == 1
    assert r.space.contains_vector([0, 1])


def test_radical_upper_triangular():
    a = upper_triangular_2x2(3)
    r = radical(a)
    # span{E12}
    assert r.dim == 1
    assert r.space.contains_vector([0, 1, 0])


def test_radical_matches_brute_force_oracle():
    candidates = [
        dual_numbers(2),
        matrix_algebra(2, 2),
        upper_triangular_2x2(2),
        product(field_algebra(2), dual_numbers(2)),
        group_algebra_z2(2),  # F2[C2] is local, radical = span{1+g}
        field_algebra(3),
        dual_numbers(3),
        upper_triangular_2x2(3),
        group_algebra_z2(3),
    ]
    for alg in candidates:
        assert radical(alg).space == brute_force_radical(alg)


def test_is_semisimple_examples():
    assert is_semisimple(matrix_algebra(2, 3))
    assert not is_semisimple(dual_numbers(2))
    assert is_semisimple(product(matrix_algebra(2, 3), matrix_algebra(2, 3)))


def test_is_simple_artinian_matrix_algebras():
    for n in (1, 2, 3):
        for p in (2, 3, 5):
            assert is_simple_artinian(matrix_algebra(n, p))


def test_is_simple_artinian_negatives():
    assert not is_simple_artinian(product(field_algebra(3), field_algebra(3)))
    assert not is_simple_artinian(dual_numbers(2))


def test_triangular_algebra_f2():
    f2 = field_algebra(2)
    b = Bimodule(f2, f2, [eye(1)], [eye(1)])
    alg, ideal = triangular_algebra(f2, f2, b)
    assert alg.dim == 3
    assert ideal.dim == 2
    # matches the upper-triangular 2x2 presentation
    ut = upper_triangular_2x2(2)
    assert is_semisimple(alg) == is_semisimple(ut) == False  # noqa: E712


def test_triangular_algebra_dual_numbers():
    r = dual_numbers(2)
    f2 = field_algebra(2)
    # B = GF(2) with x acting as 0 on the left, S = GF(2)
    lmats = np.stack([eye(1), zeros(1, 1)])
    b = Bimodule(r, f2, lmats, [eye(1)])
    alg, ideal = triangular_algebra(r, f2, b)
    assert alg.dim == 4
    assert ideal.dim == 3


def test_triangular_zero_bimodule_is_product():
    f3 = field_algebra(3)
    b = Bimodule(f3, f3, np.empty((1, 0, 0), dtype=np.int64), np.empty((1, 0, 0), dtype=np.int64))
    alg, ideal = triangular_algebra(f3, f3, b)
    assert alg == product(f3, f3)
    assert ideal.dim == 1


def test_subalgebra_on_basis_diag():
    a = matrix_algebra(2, 3)
    basis = zeros(2, 4)
    basis[0, 0] = 1
    basis[1, 3] = 1
    inc = subalgebra_on_basis(a, basis)
    assert inc.source.dim == 2
    assert inc.injective
    assert inc.source == product(field_algebra(3), field_algebra(3))


def test_algebra_hom_validation():
    a = matrix_algebra(2, 3)
    with pytest.raises(ValidationError):
        AlgebraHom(field_algebra(3), a, zeros(4, 1))  # unit not preserved
