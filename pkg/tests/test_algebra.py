"""
Tests for semigroup and category algebras, phi, psi and the isomorphism check
"""

import pytest
from sympy.polys.domains import GF, QQ, ZZ

from efountain.algebra import (
    AlgebraElement,
    ChangeOfBasis,
    category_basis,
    category_mult,
    phi,
    phi_is_injective,
    poset_category_algebra_iso,
    semigroup_basis,
    semigroup_mult,
    unit_element,
    verify_homomorphism,
    verify_isomorphism,
    zeta_l,
)
from efountain.category import build_category
from efountain.errors import BasisMismatch, IndexOutOfRange
from efountain.fountain import analyze_reduced_e_fountain
from efountain.orders import embedding_order


def _s(F, coeffs, ring=ZZ):
    return AlgebraElement(semigroup_basis(F.semigroup), ring, coeffs)


def _c(C, coeffs, ring=ZZ):
    return AlgebraElement(category_basis(C), ring, coeffs)


def _structures(ct3_structure, corpus3):
    yield ct3_structure
    for entry in corpus3:
        yield analyze_reduced_e_fountain(entry.semigroup, entry.e_set)


class TestSemigroupAlgebra:
    """Multiplication in kS"""

    def test_basis_product(self, ct3_structure):
        S = ct3_structure.semigroup
        assert semigroup_mult(_s(ct3_structure, {1: 1}), _s(ct3_structure, {2: 1}), S) == _s(ct3_structure, {4: 1})

    def test_bilinear(self, ct3_structure):
        S = ct3_structure.semigroup
        x = _s(ct3_structure, {1: 1, 2: 1})
        z = _s(ct3_structure, {3: 1})
        lhs = semigroup_mult(x, z, S)
        rhs = semigroup_mult(_s(ct3_structure, {1: 1}), z, S) + semigroup_mult(_s(ct3_structure, {2: 1}), z, S)
        assert lhs == rhs

    def test_square_of_idempotent_sum(self, ct3_structure):
        # (e1 + e2)^2 = e1 + e1e2 + e2e1 + e2
        x = _s(ct3_structure, {1: 1, 2: 1})
        assert semigroup_mult(x, x, ct3_structure.semigroup) == _s(ct3_structure, {1: 1, 2: 1, 3: 1, 4: 1})

    def test_zero_coefficients_dropped(self, ct3_structure):
        assert _s(ct3_structure, {0: 0}).is_zero()

    def test_index_out_of_range(self, ct3_structure):
        with pytest.raises(IndexOutOfRange):
            _s(ct3_structure, {5: 1})

    def test_render(self, ct3_structure):
        x = _s(ct3_structure, {1: 1, 3: 2})
        assert x.render(ct3_structure.semigroup.labels) == "[1,3,3] + 2*[2,3,3]"


class TestCategoryAlgebra:
    """Multiplication in kC"""

    def test_identity_on_left(self, ct3_structure):
        C = build_category(ct3_structure)
        assert category_mult(_c(C, {2: 1}), _c(C, {3: 1}), C) == _c(C, {3: 1})

    def test_non_composable_is_zero(self, ct3_structure):
        C = build_category(ct3_structure)
        assert category_mult(_c(C, {3: 1}), _c(C, {3: 1}), C).is_zero()

    def test_unit_element(self, ct3_structure):
        C = build_category(ct3_structure)
        one = unit_element(C)
        for m in range(C.n_morphisms):
            x = _c(C, {m: 1})
            assert category_mult(one, x, C) == x
            assert category_mult(x, one, C) == x

    def test_mixed_bases(self, ct3_structure):
        C = build_category(ct3_structure)
        with pytest.raises(BasisMismatch):
            _s(ct3_structure, {0: 1}) + _c(C, {0: 1})

    def test_thin_category_is_incidence_algebra(self, ct3_structure):
        C = build_category(ct3_structure)
        assert poset_category_algebra_iso(C, ZZ)

    def test_rectangular_not_a_poset(self, rect2_structure):
        assert not poset_category_algebra_iso(build_category(rect2_structure))


class TestProductAxioms:
    """Associativity and bilinearity of the kS and kC products"""

    @pytest.mark.parametrize("ring", [ZZ, GF(2)])
    def test_semigroup_product(self, ct3_structure, corpus3, ring):
        for F in _structures(ct3_structure, corpus3):
            S = F.semigroup
            basis = [_s(F, {a: 1}, ring) for a in range(S.size)]
            for x in basis:
                for y in basis:
                    xy = semigroup_mult(x, y, S)
                    for z in basis:
                        assert semigroup_mult(xy, z, S) == semigroup_mult(x, semigroup_mult(y, z, S), S), S.name
                        assert semigroup_mult(x, y + z, S) == xy + semigroup_mult(x, z, S), S.name
                        assert semigroup_mult(x + z, y, S) == xy + semigroup_mult(z, y, S), S.name

    @pytest.mark.parametrize("ring", [ZZ, GF(2)])
    def test_category_product(self, ct3_structure, corpus3, ring):
        for F in _structures(ct3_structure, corpus3):
            C = build_category(F)
            basis = [_c(C, {m: 1}, ring) for m in range(C.n_morphisms)]
            for x in basis:
                for y in basis:
                    xy = category_mult(x, y, C)
                    for z in basis:
                        assert category_mult(xy, z, C) == category_mult(x, category_mult(y, z, C), C), F.semigroup.name
                        assert category_mult(x, y + z, C) == xy + category_mult(x, z, C), F.semigroup.name
                        assert category_mult(x + z, y, C) == xy + category_mult(z, y, C), F.semigroup.name


class TestPhi:
    """phi(a) = sum of C(c) over c tri_l a"""

    def test_ct3_product(self, ct3_structure):
        C = build_category(ct3_structure)
        assert phi(_s(ct3_structure, {3: 1}), ct3_structure, C) == _c(C, {3: 1, 4: 1})

    def test_rectangular_not_injective(self, rect2_structure):
        C = build_category(rect2_structure)
        a = phi(_s(rect2_structure, {0: 1}), rect2_structure, C)
        b = phi(_s(rect2_structure, {1: 1}), rect2_structure, C)
        assert a == b == _c(C, {0: 1, 1: 1})
        assert not phi_is_injective(rect2_structure)

    def test_identity_maps_to_unit(self, ct4_structure):
        C = build_category(ct4_structure)
        assert phi(_s(ct4_structure, {0: 1}), ct4_structure, C) == unit_element(C)

    def test_injective_on_ct3(self, ct3_structure):
        assert phi_is_injective(ct3_structure)
        assert phi_is_injective(ct3_structure, GF(2))
        assert phi_is_injective(ct3_structure, GF(4))
        assert phi_is_injective(ct3_structure, GF(6))

    @pytest.mark.parametrize("ring", [ZZ, GF(2), GF(4), GF(6)])
    def test_rectangular_not_injective_over_any_ring(self, rect2_structure, ring):
        assert not phi_is_injective(rect2_structure, ring)

    def test_rejects_category_basis(self, ct3_structure):
        C = build_category(ct3_structure)
        with pytest.raises(BasisMismatch):
            phi(_c(C, {0: 1}), ct3_structure, C)


class TestHomomorphism:
    """phi is multiplicative exactly under generalized right ample"""

    def test_rectangular(self, rect2_structure):
        assert verify_homomorphism(rect2_structure, build_category(rect2_structure))

    def test_ct4(self, ct4_structure):
        assert verify_homomorphism(ct4_structure, build_category(ct4_structure))

    @pytest.mark.parametrize("ring", [QQ, GF(2), GF(5)])
    def test_ct3_other_rings(self, ct3_structure, ring):
        assert verify_homomorphism(ct3_structure, build_category(ct3_structure), ring)


class TestChangeOfBasis:
    """zeta_l, its inverse and psi"""

    @pytest.mark.parametrize("ring", [ZZ, QQ, GF(5), GF(4)])
    def test_round_trips(self, ct4_structure, ring):
        C = build_category(ct4_structure)
        basis = ChangeOfBasis(ct4_structure, C, embedding_order(ct4_structure), ring)
        assert basis.inverse_is_two_sided()
        assert basis.first_psi_phi_failure() is None
        assert basis.first_phi_psi_failure() is None

    def test_zeta_diagonal(self, ct3_structure):
        zeta = zeta_l(ct3_structure, embedding_order(ct3_structure))
        assert all(zeta(a, a) == 1 for a in range(ct3_structure.size))

    def test_minimal_element(self, ct3_structure):
        C = build_category(ct3_structure)
        basis = ChangeOfBasis(ct3_structure, C, embedding_order(ct3_structure))
        assert basis.psi(basis.c(4)) == basis.s(4)

    def test_psi_of_product(self, ct3_structure):
        C = build_category(ct3_structure)
        basis = ChangeOfBasis(ct3_structure, C, embedding_order(ct3_structure))
        # C(e1e2) = phi(e1e2) - phi([3,3,3])
        assert basis.psi(basis.c(3)) == _s(ct3_structure, {3: 1, 4: -1})


class TestIsomorphism:
    """verify_isomorphism"""

    def test_ct4(self, ct4_structure):
        assert verify_isomorphism(ct4_structure, build_category(ct4_structure))

    def test_rectangular(self, rect2_structure):
        res = verify_isomorphism(rect2_structure, build_category(rect2_structure))
        assert not res
        assert res.reason == "tri_l is not contained in a partial order"
        assert res.witness == (0, 1, 0)

    def test_inverse_monoid(self, i2_structure):
        assert verify_isomorphism(i2_structure, build_category(i2_structure))

    @pytest.mark.parametrize("ring", [QQ, GF(5), GF(4)])
    def test_ct3_other_rings(self, ct3_structure, ring):
        assert verify_isomorphism(ct3_structure, build_category(ct3_structure), ring=ring)
