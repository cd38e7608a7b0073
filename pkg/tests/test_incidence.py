"""
Tests for incidence algebras and Mobius inversion
"""

import pytest
from sympy.polys.domains import GF, QQ, ZZ

from efountain.catalan import build_preceq
from efountain.errors import BasisMismatch, NonInvertibleDiagonal, NotContained
from efountain.incidence import IncidenceAlgebraElement, mobius_inverse
from efountain.relation import BinaryRelation


@pytest.fixture
def preceq2():
    """Subsets of [2] ordered elementwise: 0=() 1=(1,) 2=(2,) 3=(1,2)"""
    return build_preceq(2).relation


def _chain(n):
    return BinaryRelation.from_pairs(n, [(a, b) for a in range(n) for b in range(n) if a <= b])


class TestMobius:
    """Inverting zeta functions"""

    def test_preceq2_mobius(self, preceq2):
        mu = mobius_inverse(IncidenceAlgebraElement.zeta(preceq2))
        assert mu(1, 2) == -1
        assert mu(0, 0) == 1
        assert len(mu.support()) == 5

    @pytest.mark.parametrize("ring", [ZZ, QQ, GF(5), GF(4), GF(6)])
    def test_two_sided(self, ring):
        order = _chain(4)
        zeta = IncidenceAlgebraElement.zeta(order, ring)
        mu = mobius_inverse(zeta)
        delta = IncidenceAlgebraElement.delta(order, ring)
        assert zeta * mu == delta
        assert mu * zeta == delta

    def test_chain_mobius(self):
        mu = mobius_inverse(IncidenceAlgebraElement.zeta(_chain(3)))
        assert mu.values == {(0, 0): 1, (0, 1): -1, (1, 1): 1, (1, 2): -1, (2, 2): 1}

    def test_non_unit_diagonal(self):
        order = _chain(2)
        f = IncidenceAlgebraElement(order, ZZ, {(0, 0): 2, (1, 1): 1})
        assert not f.is_invertible()
        with pytest.raises(NonInvertibleDiagonal) as exc:
            mobius_inverse(f)
        assert exc.value.witness == (0,)

    def test_rational_diagonal(self):
        order = _chain(2)
        f = IncidenceAlgebraElement(order, QQ, {(0, 0): 2, (0, 1): 1, (1, 1): 1})
        g = mobius_inverse(f)
        assert f * g == IncidenceAlgebraElement.delta(order, QQ)
        assert g(0, 1) == QQ(-1, 2)


class TestIncidenceArithmetic:
    """Convolution and the standard elements"""

    def test_delta_is_unit(self, preceq2):
        f = IncidenceAlgebraElement(preceq2, ZZ, {(1, 2): 3, (0, 0): 2})
        delta = IncidenceAlgebraElement.delta(preceq2)
        assert delta * f == f
        assert f * delta == f

    def test_zero_values_dropped(self, preceq2):
        f = IncidenceAlgebraElement(preceq2, ZZ, {(1, 2): 0})
        assert f.support() == []

    def test_value_off_the_order(self, preceq2):
        with pytest.raises(NotContained):
            IncidenceAlgebraElement(preceq2, ZZ, {(2, 1): 1})

    def test_indicator_outside_order(self, preceq2):
        rel = BinaryRelation.from_pairs(4, [(3, 0)])
        with pytest.raises(NotContained):
            IncidenceAlgebraElement.indicator(rel, preceq2)

    def test_mixed_rings(self, preceq2):
        with pytest.raises(BasisMismatch):
            IncidenceAlgebraElement.zeta(preceq2, ZZ) + IncidenceAlgebraElement.zeta(preceq2, QQ)

    def test_subtraction(self, preceq2):
        zeta = IncidenceAlgebraElement.zeta(preceq2)
        assert (zeta - zeta).support() == []
