"""
Tests for coefficient ring parsing
"""

import numpy as np
import pytest
from sympy.polys.domains import GF, QQ, ZZ

from efountain.errors import RingSpecError
from efountain.rings import characteristic, invert, parse_ring, ring_label

pytestmark = pytest.mark.unit


class TestParseRing:
    """--ring values"""

    @pytest.mark.parametrize("spec,ring", [
        ("int", ZZ),
        ("INT", ZZ),
        ("rational", QQ),
        ("mod2", GF(2)),
        (" mod 5 ", GF(5)),
        ("mod4", GF(4)),
        ("mod6", GF(6)),
    ])
    def test_known(self, spec, ring):
        assert parse_ring(spec) == ring

    @pytest.mark.parametrize("spec", ["mod1", "mod0", "real", ""])
    def test_rejected(self, spec):
        with pytest.raises(RingSpecError):
            parse_ring(spec)

    @pytest.mark.parametrize("spec", ["int", "rational", "mod7", "mod4", "mod6"])
    def test_label_round_trip(self, spec):
        assert ring_label(parse_ring(spec)) == spec


class TestRingArithmetic:
    """Units and characteristic"""

    def test_characteristic(self):
        assert characteristic(ZZ) == 0
        assert characteristic(GF(3)) == 3
        assert characteristic(GF(6)) == 6

    def test_invert_integer_units(self):
        assert invert(ZZ, ZZ(-1)) == -1
        assert invert(ZZ, ZZ(2)) is None

    def test_invert_in_field(self):
        assert invert(QQ, QQ(2)) == QQ(1, 2)
        assert invert(GF(5), GF(5)(2)) == GF(5)(3)
        assert invert(GF(5), GF(5)(0)) is None

    def test_invert_mod_composite(self):
        Z4 = GF(4)
        assert Z4(3) * Z4(3) == Z4(1)
        assert invert(Z4, Z4(3)) == Z4(3)
        assert invert(Z4, Z4(2)) is None
        assert invert(GF(6), GF(6)(5)) == GF(6)(5)
        assert invert(GF(6), GF(6)(3)) is None


class TestRingAxioms:
    """Ring laws on random elements"""

    @pytest.mark.parametrize("ring", [ZZ, QQ, GF(2), GF(4), GF(6)])
    def test_laws(self, ring):
        rng = np.random.default_rng(20240601)
        for x, y, z in rng.integers(-20, 21, size=(50, 3)).tolist():
            a, b, c = ring(x), ring(y), ring(z)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a + ring.zero == a
            assert a * ring.one == a
            assert a + (-a) == ring.zero
