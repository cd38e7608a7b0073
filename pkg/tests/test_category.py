"""
Tests for the category C(S)
"""

import pytest

from efountain.category import (
    FiniteCategory,
    build_category,
    category_axioms,
    dump_category,
    hom_set,
    is_thin,
)
from efountain.corpus import cyclic_group
from efountain.fountain import analyze_reduced_e_fountain
from efountain.semigroup import from_cayley_table


class TestBuildCategory:
    """Objects, morphisms and composition"""

    def test_ct3_is_poset(self, ct3_structure, fixtures_dir):
        C = build_category(ct3_structure)
        assert C.n_objects == 4
        assert C.n_morphisms == 5
        assert is_thin(C)
        assert dump_category(C) == (fixtures_dir / "golden" / "catalan_3.category").read_text()

    def test_ct3_hom_set(self, ct3_structure):
        C = build_category(ct3_structure)
        assert hom_set(C, 1, 2) == (3,)
        assert hom_set(C, 2, 1) == ()

    def test_rectangular(self, rect2_structure):
        C = build_category(rect2_structure)
        assert C.objects == (0, 3)
        assert C.n_morphisms == 4
        for x in C.objects:
            for y in C.objects:
                assert len(hom_set(C, x, y)) == 1

    def test_single_idempotent(self):
        F = analyze_reduced_e_fountain(from_cayley_table([[0]]), [0])
        C = build_category(F)
        assert C.n_objects == 1 and C.n_morphisms == 1

    def test_group_is_one_object(self):
        entry = cyclic_group(3)
        C = build_category(analyze_reduced_e_fountain(entry.semigroup, entry.e_set))
        assert C.objects == (0,)
        assert not is_thin(C)
        assert C.compose(1, 2) == 0

    def test_composition(self, ct3_structure):
        C = build_category(ct3_structure)
        # C(e1) after C(e1e2), where e1e2 runs from e2 to e1
        assert C.compose(2, 3) == 3
        assert C.compose(3, 1) == 3
        assert C.compose(3, 3) is None

    def test_identities(self, ct4_structure):
        C = build_category(ct4_structure)
        assert C.identities == {e: e for e in ct4_structure.e_set}
        assert category_axioms(C)


class TestCategoryAxioms:
    """category_axioms on hand-built categories"""

    def test_composable_pair_left_undefined(self):
        C = FiniteCategory((0,), [0], [0], [[-1]])
        res = category_axioms(C)
        assert not res
        assert res.witness == (0, 0)

    def test_wrong_identity(self):
        # two endomorphisms of one object, with 0 composing like a zero
        C = FiniteCategory((0,), [0, 0], [0, 0], [[0, 0], [0, 0]])
        res = category_axioms(C)
        assert not res
        assert "identity" in res.detail

    @pytest.mark.parametrize("fixture", ["ct3_structure", "rect2_structure", "i2_structure"])
    def test_built_categories_satisfy_axioms(self, fixture, request):
        C = build_category(request.getfixturevalue(fixture))
        assert category_axioms(C)
