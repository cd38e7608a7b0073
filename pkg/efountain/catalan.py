# efountain/catalan.py
"""The Catalan monoid CT_d of order-preserving, order-increasing maps on [d].

Functions take the ambient degree d. Subsets X, Y, Z live in [d-1], and the
value d plays the role of the extra top point in f_{X,Y} and e_Z.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from itertools import chain, combinations, combinations_with_replacement
import logging
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from sympy import catalan
from sympy.polys.domains import ZZ, Domain

from efountain.algebra import ChangeOfBasis, poset_category_algebra_iso, verify_homomorphism, verify_isomorphism
from efountain.category import build_category, category_axioms, hom_set, is_thin
from efountain.config import load_settings
from efountain.errors import DegreeTooLarge, FountainError, IndexOutOfRange, NotComparable, StageFailure
from efountain.fountain import (
    CheckResult,
    EFountainStructure,
    analyze_reduced_e_fountain,
    check_generalized_left_ample,
    check_generalized_right_ample,
    check_right_ample,
    tilde_relations,
)
from efountain.orders import diagnose, embedding_order, tri_left
from efountain.relation import BinaryRelation
from efountain.report import FAIL, Report, fmt_elements
from efountain.rings import ring_label
from efountain.semigroup import (
    FiniteSemigroup,
    Transformation,
    from_transformations,
    green_preorder,
    idempotents,
    is_J_trivial,
    semigroup_of_transformations,
)

log = logging.getLogger(__name__)

Subset = Tuple[int, ...]

# PCS/MCS sweeps are quadratic in |CT_d| times 2^(d-1)
PCS_MAX_DEGREE = 5


def catalan_number(n: int) -> int:
    return int(catalan(n))


def subsets(n: int) -> List[Subset]:
    """All subsets of [n], ordered by size then lexicographically."""
    ground = range(1, n + 1)
    return [tuple(c) for c in chain.from_iterable(combinations(ground, k) for k in range(n + 1))]


def preceq(X: Iterable[int], Y: Iterable[int]) -> bool:
    xs, ys = sorted(X), sorted(Y)
    return len(xs) == len(ys) and all(x <= y for x, y in zip(xs, ys))


# ---------- SubsetPoset ----------
@dataclass(frozen=True, eq=False)
class SubsetPoset:
    n: int
    elements: Tuple[Subset, ...]
    relation: BinaryRelation

    @cached_property
    def _index(self) -> Dict[Subset, int]:
        return {X: i for i, X in enumerate(self.elements)}

    def index(self, X: Iterable[int]) -> int:
        return self._index[tuple(sorted(X))]

    def leq(self, X: Iterable[int], Y: Iterable[int]) -> bool:
        return (self.index(X), self.index(Y)) in self.relation


def build_preceq(n: int) -> SubsetPoset:
    elements = tuple(subsets(n))
    k = len(elements)
    M = np.zeros((k, k), dtype=bool)
    for i, X in enumerate(elements):
        for j, Y in enumerate(elements):
            M[i, j] = preceq(X, Y)
    poset = SubsetPoset(n, elements, BinaryRelation(M))
    expected = catalan_number(n + 1)
    if len(poset.relation) != expected:
        raise FountainError(f"preceq_{n} has {len(poset.relation)} comparable pairs, expected {expected}")
    return poset


# ---------- e_Z and f_{X,Y} ----------
def _check_subset(Z: Iterable[int], degree: int) -> Subset:
    zs = tuple(sorted(set(int(z) for z in Z)))
    for z in zs:
        if not 1 <= z <= degree - 1:
            raise IndexOutOfRange(f"{z} is outside [1, {degree - 1}]", (z,))
    return zs


def e_Z(Z: Iterable[int], degree: int) -> Transformation:
    zs = _check_subset(Z, degree)
    points = zs + (degree,)
    f = Transformation(tuple(min(z for z in points if i <= z) for i in range(1, degree + 1)))
    if not f.is_idempotent():
        raise FountainError(f"e_Z for Z={zs} is not idempotent")
    if tuple(sorted(f.image() - {degree})) != zs:
        raise FountainError(f"image of e_Z does not recover Z={zs}")
    return f


def f_from_pair(X: Iterable[int], Y: Iterable[int], degree: int) -> Transformation:
    xs, ys = _check_subset(X, degree), _check_subset(Y, degree)
    if not preceq(xs, ys):
        raise NotComparable(f"{xs} is not below {ys}")
    images = []
    for i in range(1, degree + 1):
        j = next((j for j, x in enumerate(xs) if i <= x), None)
        images.append(degree if j is None else ys[j])
    return Transformation(tuple(images))


def pair_from_f(f: Transformation) -> Tuple[Subset, Subset]:
    d = f.degree
    Y = tuple(sorted(f.image() - {d}))
    # x_j is the largest point mapped to y_j
    X = tuple(max(i for i in range(1, d + 1) if f(i) == y) for y in Y)
    return X, Y


def is_pcs(f: Transformation, Z: Iterable[int]) -> bool:
    """f avoids the top point on Z and is injective there."""
    zs = tuple(Z)
    vals = [f(z) for z in zs]
    return f.degree not in vals and len(set(vals)) == len(vals)


def is_mcs(g: Transformation, Z: Iterable[int]) -> bool:
    """Every z in Z is hit by e_Z g."""
    zs = _check_subset(Z, g.degree)
    hit = e_Z(zs, g.degree).compose(g).image()
    return all(z in hit for z in zs)


# ---------- the monoid ----------
@dataclass(frozen=True, eq=False)
class CatalanMonoid:
    degree: int
    semigroup: FiniteSemigroup
    maps: Tuple[Transformation, ...]
    pair_map: Tuple[Tuple[Subset, Subset], ...]

    @property
    def n(self) -> int:
        return self.degree - 1

    @cached_property
    def _index(self) -> Dict[Tuple[int, ...], int]:
        return {f.images: i for i, f in enumerate(self.maps)}

    def index_of(self, f: Transformation) -> int:
        return self._index[f.images]

    def e_index(self, Z: Iterable[int]) -> int:
        return self.index_of(e_Z(Z, self.degree))


def enumerate_catalan_maps(degree: int) -> List[Transformation]:
    out = []
    for images in combinations_with_replacement(range(1, degree + 1), degree):
        if all(x >= i for i, x in enumerate(images, start=1)):
            out.append(Transformation(images))
    return out


def generate_catalan(degree: int, max_degree: Optional[int] = None) -> CatalanMonoid:
    if degree < 1:
        raise FountainError(f"degree must be at least 1, got {degree}")
    limit = max_degree if max_degree is not None else load_settings().max_catalan_degree
    if degree > limit:
        raise DegreeTooLarge(f"degree {degree} exceeds the limit {limit}", (degree,))
    maps = enumerate_catalan_maps(degree)
    S = semigroup_of_transformations(maps, f"CT{degree}")
    log.info("CT%d has %d elements", degree, S.size)
    return CatalanMonoid(degree, S, tuple(maps), tuple(pair_from_f(f) for f in maps))


def closure_cross_check(degree: int) -> bool:
    """Closure of the identity and the e_{[d-1] minus {i}} equals direct enumeration."""
    full = tuple(range(1, degree))
    gens = [Transformation.identity(degree)]
    gens += [e_Z(tuple(z for z in full if z != i), degree) for i in full]
    closed = from_transformations(gens)
    direct = {f.label() for f in enumerate_catalan_maps(degree)}
    return set(closed.labels) == direct


# ---------- checks ----------
def star_plus_check(M: CatalanMonoid, F: EFountainStructure) -> CheckResult:
    for a, (X, Y) in enumerate(M.pair_map):
        if F.star[a] != M.e_index(X):
            return CheckResult(False, (a,), ("f",), "f* != e_X")
        if F.plus[a] != M.e_index(Y):
            return CheckResult(False, (a,), ("f",), "f+ != e_Y")
    lt, rt = tilde_relations(F)
    for a in range(len(M.maps)):
        for b in range(len(M.maps)):
            if ((a, b) in lt) != (M.maps[a].kernel() == M.maps[b].kernel()):
                return CheckResult(False, (a, b), ("f", "g"), "L~ does not match equal kernels")
            if ((a, b) in rt) != (M.maps[a].image() == M.maps[b].image()):
                return CheckResult(False, (a, b), ("f", "g"), "R~ does not match equal images")
    return CheckResult(True)


def pcs_check(M: CatalanMonoid, F: EFountainStructure) -> CheckResult:
    T = M.semigroup.table
    for Z in subsets(M.n):
        ez = M.e_index(Z)
        for a, f in enumerate(M.maps):
            if is_pcs(f, Z) != (F.star[T[a, ez]] == ez):
                return CheckResult(False, (a, ez), ("f", "e_Z"), "PCS does not match (f e_Z)* = e_Z")
    return CheckResult(True)


def mcs_check(M: CatalanMonoid, F: EFountainStructure) -> CheckResult:
    T = M.semigroup.table
    for Z in subsets(M.n):
        ez = M.e_index(Z)
        for a, g in enumerate(M.maps):
            if is_mcs(g, Z) != (F.plus[T[ez, a]] == ez):
                return CheckResult(False, (a, ez), ("g", "e_Z"), "MCS does not match (e_Z g)+ = e_Z")
    return CheckResult(True)


def pair_bijection_check(M: CatalanMonoid, poset: SubsetPoset) -> CheckResult:
    seen = set()
    for a, (X, Y) in enumerate(M.pair_map):
        if not poset.leq(X, Y) or f_from_pair(X, Y, M.degree) != M.maps[a]:
            return CheckResult(False, (a,), ("f",), "pair does not round-trip")
        seen.add((X, Y))
    if len(seen) != len(poset.relation):
        return CheckResult(False, detail=f"{len(seen)} pairs for {len(poset.relation)} comparable pairs")
    return CheckResult(True)


def category_poset_check(M: CatalanMonoid, C, poset: SubsetPoset) -> CheckResult:
    """C(S) is thin with a morphism e_X -> e_Y exactly when X precedes Y."""
    if not is_thin(C):
        return CheckResult(False, detail="category is not thin")
    for X in poset.elements:
        for Y in poset.elements:
            homs = hom_set(C, M.e_index(X), M.e_index(Y))
            if len(homs) != int(poset.leq(X, Y)):
                return CheckResult(False, (M.e_index(X), M.e_index(Y)), ("e_X", "e_Y"),
                                   "hom-set does not match preceq")
    return CheckResult(True)


def run_catalan_checks(degree: int, ring: Domain = ZZ, second_ring: Optional[Domain] = None) -> Report:
    M = generate_catalan(degree)
    S = M.semigroup
    report = Report(S.name)
    n = degree - 1

    report.check("catalan.size", S.size == catalan_number(degree), f"{S.size} elements")
    E = idempotents(S)
    all_e_z = {M.e_index(Z) for Z in subsets(n)}
    report.check("catalan.idempotents", len(E) == 2 ** n and set(E) == all_e_z, f"{len(E)} idempotents")
    poset = build_preceq(n)
    report.check("catalan.pairBijection", pair_bijection_check(M, poset), S=S)
    report.check("catalan.closureCrossCheck", closure_cross_check(degree))
    report.check("jTrivial", is_J_trivial(S))

    try:
        F = analyze_reduced_e_fountain(S, E)
    except FountainError as exc:
        raise StageFailure("reducedEFountain", str(exc), exc.witness) from exc
    report.check("reducedEFountain", True)
    report.check("congruence", F.congruence, S=S)
    report.check("catalan.starPlus", star_plus_check(M, F), S=S)
    if degree <= PCS_MAX_DEGREE:
        report.check("catalan.pcs", pcs_check(M, F), S=S)
        report.check("catalan.mcs", mcs_check(M, F), S=S)
    else:
        report.skip("catalan.pcs", f"degree above {PCS_MAX_DEGREE}")
        report.skip("catalan.mcs", f"degree above {PCS_MAX_DEGREE}")

    report.check("generalizedRightAmple", check_generalized_right_ample(F), S=S)
    report.check("generalizedLeftAmple", check_generalized_left_ample(F), S=S)
    right = check_right_ample(F)
    if right.holds:
        report.note("rightAmple holds")
    else:
        report.note(f"rightAmple fails at {right.describe(S)}")
    report.check("catalan.rightAmpleFailsFromDegree3", right.holds == (degree < 3), right.describe(S))

    tri = tri_left(F)
    diag = diagnose(tri)
    if diag.transitive_witness is not None:
        report.note(f"tri_l not transitive at {fmt_elements(diag.transitive_witness, S)}")
    report.check("catalan.triInsideR", tri.issubset(green_preorder(S, "R")))

    try:
        C = build_category(F)
    except FountainError as exc:
        raise StageFailure("categoryAxioms", str(exc), exc.witness) from exc
    report.check("categoryAxioms", category_axioms(C))
    report.check("catalan.categoryIsPoset", category_poset_check(M, C, poset), S=S)
    report.check("catalan.posetAlgebra", poset_category_algebra_iso(C, ring))

    order = embedding_order(F, tri)
    report.check("homomorphism", verify_homomorphism(F, C, ring, tri), S=S)
    if second_ring is not None:
        report.check(f"homomorphism[{ring_label(second_ring)}]", verify_homomorphism(F, C, second_ring, tri), S=S)
    report.check("mobiusInverse", ChangeOfBasis(F, C, order, ring).inverse_is_two_sided())
    iso = verify_isomorphism(F, C, order, ring)
    report.check("isomorphism", iso.holds, iso.reason)
    return report


def verify_catalan_isomorphism(degree: int, ring: Domain = ZZ) -> bool:
    report = run_catalan_checks(degree, ring)
    for line in report.lines:
        if line.status == FAIL:
            raise StageFailure(line.name, f"CT{degree} over {ring_label(ring)}: {line.witness or 'failed'}")
    return True
