# efountain/algebra.py
"""Semigroup and category algebras and the change of basis between them.

phi(a) = sum of C(c) over c tri_l a. When tri_l sits inside a partial order,
psi(C(a)) = sum over b <= a of zeta_l^-1(b, a) b is its inverse.
"""
from __future__ import annotations
from dataclasses import dataclass
import logging
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np
from sympy import igcd
from sympy.polys.domains import ZZ, Domain
from sympy.polys.matrices import DomainMatrix

from efountain.category import FiniteCategory, is_thin
from efountain.errors import BasisMismatch, IndexOutOfRange, InternalMismatch, NotContained, TheoremViolation
from efountain.fountain import (
    CheckResult,
    EFountainStructure,
    check_generalized_right_ample,
    check_right_ample,
    check_subsemilattice,
    first_hit,
    require_congruence,
)
from efountain.incidence import IncidenceAlgebraElement, mobius_inverse
from efountain.orders import NoEmbedding, embedding_order, tri_left
from efountain.relation import BinaryRelation
from efountain.rings import characteristic, ring_label
from efountain.semigroup import FiniteSemigroup

log = logging.getLogger(__name__)


# ---------- elements ----------
@dataclass(frozen=True)
class Basis:
    kind: str  # "S" or "C"
    key: str
    size: int


def semigroup_basis(S: FiniteSemigroup) -> Basis:
    return Basis("S", S.fingerprint, S.size)


def category_basis(C: FiniteCategory) -> Basis:
    return Basis("C", C.fingerprint, C.n_morphisms)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    basis: Basis
    ring: Domain
    coeffs: Mapping[int, Any]

    def __post_init__(self):
        clean: Dict[int, Any] = {}
        for i, v in self.coeffs.items():
            i = int(i)
            if not 0 <= i < self.basis.size:
                raise IndexOutOfRange(f"basis index {i} outside [0, {self.basis.size})", (i,))
            v = self.ring.convert(v)
            if not self.ring.is_zero(v):
                clean[i] = v
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, basis: Basis, ring: Domain = ZZ) -> "AlgebraElement":
        return cls(basis, ring, {})

    @classmethod
    def basis_element(cls, basis: Basis, i: int, ring: Domain = ZZ) -> "AlgebraElement":
        return cls(basis, ring, {i: ring.one})

    def coefficient(self, i: int):
        return self.coeffs.get(i, self.ring.zero)

    def support(self) -> Tuple[int, ...]:
        return tuple(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "AlgebraElement") -> None:
        if other.basis != self.basis:
            raise BasisMismatch(f"basis {self.basis.kind} vs {other.basis.kind} (or different structures)")
        if other.ring != self.ring:
            raise BasisMismatch(f"ring {ring_label(self.ring)} vs {ring_label(other.ring)}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, self.ring.zero) + v
        return AlgebraElement(self.basis, self.ring, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.basis, self.ring, {i: -v for i, v in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.basis == other.basis and self.ring == other.ring and self.coeffs == other.coeffs

    __hash__ = None

    def render(self, labels: Optional[Tuple[str, ...]] = None) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, v in self.coeffs.items():
            name = labels[i] if labels else str(i)
            if self.basis.kind == "C":
                name = f"C({name})"
            c = self.ring.to_sympy(v)
            terms.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(terms)


# ---------- products ----------
def _bilinear(x: AlgebraElement, y: AlgebraElement, table: np.ndarray) -> AlgebraElement:
    out: Dict[int, Any] = {}
    zero = x.ring.zero
    for a, u in x.coeffs.items():
        row = table[a]
        for b, v in y.coeffs.items():
            p = int(row[b])
            if p >= 0:
                out[p] = out.get(p, zero) + u * v
    return AlgebraElement(x.basis, x.ring, out)


def semigroup_mult(x: AlgebraElement, y: AlgebraElement, S: FiniteSemigroup) -> AlgebraElement:
    x._check(y)
    if x.basis != semigroup_basis(S):
        raise BasisMismatch("operands are not over the semigroup basis of S")
    return _bilinear(x, y, S.table)


def category_mult(x: AlgebraElement, y: AlgebraElement, C: FiniteCategory) -> AlgebraElement:
    """Undefined composites contribute 0."""
    x._check(y)
    if x.basis != category_basis(C):
        raise BasisMismatch("operands are not over the category basis of C")
    return _bilinear(x, y, C.comp)


def unit_element(C: FiniteCategory, ring: Domain = ZZ) -> AlgebraElement:
    return AlgebraElement(category_basis(C), ring, {e: ring.one for e in C.objects})


# ---------- phi ----------
def phi(x: AlgebraElement, F: EFountainStructure, C: FiniteCategory,
        tri: Optional[BinaryRelation] = None) -> AlgebraElement:
    require_congruence(F, "phi")
    if x.basis != semigroup_basis(F.semigroup):
        raise BasisMismatch("phi takes elements over the semigroup basis")
    tri = tri if tri is not None else tri_left(F)
    out: Dict[int, Any] = {}
    for a, v in x.coeffs.items():
        for c in tri.predecessors(a):
            out[c] = out.get(c, x.ring.zero) + v
    return AlgebraElement(category_basis(C), x.ring, out)


def verify_homomorphism(F: EFountainStructure, C: FiniteCategory, ring: Domain = ZZ,
                        tri: Optional[BinaryRelation] = None) -> CheckResult:
    """phi(ba) = phi(b) phi(a) on every basis pair, compared in `ring`."""
    require_congruence(F, "phi")
    tri = tri if tri is not None else tri_left(F)
    TL = tri.matrix  # [c, a]: c tri_l a
    T, comp = F.table, C.comp
    m = F.size
    p = characteristic(ring)
    TLf = TL.astype(np.float64)

    witness = None
    for b in range(m):
        below_b = np.flatnonzero(TL[:, b])
        # [c', x]: how many c'' below b give C(c'')C(c') = C(x)
        hits = comp[below_b, :]
        counts = np.zeros((m, m), dtype=np.float64)
        rows, cols = np.nonzero(hits >= 0)
        np.add.at(counts, (cols, hits[rows, cols]), 1.0)
        rhs = np.rint(TLf.T @ counts).astype(np.int64)  # [a, x]
        lhs = TL[:, T[b]].T.astype(np.int64)            # [a, x]: x tri_l ba
        diff = lhs - rhs
        bad = diff != 0 if p == 0 else diff % p != 0
        hit = first_hit(bad)
        if hit is not None:
            witness = (b, hit[0])
            break

    holds = witness is None
    gen = check_generalized_right_ample(F)
    if holds != gen.holds:
        raise TheoremViolation(
            f"phi multiplicative over {ring_label(ring)} is {holds} but generalized right ample is {gen.holds}",
            witness or gen.witness,
        )
    if holds:
        return CheckResult(True)
    return CheckResult(False, witness, ("b", "a"), "phi(ba) != phi(b)phi(a)")


def phi_matrix(F: EFountainStructure, tri: Optional[BinaryRelation] = None) -> np.ndarray:
    """Column a holds the coordinates of phi(a)."""
    tri = tri if tri is not None else tri_left(F)
    return tri.matrix.astype(np.int64)


def phi_is_injective(F: EFountainStructure, ring: Domain = ZZ, tri: Optional[BinaryRelation] = None) -> bool:
    """phi is injective iff det of its matrix is not a zero divisor in `ring`."""
    M = phi_matrix(F, tri)
    det = int(DomainMatrix([[ZZ(int(v)) for v in row] for row in M], M.shape, ZZ).det())
    m = characteristic(ring)
    if m == 0:
        return det != 0
    return igcd(det, m) == 1


# ---------- zeta_l and psi ----------
def zeta_l(F: EFountainStructure, order: BinaryRelation, ring: Domain = ZZ,
           tri: Optional[BinaryRelation] = None) -> IncidenceAlgebraElement:
    tri = tri if tri is not None else tri_left(F)
    if not order.is_partial_order():
        raise NotContained("the embedding relation is not a partial order")
    return IncidenceAlgebraElement.indicator(tri, order, ring)


def psi(y: AlgebraElement, F: EFountainStructure, order: BinaryRelation,
        zeta_inverse: Optional[IncidenceAlgebraElement] = None) -> AlgebraElement:
    if y.basis.kind != "C" or y.basis.size != F.size:
        raise BasisMismatch("psi takes elements over the category basis")
    zinv = zeta_inverse if zeta_inverse is not None else mobius_inverse(zeta_l(F, order, y.ring))
    # column a of zeta_l^-1
    column: Dict[int, list] = {}
    for (b, a), v in zinv.values.items():
        column.setdefault(a, []).append((b, v))
    out: Dict[int, Any] = {}
    for a, u in y.coeffs.items():
        for b, v in column.get(a, ()):
            out[b] = out.get(b, y.ring.zero) + u * v
    return AlgebraElement(semigroup_basis(F.semigroup), y.ring, out)


class ChangeOfBasis:
    """phi and psi for one structure, with zeta_l and its inverse computed once."""

    def __init__(self, F: EFountainStructure, C: FiniteCategory, order: BinaryRelation, ring: Domain = ZZ):
        self.F, self.C, self.order, self.ring = F, C, order, ring
        self.tri = tri_left(F)
        self.zeta = zeta_l(F, order, ring, self.tri)
        self.zeta_inverse = mobius_inverse(self.zeta)

    def inverse_is_two_sided(self) -> bool:
        delta = IncidenceAlgebraElement.delta(self.order, self.ring)
        return self.zeta * self.zeta_inverse == delta and self.zeta_inverse * self.zeta == delta

    def phi(self, x: AlgebraElement) -> AlgebraElement:
        return phi(x, self.F, self.C, self.tri)

    def psi(self, y: AlgebraElement) -> AlgebraElement:
        return psi(y, self.F, self.order, self.zeta_inverse)

    def s(self, a: int) -> AlgebraElement:
        return AlgebraElement.basis_element(semigroup_basis(self.F.semigroup), a, self.ring)

    def c(self, a: int) -> AlgebraElement:
        return AlgebraElement.basis_element(category_basis(self.C), a, self.ring)

    def first_psi_phi_failure(self) -> Optional[int]:
        for a in range(self.F.size):
            if self.psi(self.phi(self.s(a))) != self.s(a):
                return a
        return None

    def first_phi_psi_failure(self) -> Optional[int]:
        for a in range(self.F.size):
            if self.phi(self.psi(self.c(a))) != self.c(a):
                return a
        return None


@dataclass(frozen=True)
class IsomorphismResult:
    holds: bool
    reason: str = ""
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def verify_isomorphism(F: EFountainStructure, C: FiniteCategory,
                       order: Union[BinaryRelation, NoEmbedding, None] = None,
                       ring: Domain = ZZ) -> IsomorphismResult:
    if not F.congruence.holds:
        return IsomorphismResult(False, "congruence condition fails", F.congruence.witness)
    order = order if order is not None else embedding_order(F)
    if isinstance(order, NoEmbedding):
        return IsomorphismResult(False, "tri_l is not contained in a partial order", order.cycle)

    hom = verify_homomorphism(F, C, ring)
    basis = ChangeOfBasis(F, C, order, ring)
    if not basis.inverse_is_two_sided():
        raise InternalMismatch("zeta_l inverse is not two-sided")
    a = basis.first_psi_phi_failure()
    if a is not None:
        raise InternalMismatch(f"psi(phi(s)) != s at {F.label(a)}", (a,))
    a = basis.first_phi_psi_failure()
    if a is not None:
        raise InternalMismatch(f"phi(psi(C(s))) != C(s) at {F.label(a)}", (a,))

    result = IsomorphismResult(True) if hom.holds else IsomorphismResult(
        False, "phi is not multiplicative", hom.witness)
    if check_subsemilattice(F.e_set, F.semigroup).holds:
        std = check_right_ample(F)
        if std.holds != result.holds:
            raise TheoremViolation(
                f"E is a subsemilattice: isomorphism={result.holds} but right ample={std.holds}",
                std.witness,
            )
    log.info("isomorphism over %s: %s", ring_label(ring), result.holds)
    return result


# ---------- thin categories as incidence algebras ----------
def poset_category_algebra_iso(C: FiniteCategory, ring: Domain = ZZ) -> bool:
    """Whether C(m) -> (cod m, dom m) identifies kC with the incidence algebra of its hom-relation."""
    if not is_thin(C):
        return False
    pos = {e: i for i, e in enumerate(C.objects)}
    k = len(pos)
    pair_of = [(pos[int(C.cod[m])], pos[int(C.dom[m])]) for m in range(C.n_morphisms)]
    order = BinaryRelation.from_pairs(k, pair_of)
    if not order.is_partial_order() or len(order) != C.n_morphisms:
        return False
    for m2 in range(C.n_morphisms):
        for m1 in range(C.n_morphisms):
            left = IncidenceAlgebraElement(order, ring, {pair_of[m2]: 1})
            right = IncidenceAlgebraElement(order, ring, {pair_of[m1]: 1})
            prod = left * right
            c = C.compose(m2, m1)
            expected = IncidenceAlgebraElement(order, ring, {pair_of[c]: 1} if c is not None else {})
            if prod != expected:
                return False
    return True
