# efountain/fountain.py
"""Reduced E-Fountain structure on a finite semigroup and the ample identities.

All exhaustive checks report the lexicographically first failing tuple.
The left-handed checks are the right-handed ones run on the opposite
semigroup, where the roles of star and plus swap.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
import logging
from typing import Iterable, Optional, Tuple

import numpy as np

from efountain.errors import (
    CongruenceConditionRequired,
    IndexOutOfRange,
    InternalMismatch,
    NotEFountain,
    NotEhresmann,
    NotIdempotent,
    NotReduced,
    TheoremViolation,
)
from efountain.relation import BinaryRelation
from efountain.semigroup import FiniteSemigroup, green_equiv, natural_order_matrix

log = logging.getLogger(__name__)


# ---------- results ----------
@dataclass(frozen=True)
class CheckResult:
    holds: bool
    witness: Optional[Tuple[int, ...]] = None
    names: Tuple[str, ...] = ()
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def describe(self, S: Optional[FiniteSemigroup] = None) -> str:
        if self.witness is None:
            return self.detail
        parts = []
        for i, w in enumerate(self.witness):
            name = self.names[i] if i < len(self.names) else f"x{i}"
            shown = S.label(w) if S is not None else str(w)
            parts.append(f"{name}={shown}")
        text = " ".join(parts)
        return f"{text} ({self.detail})" if self.detail else text


def first_hit(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(x) for x in hits[0])


@dataclass(frozen=True, eq=False)
class EFountainStructure:
    semigroup: FiniteSemigroup
    e_set: Tuple[int, ...]
    star: np.ndarray
    plus: np.ndarray

    def __post_init__(self):
        for name in ("star", "plus"):
            arr = np.array(getattr(self, name), dtype=np.int64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def size(self) -> int:
        return self.semigroup.size

    @property
    def table(self) -> np.ndarray:
        return self.semigroup.table

    @cached_property
    def e_array(self) -> np.ndarray:
        return np.array(self.e_set, dtype=np.int64)

    def label(self, a: int) -> str:
        return self.semigroup.label(a)

    @cached_property
    def congruence(self) -> CheckResult:
        return check_congruence_condition(self)

    def dual(self) -> "EFountainStructure":
        return EFountainStructure(self.semigroup.opposite(), self.e_set, self.plus, self.star)


# ---------- identity sets and tilde relations ----------
def _identity_masks(table: np.ndarray, E: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    d = np.arange(table.shape[0])
    right = table[:, E] == d[:, None]   # [a, i]: a E[i] = a
    left = table[E, :].T == d[:, None]  # [a, i]: E[i] a = a
    return right, left


def right_identity_set(a: int, F: EFountainStructure) -> Tuple[int, ...]:
    return tuple(e for e in F.e_set if F.semigroup.product(a, e) == a)


def left_identity_set(a: int, F: EFountainStructure) -> Tuple[int, ...]:
    return tuple(e for e in F.e_set if F.semigroup.product(e, a) == a)


def _same_rows(mask: np.ndarray) -> np.ndarray:
    return (mask[:, None, :] == mask[None, :, :]).all(axis=-1)


def tilde_relations(F: EFountainStructure) -> Tuple[BinaryRelation, BinaryRelation]:
    right, left = _identity_masks(F.table, F.e_array)
    return BinaryRelation(_same_rows(right)), BinaryRelation(_same_rows(left))


def green_tilde_inclusions(F: EFountainStructure) -> CheckResult:
    """L is contained in L~ and R in R~."""
    lt, rt = tilde_relations(F)
    for side, tilde in (("L", lt), ("R", rt)):
        pair = green_equiv(F.semigroup, side).first_outside(tilde)
        if pair is not None:
            return CheckResult(False, pair, ("a", "b"), f"{side} not inside {side}~")
    return CheckResult(True)


def tri_left_matrix(F: EFountainStructure) -> np.ndarray:
    """[a, b] is True iff a = b a*."""
    d = np.arange(F.size)
    return F.table[d[None, :], F.star[:, None]] == d[:, None]


# ---------- analysis ----------
def _normalize_e_set(S: FiniteSemigroup, E: Iterable[int]) -> Tuple[int, ...]:
    e_set = tuple(sorted({int(e) for e in E}))
    for e in e_set:
        if not 0 <= e < S.size:
            raise IndexOutOfRange(f"E contains {e}, outside [0, {S.size})", (e,))
        if S.product(e, e) != e:
            raise NotIdempotent(f"E contains {e} ({S.label(e)}), which is not idempotent", (e,))
    return e_set


def _minimum_choice(ident: np.ndarray, leq: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # candidate i is a minimum of row a when every j in the row satisfies E[i] <= E[j]
    blocked = ident.astype(np.int64) @ (~leq).T.astype(np.int64)
    valid = ident & (blocked == 0)
    return valid.any(axis=1), valid.argmax(axis=1)


def _biunary_identities(table: np.ndarray, star: np.ndarray, plus: np.ndarray) -> bool:
    d = np.arange(table.shape[0])
    P = plus[table]  # (ab)+
    Q = star[table]  # (ab)*
    checks = (
        table[plus, d] == d,
        plus[plus] == plus,
        table[plus[:, None], P] == P,
        table[P, plus[:, None]] == P,
        table[d, star] == d,
        star[star] == star,
        table[star[None, :], Q] == Q,
        table[Q, star[None, :]] == Q,
        star[plus] == plus,
        plus[star] == star,
    )
    return all(bool(np.all(c)) for c in checks)


def analyze_reduced_e_fountain(S: FiniteSemigroup, E: Iterable[int]) -> EFountainStructure:
    e_set = _normalize_e_set(S, E)
    Ea = np.array(e_set, dtype=np.int64)
    T = S.table
    m = S.size
    right, left = _identity_masks(T, Ea)

    # [a, i]: a L~ E[i] (resp. R~)
    l_meet = (right[:, None, :] == right[Ea][None, :, :]).all(axis=-1)
    r_meet = (left[:, None, :] == left[Ea][None, :, :]).all(axis=-1)
    for meet, cls in ((l_meet, "L~"), (r_meet, "R~")):
        missing = np.flatnonzero(~meet.any(axis=1))
        if missing.size:
            a = int(missing[0])
            raise NotEFountain(f"the {cls}-class of {S.label(a)} contains no element of E", (a,))

    # condition 1: ef = e iff fe = e on E
    ef_is_e = T[Ea[:, None], Ea[None, :]] == Ea[:, None]
    fe_is_e = T[Ea[None, :], Ea[:, None]] == Ea[:, None]
    reduced_bad = first_hit(ef_is_e & ~fe_is_e) or first_hit(fe_is_e & ~ef_is_e)
    cond1 = reduced_bad is None
    exactly_once = bool((l_meet.sum(axis=1) == 1).all() and (r_meet.sum(axis=1) == 1).all())
    if cond1 and not exactly_once:
        raise InternalMismatch("E is reduced but some tilde class meets E twice")

    # condition 2: a_E and Ea have natural-order minima
    leq = natural_order_matrix(S, e_set)
    star_ok, star_idx = _minimum_choice(right, leq)
    plus_ok, plus_idx = _minimum_choice(left, leq)
    cond2 = bool(star_ok.all() and plus_ok.all())

    # condition 3: the bi-unary identities for the class representatives
    star3 = Ea[l_meet.argmax(axis=1)]
    plus3 = Ea[r_meet.argmax(axis=1)]
    star3[Ea] = Ea
    plus3[Ea] = Ea
    cond3 = _biunary_identities(T, star3, plus3)

    if not cond1 == cond2 == cond3:
        raise InternalMismatch(
            f"reduced conditions disagree: classes={cond1} minima={cond2} identities={cond3}"
        )
    if not cond1:
        i, j = reduced_bad
        e, f = int(Ea[i]), int(Ea[j])
        if ef_is_e[i, j]:
            msg = f"{S.label(e)}*{S.label(f)} = {S.label(e)} but {S.label(f)}*{S.label(e)} != {S.label(e)}"
        else:
            msg = f"{S.label(f)}*{S.label(e)} = {S.label(e)} but {S.label(e)}*{S.label(f)} != {S.label(e)}"
        raise NotReduced(msg, (e, f))

    star = Ea[star_idx]
    plus = Ea[plus_idx]
    if not (np.array_equal(star, star3) and np.array_equal(plus, plus3)):
        a = int(np.flatnonzero((star != star3) | (plus != plus3))[0])
        raise InternalMismatch(f"minimum and class representative differ at {S.label(a)}", (a,))

    log.info("reduced E-Fountain structure on %s: |S|=%d |E|=%d", S.name or "semigroup", m, len(e_set))
    return EFountainStructure(S, e_set, star, plus)


# ---------- congruence condition ----------
def check_congruence_condition(F: EFountainStructure) -> CheckResult:
    T, star, plus = F.table, F.star, F.plus
    m = F.size

    # (ab)* = (a*b)* and (ab)+ = (ab+)+
    fail = (star[T] != star[T[star]]) | (plus[T] != plus[T[:, plus]])
    witness = first_hit(fail)

    # L~ right congruence, R~ left congruence
    lt, rt = tilde_relations(F)
    L, R = lt.matrix, rt.matrix
    definitional = True
    for a in range(m):
        right_ok = L[T[a][None, :], T]      # [b, c]: ac L~ bc
        left_ok = R[T[:, a][None, :], T.T]  # [b, c]: ca R~ cb
        if (L[a][:, None] & ~right_ok).any() or (R[a][:, None] & ~left_ok).any():
            definitional = False
            break

    holds = witness is None
    if holds != definitional:
        raise InternalMismatch(
            f"congruence identities say {holds}, tilde relations say {definitional}"
        )
    if holds:
        return CheckResult(True)
    return CheckResult(False, witness, ("a", "b"), "(ab)* != (a*b)* or (ab)+ != (ab+)+")


def require_congruence(F: EFountainStructure, what: str) -> None:
    if not F.congruence.holds:
        raise CongruenceConditionRequired(
            f"{what} is defined only under the congruence condition "
            f"(fails at {F.congruence.describe(F.semigroup)})",
            F.congruence.witness,
        )


# ---------- subbands and subsemilattices ----------
def check_subband(E: Iterable[int], S: FiniteSemigroup) -> CheckResult:
    Ea = np.array(sorted(set(E)), dtype=np.int64)
    inside = np.zeros(S.size, dtype=bool)
    inside[Ea] = True
    products = S.table[Ea[:, None], Ea[None, :]]
    hit = first_hit(~inside[products])
    if hit is None:
        return CheckResult(True)
    e, f = int(Ea[hit[0]]), int(Ea[hit[1]])
    return CheckResult(False, (e, f), ("e", "f"), "ef is not in E")


def check_subsemilattice(E: Iterable[int], S: FiniteSemigroup) -> CheckResult:
    band = check_subband(E, S)
    if not band.holds:
        return band
    Ea = np.array(sorted(set(E)), dtype=np.int64)
    ef = S.table[Ea[:, None], Ea[None, :]]
    hit = first_hit(ef != ef.T)
    if hit is None:
        return CheckResult(True)
    e, f = int(Ea[hit[0]]), int(Ea[hit[1]])
    return CheckResult(False, (e, f), ("e", "f"), "ef != fe")


def is_E_ehresmann(F: EFountainStructure) -> bool:
    band = check_subband(F.e_set, F.semigroup)
    lattice = check_subsemilattice(F.e_set, F.semigroup)
    # a subband of idempotents in a reduced structure already commutes
    if band.holds and not lattice.holds:
        raise TheoremViolation("E is a subband but not a subsemilattice", lattice.witness)
    return F.congruence.holds and lattice.holds


def check_subsemilattice_order_lemma(F: EFountainStructure) -> CheckResult:
    """When E is a subsemilattice, a tri_l b implies a* <= b*."""
    if not check_subsemilattice(F.e_set, F.semigroup).holds:
        return CheckResult(True, detail="E is not a subsemilattice")
    T, star = F.table, F.star
    below = (T[star[:, None], star[None, :]] == star[:, None]) & (T[star[None, :], star[:, None]] == star[:, None])
    hit = first_hit(tri_left_matrix(F) & ~below)
    if hit is None:
        return CheckResult(True)
    raise TheoremViolation("a tri_l b but a* is not below b* in a subsemilattice", hit)


# ---------- right ample ----------
def _right_ample(F: EFountainStructure) -> CheckResult:
    T, star, Ea = F.table, F.star, F.e_array
    d = np.arange(F.size)
    ea = T[Ea[:, None], d[None, :]]
    rhs = T[d[None, :], star[ea]]
    hit = first_hit(ea != rhs)

    # Ea is inside aE for every a
    in_aE = np.zeros((F.size, F.size), dtype=bool)
    in_aE[d[:, None], T[:, Ea]] = True
    inclusion = bool(in_aE[d[None, :], ea].all())
    if (hit is None) != inclusion:
        raise InternalMismatch(f"ea = a(ea)* gives {hit is None} but Ea in aE gives {inclusion}")
    if hit is None:
        return CheckResult(True)
    e, a = int(Ea[hit[0]]), hit[1]
    return CheckResult(False, (e, a), ("e", "a"), "ea != a(ea)*")


def check_right_ample(F: EFountainStructure) -> CheckResult:
    require_congruence(F, "the right ample condition")
    res = _right_ample(F)
    if res.holds and not check_subband(F.e_set, F.semigroup).holds:
        raise TheoremViolation("right ample holds but E is not a subband")
    return res


def check_left_ample(F: EFountainStructure) -> CheckResult:
    require_congruence(F, "the left ample condition")
    res = _right_ample(F.dual())
    if res.holds:
        return res
    return CheckResult(False, res.witness, res.names, "ae != (ae)+a")


# ---------- generalized right ample ----------
def _generalized_forms(F: EFountainStructure) -> Tuple[Optional[Tuple[int, ...]], bool, bool, bool]:
    """Witness of the E-indexed form, then whether the other three forms hold."""
    T, star, plus, Ea = F.table, F.star, F.plus, F.e_array
    m = F.size
    d = np.arange(m)
    witness = None
    cond2 = cond3 = variety = True
    for a in range(m):
        if witness is None:
            # [i, j] -> e_i a f_j
            eaf = T[T[Ea, a][:, None], Ea[None, :]]
            p = plus[T[a, star[eaf]]]
            lhs = star[T[Ea[:, None], p]]
            hit = first_hit(lhs != p)
            if hit is not None:
                witness = (a, int(Ea[hit[0]]), int(Ea[hit[1]]))

        # (a c*)+ per c
        q = plus[T[a, star]]
        if cond2:
            premise = T[T[Ea, a][:, None], star[None, :]] == d[None, :]
            concl = star[T[Ea[:, None], q[None, :]]] == q[None, :]
            cond2 = not bool((premise & ~concl).any())
        if cond3:
            premise = T[T[:, a][:, None], star[None, :]] == d[None, :]
            concl = star[T[d[:, None], q[None, :]]] == q[None, :]
            cond3 = not bool((premise & ~concl).any())
        if variety:
            # [b, c] -> b* a c*
            bac = T[T[star, a][:, None], star[None, :]]
            p = plus[T[a, star[bac]]]
            variety = bool((star[T[star[:, None], p]] == p).all())
    return witness, cond2, cond3, variety


def _generalized(F: EFountainStructure, side: str) -> CheckResult:
    witness, cond2, cond3, variety = _generalized_forms(F)
    primary = witness is None
    if not primary == cond2 == cond3 == variety:
        raise InternalMismatch(
            f"generalized {side} ample forms disagree: identity={primary} "
            f"restriction={cond2} product={cond3} variety={variety}"
        )
    if primary:
        return CheckResult(True)
    if side == "right":
        detail = "(e(a(eaf)*)+)* != (a(eaf)*)+"
    else:
        detail = "(((fae)+a)*e)+ != ((fae)+a)*"
    return CheckResult(False, witness, ("a", "e", "f"), detail)


def check_generalized_right_ample(F: EFountainStructure) -> CheckResult:
    require_congruence(F, "the generalized right ample condition")
    return _generalized(F, "right")


def check_generalized_left_ample(F: EFountainStructure) -> CheckResult:
    require_congruence(F, "the generalized left ample condition")
    return _generalized(F.dual(), "left")


# ---------- combined ----------
@dataclass(frozen=True)
class AmpleReport:
    right_ample: CheckResult
    left_ample: CheckResult
    generalized_right_ample: CheckResult
    generalized_left_ample: CheckResult

    def flags(self) -> dict:
        return {
            "rightAmple": self.right_ample.holds,
            "leftAmple": self.left_ample.holds,
            "generalizedRightAmple": self.generalized_right_ample.holds,
            "generalizedLeftAmple": self.generalized_left_ample.holds,
        }


def ample_report(F: EFountainStructure) -> AmpleReport:
    report = AmpleReport(
        right_ample=check_right_ample(F),
        left_ample=check_left_ample(F),
        generalized_right_ample=check_generalized_right_ample(F),
        generalized_left_ample=check_generalized_left_ample(F),
    )
    for side in ("right", "left"):
        std = getattr(report, f"{side}_ample")
        gen = getattr(report, f"generalized_{side}_ample")
        if std.holds and not gen.holds:
            raise TheoremViolation(f"{side} ample holds but the generalized form fails", gen.witness)
    return report


def check_ehresmann_equivalence(F: EFountainStructure) -> bool:
    if not is_E_ehresmann(F):
        raise NotEhresmann("structure is not E-Ehresmann (E is not a subsemilattice or congruence fails)")
    std = check_right_ample(F)
    gen = check_generalized_right_ample(F)
    if std.holds != gen.holds:
        raise TheoremViolation(
            f"E-Ehresmann structure with right ample={std.holds} but generalized={gen.holds}",
            std.witness or gen.witness,
        )
    return std.holds
