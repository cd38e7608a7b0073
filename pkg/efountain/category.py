# efountain/category.py
"""The category C(S) of a reduced E-Fountain semigroup under the congruence condition.

Objects are the elements of E and morphisms are the elements of S, both by
their index in S. C(a) runs from a* to a+, and C(b)C(a) = C(ba) when b* = a+.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
import hashlib
import logging
from typing import Dict, Optional, Tuple

import numpy as np

from efountain.errors import AxiomFailure
from efountain.fountain import CheckResult, EFountainStructure, first_hit, require_congruence

log = logging.getLogger(__name__)

UNDEFINED = -1


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    objects: Tuple[int, ...]
    dom: np.ndarray
    cod: np.ndarray
    comp: np.ndarray  # comp[m2, m1] = m2 m1, or UNDEFINED
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("dom", "cod", "comp"):
            arr = np.array(getattr(self, name), dtype=np.int64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def n_morphisms(self) -> int:
        return int(self.dom.shape[0])

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def compose(self, m2: int, m1: int) -> Optional[int]:
        c = int(self.comp[m2, m1])
        return None if c == UNDEFINED else c

    @cached_property
    def identities(self) -> Dict[int, int]:
        return identity_morphisms(self)

    @cached_property
    def fingerprint(self) -> str:
        h = hashlib.sha1(self.dom.tobytes())
        h.update(self.cod.tobytes())
        h.update(self.comp.tobytes())
        return h.hexdigest()


def build_category(F: EFountainStructure) -> FiniteCategory:
    require_congruence(F, "the category C(S)")
    T, star, plus = F.table, F.star, F.plus
    comp = np.where(star[:, None] == plus[None, :], T, UNDEFINED)
    C = FiniteCategory(F.e_set, star, plus, comp, F.semigroup.labels)
    res = category_axioms(C)
    if not res.holds:
        raise AxiomFailure(f"category axiom fails: {res.detail}", res.witness)
    log.info("category with %d objects and %d morphisms", C.n_objects, C.n_morphisms)
    return C


def category_axioms(C: FiniteCategory) -> CheckResult:
    dom, cod, comp = C.dom, C.cod, C.comp
    defined = comp != UNDEFINED

    hit = first_hit(defined != (dom[:, None] == cod[None, :]))
    if hit is not None:
        return CheckResult(False, hit, ("m2", "m1"), "composability does not match dom/cod")

    safe = np.where(defined, comp, 0)
    hit = first_hit(defined & ((dom[safe] != dom[None, :]) | (cod[safe] != cod[:, None])))
    if hit is not None:
        return CheckResult(False, hit, ("m2", "m1"), "composite has the wrong dom or cod")

    for e in C.objects:
        if dom[e] != e or cod[e] != e:
            return CheckResult(False, (e,), ("e",), "C(e) is not an endomorphism of e")
        into = np.flatnonzero(cod == e)
        out = np.flatnonzero(dom == e)
        bad = into[comp[e, into] != into]
        if bad.size:
            return CheckResult(False, (e, int(bad[0])), ("e", "m"), "C(e) is not a left identity")
        bad = out[comp[out, e] != out]
        if bad.size:
            return CheckResult(False, (int(bad[0]), e), ("m", "e"), "C(e) is not a right identity")

    for m3 in range(C.n_morphisms):
        row = comp[m3]
        chain = (row[:, None] != UNDEFINED) & defined  # [m2, m1]
        left = comp[np.where(row == UNDEFINED, 0, row)[:, None], np.arange(C.n_morphisms)[None, :]]
        right = comp[m3, safe]
        hit = first_hit(chain & (left != right))
        if hit is not None:
            return CheckResult(False, (m3,) + hit, ("m3", "m2", "m1"), "composition is not associative")
    return CheckResult(True)


def hom_set(C: FiniteCategory, x: int, y: int) -> Tuple[int, ...]:
    """Morphisms from object x to object y."""
    return tuple(int(m) for m in np.flatnonzero((C.dom == x) & (C.cod == y)))


def is_thin(C: FiniteCategory) -> bool:
    pairs = set()
    for m in range(C.n_morphisms):
        key = (int(C.dom[m]), int(C.cod[m]))
        if key in pairs:
            return False
        pairs.add(key)
    return True


def identity_morphisms(C: FiniteCategory) -> Dict[int, int]:
    return {e: e for e in C.objects}


def dump_category(C: FiniteCategory) -> str:
    lines = ["objects: " + " ".join(str(e) for e in C.objects)]
    lines += [f"{m}: {int(C.dom[m])} -> {int(C.cod[m])}" for m in range(C.n_morphisms)]
    return "\n".join(lines) + "\n"
