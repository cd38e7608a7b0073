# efountain/orders.py
from __future__ import annotations
from dataclasses import dataclass
import logging
from typing import Optional, Tuple, Union

import networkx as nx
import numpy as np

from efountain.errors import InternalMismatch
from efountain.fountain import EFountainStructure, check_subsemilattice, tri_left_matrix
from efountain.relation import BinaryRelation
from efountain.semigroup import green_preorder, is_R_trivial

log = logging.getLogger(__name__)


def tri_left(F: EFountainStructure) -> BinaryRelation:
    """a tri_l b iff a = be for some e in E; checked against a = b a*."""
    m = F.size
    d = np.arange(m)
    by_def = np.zeros((m, m), dtype=bool)
    # [b, i] -> b e_i, and that product is tri_l-below b
    by_def[F.table[:, F.e_array], d[:, None]] = True
    by_star = tri_left_matrix(F)
    if not np.array_equal(by_def, by_star):
        a, b = (int(x) for x in np.argwhere(by_def != by_star)[0])
        raise InternalMismatch(f"tri_l definitions disagree at ({a}, {b})", (a, b))
    return BinaryRelation(by_def)


def tri_right(F: EFountainStructure) -> BinaryRelation:
    """a tri_r b iff a = eb for some e in E; checked against a = a+ b."""
    m = F.size
    d = np.arange(m)
    by_def = np.zeros((m, m), dtype=bool)
    by_def[F.table[F.e_array, :], d[None, :]] = True
    by_plus = F.table[F.plus[:, None], d[None, :]] == d[:, None]
    if not np.array_equal(by_def, by_plus):
        a, b = (int(x) for x in np.argwhere(by_def != by_plus)[0])
        raise InternalMismatch(f"tri_r definitions disagree at ({a}, {b})", (a, b))
    return BinaryRelation(by_def)


def tri_below(a: int, F: EFountainStructure, tri: Optional[BinaryRelation] = None) -> Tuple[int, ...]:
    tri = tri if tri is not None else tri_left(F)
    below = tri.predecessors(a)
    stars = [int(F.star[c]) for c in below]
    # the member of the down-set with a given star is unique
    if len(set(stars)) != len(stars):
        raise InternalMismatch(f"two elements below {F.label(a)} share a star", (a,))
    return below


def leq_l(F: EFountainStructure, tri: Optional[BinaryRelation] = None) -> BinaryRelation:
    """a <=_l b iff a* <= b* and a = b a*."""
    T, star = F.table, F.star
    below = (T[star[:, None], star[None, :]] == star[:, None]) & (T[star[None, :], star[:, None]] == star[:, None])
    rel = BinaryRelation(below & tri_left_matrix(F))
    tri = tri if tri is not None else tri_left(F)
    if not rel.issubset(tri):
        raise InternalMismatch("<=_l is not inside tri_l", rel.first_outside(tri))
    if check_subsemilattice(F.e_set, F.semigroup).holds and rel != tri:
        raise InternalMismatch("E is a subsemilattice but <=_l != tri_l", tri.first_outside(rel))
    return rel


# ---------- diagnostics ----------
@dataclass(frozen=True)
class OrderDiagnostics:
    reflexive: bool
    antisymmetric: bool
    transitive: bool
    reflexive_witness: Optional[Tuple[int]] = None
    antisymmetric_witness: Optional[Tuple[int, int]] = None
    transitive_witness: Optional[Tuple[int, int, int]] = None

    @property
    def is_partial_order(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive

    @property
    def is_preorder(self) -> bool:
        return self.reflexive and self.transitive


def diagnose(rel: BinaryRelation) -> OrderDiagnostics:
    M = rel.matrix
    miss = np.flatnonzero(~np.diag(M))
    refl_w = (int(miss[0]),) if miss.size else None

    both = M & M.T
    np.fill_diagonal(both, False)
    hits = np.argwhere(both)
    anti_w = (int(hits[0][0]), int(hits[0][1])) if hits.size else None

    trans_w = None
    for a in range(rel.size):
        for b in np.flatnonzero(M[a]):
            gap = np.flatnonzero(M[b] & ~M[a])
            if gap.size:
                trans_w = (a, int(b), int(gap[0]))
                break
        if trans_w is not None:
            break

    return OrderDiagnostics(
        reflexive=refl_w is None,
        antisymmetric=anti_w is None,
        transitive=trans_w is None,
        reflexive_witness=refl_w,
        antisymmetric_witness=anti_w,
        transitive_witness=trans_w,
    )


# ---------- embedding into a partial order ----------
@dataclass(frozen=True)
class NoEmbedding:
    cycle: Tuple[int, ...]
    reason: str = "tri_l has a non-trivial cycle"

    def __bool__(self) -> bool:
        return False


def embedding_order(F: EFountainStructure, tri: Optional[BinaryRelation] = None) -> Union[BinaryRelation, NoEmbedding]:
    tri = tri if tri is not None else tri_left(F)
    if is_R_trivial(F.semigroup):
        le_r = green_preorder(F.semigroup, "R")
        # a = b a* puts a in bS
        if not tri.issubset(le_r):
            raise InternalMismatch("R-trivial but tri_l is not inside <=_R", tri.first_outside(le_r))
        log.info("embedding tri_l into <=_R")
        return le_r

    g = tri.to_digraph()
    g.remove_edges_from(list(nx.selfloop_edges(g)))
    closure = tri.transitive_closure()
    if closure.is_antisymmetric():
        if not nx.is_directed_acyclic_graph(g):
            raise InternalMismatch("closure is antisymmetric but tri_l has a cycle")
        log.info("embedding tri_l into its transitive closure")
        return closure
    edges = nx.find_cycle(g)
    cycle = tuple(int(u) for u, _ in edges) + (int(edges[0][0]),)
    log.info("tri_l is not contained in a partial order: cycle %s", cycle)
    return NoEmbedding(cycle)


def is_principally_finite(rel: BinaryRelation) -> bool:
    return rel.is_principally_finite()
