# efountain/corpus.py
from __future__ import annotations
from dataclasses import dataclass, field
from itertools import combinations, product
import logging
from typing import Dict, Iterator, List, Tuple

import numpy as np

from efountain.catalan import generate_catalan
from efountain.config import load_settings
from efountain.errors import DegreeTooLarge, NotEFountain, NotReduced, OrderTooLarge
from efountain.fountain import analyze_reduced_e_fountain
from efountain.semigroup import FiniteSemigroup, from_cayley_table, idempotents

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    name: str
    semigroup: FiniteSemigroup
    e_set: Tuple[int, ...]
    expected: Dict[str, bool] = field(default_factory=dict)


# ---------- reference structures ----------
def rectangular_band(n: int) -> CorpusEntry:
    """n x n band (i1, j1)(i2, j2) = (i1, j2) with the diagonal as E."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    index = {c: k for k, c in enumerate(cells)}
    table = [[index[(a[0], b[1])] for b in cells] for a in cells]
    S = from_cayley_table(table, [f"({i},{j})" for i, j in cells], f"rectangular_band_{n}")
    E = tuple(index[(i, i)] for i in range(1, n + 1))
    trivial = n < 2
    return CorpusEntry(S.name, S, E, {
        "reducedEFountain": True,
        "congruence": True,
        "generalizedRightAmple": True,
        "generalizedLeftAmple": True,
        "rightAmple": trivial,
        "leftAmple": trivial,
        "triLeftSymmetric": True,
        "embeddingOrder": trivial,
        "homomorphism": True,
        "phiInjective": trivial,
        "isomorphism": trivial,
    })


def _compose_partial(f: Tuple[int, ...], g: Tuple[int, ...]) -> Tuple[int, ...]:
    # 0 marks an undefined point; apply g first
    return tuple(0 if x == 0 else f[x - 1] for x in g)


def _partial_injections(n: int) -> List[Tuple[int, ...]]:
    out = []
    for images in product(range(n + 1), repeat=n):
        defined = [x for x in images if x]
        if len(set(defined)) == len(defined):
            out.append(images)
    return out


def symmetric_inverse_monoid(n: int) -> CorpusEntry:
    limit = load_settings().max_inverse_degree
    if n > limit:
        raise DegreeTooLarge(f"symmetric inverse monoid of degree {n} exceeds the limit {limit}", (n,))
    maps = _partial_injections(n)
    index = {f: k for k, f in enumerate(maps)}
    table = [[index[_compose_partial(f, g)] for g in maps] for f in maps]
    labels = ["[" + ",".join(str(x) if x else "-" for x in f) + "]" for f in maps]
    S = from_cayley_table(table, labels, f"I{n}")
    return CorpusEntry(S.name, S, idempotents(S), {
        "reducedEFountain": True,
        "congruence": True,
        "subsemilattice": True,
        "eEhresmann": True,
        "rightAmple": True,
        "leftAmple": True,
        "generalizedRightAmple": True,
        "generalizedLeftAmple": True,
        "homomorphism": True,
        "isomorphism": True,
        "triEqualsLeqL": True,
    })


def catalan_entry(degree: int) -> CorpusEntry:
    M = generate_catalan(degree)
    S = M.semigroup
    return CorpusEntry(S.name, S, idempotents(S), {
        "reducedEFountain": True,
        "congruence": True,
        "jTrivial": True,
        "generalizedRightAmple": True,
        "generalizedLeftAmple": True,
        "rightAmple": degree < 3,
        "subband": degree < 3,
        "homomorphism": True,
        "isomorphism": True,
    })


def chain_semilattice(n: int) -> CorpusEntry:
    """{0 < 1 < ... < n-1} under min."""
    table = np.minimum.outer(np.arange(n), np.arange(n))
    S = from_cayley_table(table, name=f"chain_{n}")
    return CorpusEntry(S.name, S, tuple(range(n)), {
        "reducedEFountain": True,
        "congruence": True,
        "subsemilattice": True,
        "eEhresmann": True,
        "rightAmple": True,
        "generalizedRightAmple": True,
        "homomorphism": True,
        "isomorphism": True,
    })


def cyclic_group(n: int) -> CorpusEntry:
    table = np.add.outer(np.arange(n), np.arange(n)) % n
    S = from_cayley_table(table, name=f"Z{n}")
    return CorpusEntry(S.name, S, (0,), {
        "reducedEFountain": True,
        "congruence": True,
        "eEhresmann": True,
        "rightAmple": True,
        "generalizedRightAmple": True,
        "homomorphism": True,
        "isomorphism": True,
    })


def left_zero_band(n: int) -> CorpusEntry:
    """xy = x with every element in E; not reduced once n >= 2."""
    table = np.repeat(np.arange(n)[:, None], n, axis=1)
    S = from_cayley_table(table, name=f"left_zero_{n}")
    return CorpusEntry(S.name, S, tuple(range(n)), {"reducedEFountain": n < 2})


def reference_entries() -> List[CorpusEntry]:
    return [
        rectangular_band(1),
        rectangular_band(2),
        rectangular_band(3),
        symmetric_inverse_monoid(1),
        symmetric_inverse_monoid(2),
        symmetric_inverse_monoid(3),
        catalan_entry(3),
        catalan_entry(4),
        chain_semilattice(3),
        cyclic_group(2),
        cyclic_group(3),
        left_zero_band(2),
    ]


# ---------- enumeration ----------
def _triple_ok(t: List[List[int]], x: int, y: int, z: int) -> bool:
    xy, yz = t[x][y], t[y][z]
    if xy < 0 or yz < 0:
        return True
    left, right = t[xy][z], t[x][yz]
    return left < 0 or right < 0 or left == right


def _consistent(t: List[List[int]], a: int, b: int, k: int) -> bool:
    # every triple in which the new cell (a, b) is one of the four products
    for z in range(k):
        if not _triple_ok(t, a, b, z):
            return False
    for x in range(k):
        if not _triple_ok(t, x, a, b):
            return False
    for x in range(k):
        for y in range(k):
            if t[x][y] == a and not _triple_ok(t, x, y, b):
                return False
            if t[x][y] == b and not _triple_ok(t, a, x, y):
                return False
    return True


def associative_tables(k: int) -> Iterator[List[List[int]]]:
    """Every associative table on {0..k-1}, without isomorphism reduction."""
    t = [[-1] * k for _ in range(k)]
    cells = [(a, b) for a in range(k) for b in range(k)]

    def fill(pos: int) -> Iterator[List[List[int]]]:
        if pos == len(cells):
            yield [row[:] for row in t]
            return
        a, b = cells[pos]
        for v in range(k):
            t[a][b] = v
            if _consistent(t, a, b, k):
                yield from fill(pos + 1)
        t[a][b] = -1

    yield from fill(0)


def enumerate_structures(max_order: int) -> Iterator[CorpusEntry]:
    limit = load_settings().max_enum_order
    if max_order > limit:
        raise OrderTooLarge(f"max order {max_order} exceeds the limit {limit}", (max_order,))
    for k in range(1, max_order + 1):
        n_tables = 0
        for table in associative_tables(k):
            S = from_cayley_table(table, name=f"o{k}t{n_tables}")
            n_tables += 1
            E_all = idempotents(S)
            for r in range(1, len(E_all) + 1):
                for E in combinations(E_all, r):
                    try:
                        F = analyze_reduced_e_fountain(S, E)
                    except (NotEFountain, NotReduced):
                        continue
                    if not F.congruence.holds:
                        continue
                    name = f"{S.name}E" + "-".join(str(e) for e in E)
                    yield CorpusEntry(name, S, tuple(E))
        log.debug("order %d: %d associative tables", k, n_tables)
