# efountain/semigroup.py
"""Finite semigroups given by Cayley tables or by transformation generators.

Composition convention for transformations: fg = f o g, i.e. apply g first.
Elements are dense indices 0..m-1 and `table[a][b]` is the index of ab.
Transformations use 1-based images on [n].
"""
from __future__ import annotations
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
import hashlib
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from efountain.errors import (
    FountainError,
    IndexOutOfRange,
    MixedDegrees,
    NonAssociative,
    NotIdempotent,
)
from efountain.relation import BinaryRelation

log = logging.getLogger(__name__)


# ---------- Transformation ----------
@dataclass(frozen=True)
class Transformation:
    images: Tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        n = len(imgs)
        if n == 0:
            raise FountainError("transformation of degree 0")
        for i, x in enumerate(imgs, start=1):
            if not 1 <= x <= n:
                raise IndexOutOfRange(f"image f({i}) = {x} outside [1, {n}]", (i, x))
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree: int) -> "Transformation":
        return cls(tuple(range(1, degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Transformation") -> "Transformation":
        """self o other: apply `other` first."""
        if other.degree != self.degree:
            raise MixedDegrees(f"cannot compose degree {self.degree} with degree {other.degree}")
        return Transformation(tuple(self.images[x - 1] for x in other.images))

    def __mul__(self, other: "Transformation") -> "Transformation":
        return self.compose(other)

    def image(self) -> frozenset:
        return frozenset(self.images)

    def kernel(self) -> frozenset:
        """Blocks of the kernel partition, each a frozenset of points."""
        blocks: Dict[int, List[int]] = {}
        for i, x in enumerate(self.images, start=1):
            blocks.setdefault(x, []).append(i)
        return frozenset(frozenset(b) for b in blocks.values())

    def is_idempotent(self) -> bool:
        return self.compose(self) == self

    def label(self) -> str:
        return "[" + ",".join(str(x) for x in self.images) + "]"

    def __str__(self) -> str:
        return self.label()


# ---------- FiniteSemigroup ----------
@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    table: np.ndarray
    labels: Tuple[str, ...] = ()
    name: str = ""
    images: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        labels = tuple(self.labels) if self.labels else tuple(str(i) for i in range(t.shape[0]))
        object.__setattr__(self, "labels", labels)
        if self.images is not None:
            imgs = np.array(self.images, dtype=np.int64)
            imgs.setflags(write=False)
            object.__setattr__(self, "images", imgs)

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.size

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    @cached_property
    def fingerprint(self) -> str:
        return hashlib.sha1(self.table.tobytes()).hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.size == other.size and self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def identity_element(self) -> Optional[int]:
        d = np.arange(self.size)
        for u in range(self.size):
            if np.array_equal(self.table[u], d) and np.array_equal(self.table[:, u], d):
                return u
        return None

    def opposite(self) -> "FiniteSemigroup":
        """The same set with multiplication a.b := ba."""
        return FiniteSemigroup(self.table.T, self.labels, f"{self.name}^op" if self.name else "")

    def transformation(self, a: int) -> Transformation:
        if self.images is None:
            raise FountainError(f"{self.name or 'semigroup'} is not a transformation semigroup")
        return Transformation(tuple(int(x) + 1 for x in self.images[a]))

    def to_frame(self) -> pd.DataFrame:
        lab = list(self.labels)
        cells = [[lab[x] for x in row] for row in self.table]
        return pd.DataFrame(cells, index=lab, columns=lab)


def _validate_square(table: np.ndarray) -> np.ndarray:
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise FountainError(f"Cayley table must be square, got shape {t.shape}")
    if t.shape[0] == 0:
        raise FountainError("Cayley table is empty")
    t = t.astype(np.int64)
    m = t.shape[0]
    bad = np.argwhere((t < 0) | (t >= m))
    if bad.size:
        a, b = int(bad[0][0]), int(bad[0][1])
        raise IndexOutOfRange(f"table[{a}][{b}] = {int(t[a, b])} outside [0, {m})", (a, b))
    return t


def first_nonassociative_triple(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    t = np.asarray(table)
    for a in range(t.shape[0]):
        # [b, c] -> (ab)c and a(bc)
        left = t[t[a]]
        right = t[a][t]
        bad = np.argwhere(left != right)
        if bad.size:
            return a, int(bad[0][0]), int(bad[0][1])
    return None


def from_cayley_table(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                      name: str = "") -> FiniteSemigroup:
    t = _validate_square(np.asarray(table))
    if labels is not None and len(labels) != t.shape[0]:
        raise FountainError(f"{len(labels)} labels for {t.shape[0]} elements")
    triple = first_nonassociative_triple(t)
    if triple is not None:
        a, b, c = triple
        raise NonAssociative(
            f"not associative at ({a}, {b}, {c}): ({a}*{b})*{c} = {int(t[t[a, b], c])} "
            f"but {a}*({b}*{c}) = {int(t[a, t[b, c]])}",
            triple,
        )
    return FiniteSemigroup(t, tuple(labels) if labels else (), name)


# ---------- transformation semigroups ----------
def transformation_table(images: np.ndarray) -> np.ndarray:
    """Cayley table of the maps in `images` (rows of 0-based images), under f o g.

    The rows must be closed under composition.
    """
    m = images.shape[0]
    index = {tuple(row): k for k, row in enumerate(images.tolist())}
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        # row b holds (a o b)(i) = a(b(i))
        prods = images[a][images]
        try:
            table[a] = [index[tuple(row)] for row in prods.tolist()]
        except KeyError as exc:
            raise FountainError(f"maps are not closed under composition: {exc.args[0]} is missing") from None
    return table


def semigroup_of_transformations(maps: Sequence[Transformation], name: str = "") -> FiniteSemigroup:
    """Wrap a composition-closed list of maps; index order follows the list."""
    images = np.array([[x - 1 for x in f.images] for f in maps], dtype=np.int64)
    table = transformation_table(images)
    return FiniteSemigroup(table, tuple(f.label() for f in maps), name, images)


def from_transformations(generators: Sequence[Transformation], name: str = "") -> FiniteSemigroup:
    gens = list(generators)
    if not gens:
        raise FountainError("generator list is empty")
    degrees = {g.degree for g in gens}
    if len(degrees) > 1:
        raise MixedDegrees(f"generators have mixed degrees {sorted(degrees)}")

    # generators first, then BFS over right multiplication by generators
    elements: List[Transformation] = []
    seen: Dict[Tuple[int, ...], int] = {}
    for g in gens:
        if g.images not in seen:
            seen[g.images] = len(elements)
            elements.append(g)
    queue = deque(elements)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x.compose(g)
            if y.images not in seen:
                seen[y.images] = len(elements)
                elements.append(y)
                queue.append(y)
    log.debug("closure of %d generators has %d elements", len(gens), len(elements))
    # composition of maps is associative, so no table scan is needed
    return semigroup_of_transformations(elements, name)


# ---------- idempotents and Green's preorders ----------
def idempotents(S: FiniteSemigroup) -> Tuple[int, ...]:
    d = np.arange(S.size)
    return tuple(int(e) for e in np.flatnonzero(S.table[d, d] == d))


def is_idempotent(S: FiniteSemigroup, e: int) -> bool:
    return S.product(e, e) == e


def natural_leq(e: int, f: int, S: FiniteSemigroup) -> bool:
    for x in (e, f):
        if not is_idempotent(S, x):
            raise NotIdempotent(f"element {x} ({S.label(x)}) is not idempotent", (x,))
    return S.product(e, f) == e and S.product(f, e) == e


def natural_order_matrix(S: FiniteSemigroup, elements: Sequence[int]) -> np.ndarray:
    """[i, j] is True iff elements[i] <= elements[j] in the natural order."""
    E = np.asarray(elements, dtype=np.int64)
    t = S.table
    ef = t[E[:, None], E[None, :]]
    fe = t[E[None, :], E[:, None]]
    return (ef == E[:, None]) & (fe == E[:, None])


def _preorder_matrix(S: FiniteSemigroup, side: str) -> np.ndarray:
    m = S.size
    t = S.table
    d = np.arange(m)
    if side == "R":
        # a <= b iff a in bS, i.e. a = t[b, s]
        out = np.zeros((m, m), dtype=bool)
        out[t, d[:, None]] = True
    elif side == "L":
        out = np.zeros((m, m), dtype=bool)
        out[t, d[None, :]] = True
    elif side == "J":
        r = _preorder_matrix(S, "R").astype(np.int64)
        l = _preorder_matrix(S, "L").astype(np.int64)
        # a in cS1 and c in S1b
        return (r @ l) > 0
    else:
        raise ValueError(f"side must be R, L or J, got {side!r}")
    out[d, d] = True
    return out


def green_preorder(S: FiniteSemigroup, side: str) -> BinaryRelation:
    return BinaryRelation(_preorder_matrix(S, side.upper()))


def green_equiv(S: FiniteSemigroup, side: str) -> BinaryRelation:
    p = green_preorder(S, side)
    return p & p.transpose()


def is_J_trivial(S: FiniteSemigroup) -> bool:
    return green_equiv(S, "J").is_identity()


def is_R_trivial(S: FiniteSemigroup) -> bool:
    return green_equiv(S, "R").is_identity()


def is_L_trivial(S: FiniteSemigroup) -> bool:
    return green_equiv(S, "L").is_identity()
