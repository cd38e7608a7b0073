# efountain/incidence.py
"""Incidence algebras of finite partial orders over a sympy coefficient domain.

An element is a function on the comparable pairs (a, b), a <= b, with
convolution (f * g)(a, b) = sum over a <= c <= b of f(a, c) g(c, b).
"""
from __future__ import annotations
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Tuple

from sympy.polys.domains import ZZ, Domain

from efountain.errors import BasisMismatch, NonInvertibleDiagonal, NotContained
from efountain.relation import BinaryRelation
from efountain.rings import invert

Pair = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class IncidenceAlgebraElement:
    order: BinaryRelation
    ring: Domain
    values: Mapping[Pair, Any]

    def __post_init__(self):
        clean: Dict[Pair, Any] = {}
        for (a, b), v in self.values.items():
            v = self.ring.convert(v)
            if self.ring.is_zero(v):
                continue
            if (a, b) not in self.order:
                raise NotContained(f"value at ({a}, {b}) but the pair is not comparable", (a, b))
            clean[(int(a), int(b))] = v
        object.__setattr__(self, "values", dict(sorted(clean.items())))

    # ---------- standard elements ----------
    @classmethod
    def delta(cls, order: BinaryRelation, ring: Domain = ZZ) -> "IncidenceAlgebraElement":
        return cls(order, ring, {(x, x): ring.one for x in range(order.size)})

    @classmethod
    def zeta(cls, order: BinaryRelation, ring: Domain = ZZ) -> "IncidenceAlgebraElement":
        return cls(order, ring, {p: ring.one for p in order.pairs()})

    @classmethod
    def indicator(cls, rel: BinaryRelation, order: BinaryRelation, ring: Domain = ZZ) -> "IncidenceAlgebraElement":
        """1 on the pairs of `rel`, which must lie inside `order`."""
        outside = rel.first_outside(order)
        if outside is not None:
            raise NotContained(f"pair {outside} of the relation is not in the order", outside)
        return cls(order, ring, {p: ring.one for p in rel.pairs()})

    # ---------- access ----------
    def __call__(self, a: int, b: int):
        return self.values.get((a, b), self.ring.zero)

    def support(self) -> List[Pair]:
        return list(self.values)

    # ---------- arithmetic ----------
    def _check(self, other: "IncidenceAlgebraElement") -> None:
        if other.order != self.order or other.ring != self.ring:
            raise BasisMismatch("incidence elements over different orders or rings")

    def __add__(self, other: "IncidenceAlgebraElement") -> "IncidenceAlgebraElement":
        self._check(other)
        out = dict(self.values)
        for p, v in other.values.items():
            out[p] = out.get(p, self.ring.zero) + v
        return IncidenceAlgebraElement(self.order, self.ring, out)

    def __neg__(self) -> "IncidenceAlgebraElement":
        return IncidenceAlgebraElement(self.order, self.ring, {p: -v for p, v in self.values.items()})

    def __sub__(self, other: "IncidenceAlgebraElement") -> "IncidenceAlgebraElement":
        return self + (-other)

    def __mul__(self, other: "IncidenceAlgebraElement") -> "IncidenceAlgebraElement":
        """Convolution."""
        self._check(other)
        rows: Dict[int, List[Tuple[int, Any]]] = defaultdict(list)
        for (c, b), v in other.values.items():
            rows[c].append((b, v))
        out: Dict[Pair, Any] = {}
        for (a, c), u in self.values.items():
            for b, v in rows.get(c, ()):
                out[(a, b)] = out.get((a, b), self.ring.zero) + u * v
        return IncidenceAlgebraElement(self.order, self.ring, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceAlgebraElement):
            return NotImplemented
        return self.order == other.order and self.ring == other.ring and self.values == other.values

    __hash__ = None

    def is_invertible(self) -> bool:
        return all(invert(self.ring, self(x, x)) is not None for x in range(self.order.size))


def mobius_inverse(f: IncidenceAlgebraElement) -> IncidenceAlgebraElement:
    """Two-sided inverse of f, by forward substitution along a linear extension."""
    ring, order = f.ring, f.order
    diag_inv = {}
    for x in range(order.size):
        inv = invert(ring, f(x, x))
        if inv is None:
            raise NonInvertibleDiagonal(f"f({x}, {x}) = {ring.to_sympy(f(x, x))} is not a unit", (x,))
        diag_inv[x] = inv

    # strictly-below column support of f
    column: Dict[int, List[Tuple[int, Any]]] = defaultdict(list)
    for (c, b), v in f.values.items():
        if c != b:
            column[b].append((c, v))

    topo = order.linear_extension()
    g: Dict[Pair, Any] = {}
    for a in range(order.size):
        row: Dict[int, Any] = {a: diag_inv[a]}
        for b in topo:
            if b == a or (a, b) not in order:
                continue
            acc = ring.zero
            for c, v in column.get(b, ()):
                w = row.get(c)
                if w is not None:
                    acc += w * v
            if not ring.is_zero(acc):
                row[b] = -acc * diag_inv[b]
        g.update({(a, b): v for b, v in row.items()})
    return IncidenceAlgebraElement(order, ring, g)
