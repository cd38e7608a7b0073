# efountain/relation.py
from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from efountain.errors import IndexOutOfRange


@dataclass(frozen=True, eq=False)
class BinaryRelation:
    """A relation on {0, ..., size-1} stored as a boolean matrix.

    `matrix[a, b]` is True iff (a, b) is in the relation.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {m.shape}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    # ---------- construction ----------
    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Tuple[int, int]]) -> "BinaryRelation":
        m = np.zeros((size, size), dtype=bool)
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size):
                raise IndexOutOfRange(f"pair ({a}, {b}) outside domain of size {size}", (a, b))
            m[a, b] = True
        return cls(m)

    @classmethod
    def identity(cls, size: int) -> "BinaryRelation":
        return cls(np.eye(size, dtype=bool))

    # ---------- basic views ----------
    @property
    def size(self) -> int:
        return int(self.matrix.shape[0])

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        a, b = pair
        return bool(self.matrix[a, b])

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryRelation):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and bool(np.array_equal(self.matrix, other.matrix))

    def __hash__(self) -> int:
        return hash((self.size, self.matrix.tobytes()))

    def pairs(self) -> List[Tuple[int, int]]:
        # argwhere walks the matrix in row-major order, so pairs come out sorted
        return [(int(a), int(b)) for a, b in np.argwhere(self.matrix)]

    def successors(self, a: int) -> Tuple[int, ...]:
        return tuple(int(b) for b in np.flatnonzero(self.matrix[a]))

    def predecessors(self, b: int) -> Tuple[int, ...]:
        return tuple(int(a) for a in np.flatnonzero(self.matrix[:, b]))

    # ---------- algebra of relations ----------
    def transpose(self) -> "BinaryRelation":
        return BinaryRelation(self.matrix.T)

    def __and__(self, other: "BinaryRelation") -> "BinaryRelation":
        return BinaryRelation(self.matrix & other.matrix)

    def compose(self, other: "BinaryRelation") -> "BinaryRelation":
        """(a, c) whenever (a, b) is in self and (b, c) in other for some b."""
        prod = self.matrix.astype(np.int64) @ other.matrix.astype(np.int64)
        return BinaryRelation(prod > 0)

    def issubset(self, other: "BinaryRelation") -> bool:
        return not bool((self.matrix & ~other.matrix).any())

    def first_outside(self, other: "BinaryRelation") -> Optional[Tuple[int, int]]:
        hits = np.argwhere(self.matrix & ~other.matrix)
        if hits.size == 0:
            return None
        return int(hits[0][0]), int(hits[0][1])

    # ---------- order-theoretic predicates ----------
    def is_reflexive(self) -> bool:
        return bool(np.diag(self.matrix).all())

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def is_antisymmetric(self) -> bool:
        off = self.matrix & self.matrix.T
        np.fill_diagonal(off, False)
        return not bool(off.any())

    def is_transitive(self) -> bool:
        return self.compose(self).issubset(self)

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.size, dtype=bool)))

    def is_principally_finite(self) -> bool:
        # every down-set of a finite relation is finite
        return True

    # ---------- graph view ----------
    def to_digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.size))
        g.add_edges_from(self.pairs())
        return g

    def transitive_closure(self) -> "BinaryRelation":
        """Smallest reflexive and transitive relation containing this one."""
        closed = nx.transitive_closure(self.to_digraph(), reflexive=True)
        return BinaryRelation.from_pairs(self.size, closed.edges())

    def linear_extension(self) -> List[int]:
        """Topological order of a relation whose closure is antisymmetric.

        Loops are ignored; a non-trivial cycle raises networkx.NetworkXUnfeasible.
        """
        g = self.to_digraph()
        g.remove_edges_from(list(nx.selfloop_edges(g)))
        return list(nx.lexicographical_topological_sort(g))

    # ---------- text ----------
    def dump(self) -> str:
        return "".join(f"{a} {b}\n" for a, b in self.pairs())
