"""Weighted qubit-interaction graph and cut queries."""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterator

import numpy as np

from .circuit import Circuit
from .errors import InvalidArgumentError
from .partitioning import Partitioning


class InteractionGraph:
    """Undirected integer-weighted graph with one vertex per qubit.

    Stored as a dense symmetric ``int64`` matrix with a zero diagonal; the
    matrix is read-only once built. ``weight(u, v)`` is the number of
    multi-qubit gates that touch both ``u`` and ``v``.
    """

    __slots__ = ("_w",)

    def __init__(self, weights: np.ndarray):
        w = np.array(weights, dtype=np.int64, copy=True)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise InvalidArgumentError("weight matrix must be square")
        if not np.array_equal(w, w.T):
            raise InvalidArgumentError("weight matrix must be symmetric")
        if np.any(np.diag(w) != 0):
            raise InvalidArgumentError("self-loops are not allowed")
        if np.any(w < 0):
            raise InvalidArgumentError("weights must be non-negative")
        w.setflags(write=False)
        self._w = w

    @classmethod
    def empty(cls, n: int) -> "InteractionGraph":
        return cls(np.zeros((n, n), dtype=np.int64))

    @classmethod
    def from_edges(cls, n: int, edges) -> "InteractionGraph":
        """Build from ``(u, v, w)`` triples; repeated pairs accumulate."""
        w = np.zeros((n, n), dtype=np.int64)
        for u, v, wt in edges:
            if u == v:
                raise InvalidArgumentError(f"self-loop on {u}")
            w[u, v] += wt
            w[v, u] += wt
        return cls(w)

    @property
    def num_vertices(self) -> int:
        return self._w.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._w

    def weight(self, u: int, v: int) -> int:
        return int(self._w[u, v])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Stored edges ``(u, v, w)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._w, 1))
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u, v, int(self._w[u, v])

    def total_weight(self) -> int:
        return int(np.triu(self._w, 1).sum())

    def subgraph(self, vertices) -> np.ndarray:
        idx = np.asarray(vertices, dtype=np.int64)
        return self._w[np.ix_(idx, idx)]

    def to_dict(self) -> dict:
        return {"n": self.num_vertices,
                "edges": [{"u": u, "v": v, "w": w} for u, v, w in self.edges()]}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def __eq__(self, other):
        if not isinstance(other, InteractionGraph):
            return NotImplemented
        return np.array_equal(self._w, other._w)

    def __repr__(self):
        return (f"InteractionGraph(n={self.num_vertices}, "
                f"edges={int(np.count_nonzero(np.triu(self._w, 1)))}, "
                f"total_weight={self.total_weight()})")


def build_graph(circuit: Circuit) -> InteractionGraph:
    """Accumulate +1 on every qubit pair touched by each multi-qubit gate.

    Two-qubit gates add one edge; three-qubit gates add all three pairwise
    edges; single-qubit gates add nothing.
    """
    n = circuit.num_qubits
    w = np.zeros((n, n), dtype=np.int64)
    for g in circuit.gates:
        for u, v in combinations(g.operands, 2):
            w[u, v] += 1
            w[v, u] += 1
    return InteractionGraph(w)


def total_weight(graph: InteractionGraph) -> int:
    return graph.total_weight()


def _check_cover(graph: InteractionGraph, partitioning: Partitioning):
    if not partitioning.covers(graph.num_vertices):
        raise InvalidArgumentError(
            f"partitioning covers {partitioning.num_vertices} vertices, "
            f"graph has {graph.num_vertices}"
        )


def internal_weight(graph: InteractionGraph, partitioning: Partitioning) -> int:
    """Sum of edge weights with both endpoints in the same part."""
    _check_cover(graph, partitioning)
    w = graph.matrix
    return sum(int(w[np.ix_(p, p)].sum()) // 2 for p in map(list, partitioning.parts))


def cut_weight(graph: InteractionGraph, partitioning: Partitioning) -> int:
    """Sum of edge weights whose endpoints lie in different parts.

    This is the teleportation count of the distributed circuit.
    """
    _check_cover(graph, partitioning)
    a = partitioning.assignment()
    crossing = a[:, None] != a[None, :]
    cut = int(graph.matrix[crossing].sum()) // 2
    if __debug__:
        assert cut == graph.total_weight() - internal_weight(graph, partitioning)
    return cut
