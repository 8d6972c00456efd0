"""The ``Partitioning`` value type."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgumentError


@dataclass(frozen=True)
class Partitioning:
    """Disjoint, non-empty parts over a vertex set.

    ``parts[i]`` is the ascending tuple of vertices in part ``i``. The
    covered vertex set need not be ``0..n-1`` (bisections of a sub-problem
    cover a subset), but every graph query requires full coverage.
    """

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(sorted(int(v) for v in p)) for p in self.parts)
        if not parts:
            raise InvalidArgumentError("a partitioning needs at least one part")
        seen: set[int] = set()
        for i, p in enumerate(parts):
            if not p:
                raise InvalidArgumentError(f"part {i} is empty")
            for v in p:
                if v < 0:
                    raise InvalidArgumentError(f"negative vertex {v}")
                if v in seen:
                    raise InvalidArgumentError(f"vertex {v} assigned twice")
                seen.add(v)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_assignment(cls, assignment: Sequence[int] | np.ndarray, k: int | None = None) -> "Partitioning":
        """Build from a total map ``vertex -> part index`` over ``0..n-1``."""
        assignment = [int(a) for a in assignment]
        if k is None:
            k = max(assignment) + 1 if assignment else 0
        buckets: list[list[int]] = [[] for _ in range(k)]
        for v, a in enumerate(assignment):
            if not 0 <= a < k:
                raise InvalidArgumentError(f"vertex {v} assigned to part {a} outside [0, {k})")
            buckets[a].append(v)
        return cls(tuple(tuple(b) for b in buckets))

    @classmethod
    def single(cls, vertices: Iterable[int]) -> "Partitioning":
        return cls((tuple(vertices),))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for p in self.parts for v in p))

    @property
    def num_vertices(self) -> int:
        return sum(self.sizes)

    def covers(self, n: int) -> bool:
        return self.num_vertices == n and self.vertices == tuple(range(n))

    def assignment(self) -> np.ndarray:
        """Part index per vertex; requires coverage of ``0..n-1``."""
        n = self.num_vertices
        if not self.covers(n):
            raise InvalidArgumentError("assignment() needs parts covering 0..n-1")
        out = np.empty(n, dtype=np.int64)
        for i, p in enumerate(self.parts):
            out[list(p)] = i
        return out

    def part_of(self, v: int) -> int:
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        raise KeyError(v)

    def relabeled(self, order: Sequence[int]) -> "Partitioning":
        """Parts permuted so that new part ``i`` is old part ``order[i]``."""
        return Partitioning(tuple(self.parts[j] for j in order))

    def to_dict(self, cut: int | None = None) -> dict:
        d: dict = {"k": self.k, "parts": [list(p) for p in self.parts]}
        if cut is not None:
            d["cut"] = int(cut)
        return d
