"""Kernighan-Lin bisection, recursive k-way partitioning and baselines.

All weights are exact integers, so gains, prefix sums and cuts are
compared without tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError, SizeLimitError
from .graph import InteractionGraph, cut_weight
from .partitioning import Partitioning

DEFAULT_RESTARTS = 20
BRUTE_FORCE_MAX_VERTICES = 16


@dataclass
class KLPass:
    """Record of one Kernighan-Lin pass, in the caller's vertex labels.

    ``d_values`` are the external-minus-internal costs at the start of the
    pass. ``gains[i]`` is the gain of swapping ``pairs[i]`` at the moment it
    was selected, and ``prefix[t-1]`` the cumulative gain of the first
    ``t`` swaps. ``best_t`` swaps were committed iff ``best_gain > 0``.
    """

    d_values: dict[int, int]
    gains: list[int] = field(default_factory=list)
    pairs: list[tuple[int, int]] = field(default_factory=list)
    prefix: list[int] = field(default_factory=list)
    best_t: int = 0
    best_gain: int = 0
    cut_before: int = 0
    cut_after: int = 0

    @property
    def committed(self) -> bool:
        return self.best_gain > 0


def _check_rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def d_values(w: np.ndarray, in_a: np.ndarray) -> np.ndarray:
    """External minus internal cost for every vertex of a bisection."""
    same = in_a[:, None] == in_a[None, :]
    return np.where(same, -w, w).sum(axis=1)


def bisection_cut(w: np.ndarray, in_a: np.ndarray) -> int:
    return int(w[np.ix_(in_a, ~in_a)].sum())


def kl_pass(w: np.ndarray, in_a: np.ndarray) -> tuple[np.ndarray, KLPass]:
    """Run one pass on a bisection given as a boolean mask over ``w``'s rows.

    Returns the (possibly) updated mask and the pass record, with vertices
    labelled by row index. Ties pick the smallest ``(a, b)`` pair and the
    smallest prefix length.
    """
    d = d_values(w, in_a)
    rec = KLPass(d_values={i: int(v) for i, v in enumerate(d)},
                 cut_before=bisection_cut(w, in_a))
    free_a = np.flatnonzero(in_a)
    free_b = np.flatnonzero(~in_a)
    for _ in range(min(len(free_a), len(free_b))):
        gain = d[free_a][:, None] + d[free_b][None, :] - 2 * w[np.ix_(free_a, free_b)]
        i, j = np.unravel_index(int(np.argmax(gain)), gain.shape)
        a, b = int(free_a[i]), int(free_b[j])
        rec.gains.append(int(gain[i, j]))
        rec.pairs.append((a, b))
        free_a = np.delete(free_a, i)
        free_b = np.delete(free_b, j)
        d[free_a] += 2 * w[free_a, a] - 2 * w[free_a, b]
        d[free_b] += 2 * w[free_b, b] - 2 * w[free_b, a]

    rec.prefix = np.cumsum(rec.gains).astype(int).tolist()
    t = int(np.argmax(rec.prefix))
    rec.best_t, rec.best_gain = t + 1, rec.prefix[t]
    out = in_a.copy()
    if rec.best_gain > 0:
        for a, b in rec.pairs[: rec.best_t]:
            out[a], out[b] = False, True
    else:
        rec.best_t = 0
    rec.cut_after = bisection_cut(w, out)
    return out, rec


def kernighan_lin(w: np.ndarray, in_a: np.ndarray) -> tuple[np.ndarray, list[KLPass]]:
    """Repeat passes until no prefix has positive gain.

    Each committed pass lowers the integer cut by at least one, so the loop
    runs at most ``cut + 1`` times.
    """
    w = np.asarray(w, dtype=np.int64)
    in_a = np.asarray(in_a, dtype=bool)
    passes = []
    limit = bisection_cut(w, in_a) + 1
    while True:
        in_a, rec = kl_pass(w, in_a)
        passes.append(rec)
        if not rec.committed:
            return in_a, passes
        if len(passes) > limit:  # pragma: no cover - impossible with integer weights
            raise RuntimeError("Kernighan-Lin failed to terminate")


def _initial_mask(vertices: np.ndarray, initial, rng: np.random.Generator | None) -> np.ndarray:
    m = len(vertices)
    size_a = (m + 1) // 2
    in_a = np.zeros(m, dtype=bool)
    if initial is None:
        order = rng.permutation(m)
        in_a[order[:size_a]] = True
        return in_a
    if isinstance(initial, Partitioning):
        if initial.k != 2:
            raise InvalidArgumentError("initial partitioning must have k = 2")
        part_a, part_b = initial.parts
    else:
        part_a, part_b = initial
    part_a, part_b = set(part_a), set(part_b)
    if len(part_a) < len(part_b):
        part_a, part_b = part_b, part_a
    if part_a | part_b != set(vertices.tolist()) or part_a & part_b:
        raise InvalidArgumentError("initial split must partition the vertex set")
    if len(part_a) != size_a:
        raise InvalidArgumentError(
            f"initial split sizes {len(part_a)}/{len(part_b)} are not balanced"
        )
    pos = {v: i for i, v in enumerate(vertices.tolist())}
    in_a[[pos[v] for v in part_a]] = True
    return in_a


def _bisect(graph: InteractionGraph, vertices: np.ndarray, restarts: int,
            rng: np.random.Generator, initial=None) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    w = graph.subgraph(vertices)
    best = None
    for r in range(restarts):
        start = _initial_mask(vertices, initial if r == 0 else None, rng)
        in_a, passes = kernighan_lin(w, start)
        cut = passes[-1].cut_after
        part_a = tuple(vertices[in_a].tolist())
        key = (cut, part_a)
        if best is None or key < best[0]:
            best = (key, part_a, tuple(vertices[~in_a].tolist()))
    (cut, _), part_a, part_b = best
    return part_a, part_b, cut


def _vertex_array(graph: InteractionGraph, vertices) -> np.ndarray:
    n = graph.num_vertices
    if vertices is None:
        return np.arange(n, dtype=np.int64)
    arr = np.array(sorted(set(int(v) for v in vertices)), dtype=np.int64)
    if len(arr) != len(list(vertices)):
        raise InvalidArgumentError("duplicate vertex in subset")
    if len(arr) and (arr[0] < 0 or arr[-1] >= n):
        raise InvalidArgumentError("vertex outside graph")
    return arr


def kl_bipartition(graph: InteractionGraph, vertices: Sequence[int] | None = None,
                   initial=None, seed: int | np.random.Generator | None = 0,
                   restarts: int = 1) -> Partitioning:
    """Kernighan-Lin bisection of ``vertices`` (default: all of them).

    The first part receives ``ceil(m/2)`` vertices. Without ``initial`` the
    starting split is a seeded random shuffle cut at the midpoint. With
    ``restarts > 1`` the best result is kept (lowest cut, then the
    lexicographically smallest first part); ``initial`` seeds only the
    first run.

    Parameters
    ----------
    graph : InteractionGraph
    vertices : sequence of int, optional
        Subset to bisect; edges leaving the subset are ignored.
    initial : Partitioning or pair of vertex collections, optional
    seed : int or numpy Generator
    restarts : int

    Returns
    -------
    Partitioning
        Two parts covering ``vertices``.
    """
    verts = _vertex_array(graph, vertices)
    if len(verts) < 2:
        raise InvalidArgumentError("bisection needs at least 2 vertices")
    if restarts < 1:
        raise InvalidArgumentError("restarts must be >= 1")
    part_a, part_b, _ = _bisect(graph, verts, restarts, _check_rng(seed), initial)
    return Partitioning((part_a, part_b))


def recursive_kway(graph: InteractionGraph, k: int, restarts: int = DEFAULT_RESTARTS,
                   seed: int | None = 0) -> Partitioning:
    """Split into ``k`` parts by recursive K-L bisection.

    Each level halves the current vertex set; ``ceil(k/2)`` parts are
    carved from the first half and ``floor(k/2)`` from the second. Parts
    are numbered depth-first, so for n=8, k=3 the sizes are (2, 2, 4).
    """
    n = graph.num_vertices
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
        raise InvalidArgumentError(f"k must be in [1, {n}], got {k!r}")
    if restarts < 1:
        raise InvalidArgumentError("restarts must be >= 1")
    rng = _check_rng(seed)
    parts: list[tuple[int, ...]] = []

    def split(verts: np.ndarray, kk: int):
        if kk == 1:
            parts.append(tuple(verts.tolist()))
            return
        part_a, part_b, _ = _bisect(graph, verts, restarts, rng)
        split(np.array(part_a, dtype=np.int64), (kk + 1) // 2)
        split(np.array(part_b, dtype=np.int64), kk // 2)

    split(np.arange(n, dtype=np.int64), k)
    return Partitioning(tuple(parts))


def balanced_sizes(n: int, k: int) -> list[int]:
    """Part sizes differing by at most one, larger parts first."""
    if not 1 <= k <= n:
        raise InvalidArgumentError(f"k must be in [1, {n}], got {k}")
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def random_partition(n: int, k: int, rng=None) -> Partitioning:
    """Uniform random balanced partition: shuffle, then chunk."""
    sizes = balanced_sizes(n, k)
    perm = _check_rng(rng).permutation(n)
    bounds = np.cumsum([0] + sizes)
    return Partitioning(tuple(tuple(perm[bounds[i]:bounds[i + 1]].tolist()) for i in range(k)))


def random_baseline(graph: InteractionGraph, k: int, reps: int, seed=0) -> float:
    """Mean cut over ``reps`` independent random balanced partitions."""
    if isinstance(reps, bool) or not isinstance(reps, int) or reps < 1:
        raise InvalidArgumentError(f"reps must be a positive integer, got {reps!r}")
    rng = _check_rng(seed)
    n = graph.num_vertices
    total = 0
    for _ in range(reps):
        total += cut_weight(graph, random_partition(n, k, rng))
    return total / reps


def expected_random_cut(graph: InteractionGraph, sizes: Sequence[int]) -> float:
    """Exact expectation of the cut of a uniform partition with ``sizes``.

    Every vertex pair lands in the same part with probability
    ``sum C(s, 2) / C(n, 2)``.
    """
    n = graph.num_vertices
    if sum(sizes) != n:
        raise InvalidArgumentError("sizes must sum to the vertex count")
    if n < 2:
        return 0.0
    pairs = math.comb(n, 2)
    apart = pairs - sum(math.comb(s, 2) for s in sizes)
    return graph.total_weight() * apart / pairs


def brute_force_optimum(graph: InteractionGraph,
                        size_profile: Sequence[int]) -> tuple[Partitioning, int]:
    """Exact minimum cut over all partitions with the given part sizes.

    Enumerates assignments vertex by vertex in lexicographic order, so the
    first optimum found is the lexicographically smallest assignment.
    Interchangeable (equal-size) parts are opened in order to skip mirror
    images. Limited to 16 vertices.
    """
    n = graph.num_vertices
    sizes = [int(s) for s in size_profile]
    if n > BRUTE_FORCE_MAX_VERTICES:
        raise SizeLimitError(f"brute force limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {n}")
    if sum(sizes) != n or any(s < 1 for s in sizes):
        raise InvalidArgumentError(f"size profile {sizes} does not partition {n} vertices")
    w = graph.matrix.tolist()
    k = len(sizes)
    fill = [0] * k
    assign = [-1] * n
    best_cut = [math.inf]
    best_assign: list[list[int]] = [[]]

    def rec(v: int, cut: int):
        if cut >= best_cut[0]:
            return
        if v == n:
            best_cut[0] = cut
            best_assign[0] = assign.copy()
            return
        wv = w[v]
        for p in range(k):
            if fill[p] == sizes[p]:
                continue
            # Equal-size parts are interchangeable: open them left to right.
            if fill[p] == 0 and p > 0 and sizes[p - 1] == sizes[p] and fill[p - 1] == 0:
                continue
            extra = 0
            for u in range(v):
                if assign[u] != p:
                    extra += wv[u]
            assign[v] = p
            fill[p] += 1
            rec(v + 1, cut + extra)
            fill[p] -= 1
            assign[v] = -1

    rec(0, 0)
    return Partitioning.from_assignment(best_assign[0], k), int(best_cut[0])
