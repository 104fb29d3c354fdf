"""Simple undirected graphs stored as dense bitset adjacency rows."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graph input or unmet structural preconditions."""


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph on vertices ``0..n-1``.

    ``rows[u]`` is an int bitmask whose bit ``v`` is set iff ``u ~ v``.
    Equality is labeled equality, not isomorphism.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        for u, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {u} references a vertex >= n")
            if (r >> u) & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in _bits(r):
                if not (self.rows[v] >> u) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class StructuralProfile:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    is_connected: bool
    regular_degree: Optional[int]
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]]

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def cone(h: Graph) -> Graph:
    """Join a new vertex, labeled ``h.n``, to every vertex of ``h``."""
    n = h.n
    rows = tuple(r | (1 << n) for r in h.rows) + ((1 << n) - 1,)
    return Graph(n + 1, rows)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced on ``keep``, relabeled in increasing vertex order."""
    kept = sorted(set(keep))
    if not kept:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if kept[0] < 0 or kept[-1] >= g.n:
        raise GraphError(f"vertex set {kept} is outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        r = 0
        for w in _bits(g.rows[v]):
            if w in index:
                r |= 1 << index[w]
        rows.append(r)
    return Graph(len(kept), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def component_mask(rows: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return component_mask(g.rows, 0, full) == full


def two_coloring(g: Graph) -> Optional[list[int]]:
    """BFS 2-coloring of every component, or ``None`` if an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in _bits(g.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def profile(g: Graph) -> StructuralProfile:
    degs = tuple(g.degrees())
    dmax, dmin = max(degs), min(degs)
    coloring = two_coloring(g)
    bipartition = None
    if coloring is not None:
        a = frozenset(v for v in range(g.n) if coloring[v] == 0)
        b = frozenset(range(g.n)) - a
        bipartition = (a, b) if len(a) >= len(b) else (b, a)
    return StructuralProfile(
        degrees=degs,
        max_degree=dmax,
        min_degree=dmin,
        is_connected=is_connected(g),
        regular_degree=dmax if dmax == dmin else None,
        bipartition=bipartition,
    )


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError(f"graph must be connected: {g!r}")
