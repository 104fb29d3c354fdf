"""Isomorphism-free generation of connected graphs and exact independence numbers.

Generation is by canonical augmentation. A connected graph on ``k+1``
vertices is produced from a connected parent on ``k`` vertices by adding a
vertex with a nonempty neighbourhood, and is kept only if the new vertex is
equivalent, under an automorphism of the child, to the child's canonical
deletion vertex. The canonical deletion vertex is chosen among non-cut
vertices, so every parent is itself connected. Isomorphic children of the
same parent are merged by certificate; children of different parents are
never isomorphic.

Canonical forms come from individualization-refinement: colour refinement
to an equitable ordered partition, then branching over the first
non-singleton cell, keeping the lexicographically largest adjacency
certificate among the leaves. Branches on twin vertices are skipped, since
swapping twins is an automorphism.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .graph import Graph, GraphError, _bits, component_mask

MAX_ENUM_ORDER = 10

Cells = list[list[int]]


def _refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement; sub-cells are ordered by their
    neighbour-count signatures, so the result is isomorphism invariant."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for k in keys:
                out.append([v for v in cell if sig[v] == k])
        cells = out
        if not changed:
            return cells


def _certificate(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    cert = []
    for v in order:
        r = 0
        for w in _bits(rows[v]):
            r |= 1 << pos[w]
        cert.append(r)
    return tuple(cert)


def _twins(rows: Sequence[int], u: int, w: int) -> bool:
    return (rows[u] & ~(1 << w)) == (rows[w] & ~(1 << u))


def _search(rows: Sequence[int], cells: Cells, best: list) -> None:
    cells = _refine(rows, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        cert = _certificate(rows, [c[0] for c in cells])
        if best[0] is None or cert > best[0]:
            best[0] = cert
        return
    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        if any(_twins(rows, u, v) for u in tried):
            continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        _search(rows, cells[:target] + [[v], rest] + cells[target + 1:], best)


def canonical_certificate(
    rows: Sequence[int], n: int, individualize: Optional[int] = None
) -> tuple[int, ...]:
    """Certificate equal for two graphs iff they are isomorphic (by a map
    sending one individualized vertex to the other, when given)."""
    if individualize is None:
        cells: Cells = [list(range(n))]
    else:
        rest = [v for v in range(n) if v != individualize]
        cells = [[individualize], rest] if rest else [[individualize]]
    best: list = [None]
    _search(rows, cells, best)
    return best[0]


def canonical_form(g: Graph) -> tuple[int, ...]:
    return canonical_certificate(g.rows, g.n)


def _non_cut_vertices(rows: Sequence[int], n: int) -> list[int]:
    full = (1 << n) - 1
    out = []
    for v in range(n):
        allowed = full & ~(1 << v)
        if allowed == 0:
            out.append(v)
            continue
        start = (allowed & -allowed).bit_length() - 1
        if component_mask(rows, start, allowed) == allowed:
            out.append(v)
    return out


def _accept(rows: list[int], n: int, v: int) -> Optional[tuple[int, ...]]:
    """Return a certificate of ``child`` individualized at ``v`` when ``v`` is
    the canonical deletion vertex up to automorphism, else ``None``."""
    non_cut = _non_cut_vertices(rows, n)
    colour = {}
    for i, cell in enumerate(_refine(rows, [list(range(n))])):
        for u in cell:
            colour[u] = i
    top = max(colour[u] for u in non_cut)
    if colour[v] != top:
        return None
    candidates = [u for u in non_cut if colour[u] == top]
    mine = canonical_certificate(rows, n, v)
    for u in candidates:
        if u != v and canonical_certificate(rows, n, u) > mine:
            return None
    return mine


def _children(parent: Graph) -> Iterator[Graph]:
    k = parent.n
    seen: set[tuple[int, ...]] = set()
    for s in range(1, 1 << k):
        rows = [r | (((s >> u) & 1) << k) for u, r in enumerate(parent.rows)]
        rows.append(s)
        cert = _accept(rows, k + 1, k)
        if cert is None or cert in seen:
            continue
        seen.add(cert)
        yield Graph(k + 1, tuple(rows))


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    return tuple(child for parent in _level(n - 1) for child in _children(parent))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on ``n``
    vertices, in a fixed order."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    yield from _level(n)


def independence_number(g: Graph) -> int:
    """Exact α by branch and bound on bitsets.

    Branches on a vertex of maximum degree within the candidate set; prunes
    with a greedy clique cover of the candidates, whose size bounds the
    independent vertices still obtainable.
    """
    rows = g.rows
    best = 0

    def clique_cover(cand: int) -> int:
        count = 0
        while cand:
            clique = cand & -cand
            common = rows[clique.bit_length() - 1] & cand
            cand ^= clique
            while common:
                w = common & -common
                clique |= w
                cand ^= w
                common &= rows[w.bit_length() - 1] & ~w
            count += 1
        return count

    def branch(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + clique_cover(cand) <= best:
            return
        pick, pick_deg = -1, -1
        for u in _bits(cand):
            d = (rows[u] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = u, d
        if pick_deg == 0:
            best = max(best, size + cand.bit_count())
            return
        branch(cand & ~(1 << pick) & ~rows[pick], size + 1)
        branch(cand & ~(1 << pick), size)

    branch((1 << g.n) - 1, 0)
    return best
