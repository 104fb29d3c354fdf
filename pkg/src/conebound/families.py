"""Named graph families and the ``kind[:param]*`` family-spec grammar.

Labeling conventions:

* ``complete(n)``, ``empty(n)``: vertices ``0..n-1``.
* ``path(n)``: ``i ~ i+1``; ``cycle(n)``: additionally ``n-1 ~ 0``.
* ``star(k)`` and ``wheel(k)`` are cones over ``empty(k)`` and ``cycle(k)``,
  so the hub is the last vertex ``k``.
* ``completeBipartite(a, b)``: parts ``0..a-1`` and ``a..a+b-1``.
* ``hypercube(k)``: vertex ``i`` is the k-bit string of ``i``; adjacency is
  Hamming distance 1.
* ``kneser(m, t)``: vertices are the t-subsets of ``{1..m}`` in lexicographic
  order; adjacency is disjointness. ``odd(k)`` is ``kneser(2k-1, k-1)`` and
  ``petersen`` is ``odd(3)``.

A spec string may be prefixed by any number of ``cone:`` to apply the cone
operation, e.g. ``cone:kneser:5:2`` is the Petersen graph plus a hub.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, GraphError, cone, graph_from_edges

KINDS = {
    "complete": 1,
    "empty": 1,
    "path": 1,
    "cycle": 1,
    "star": 1,
    "wheel": 1,
    "completeBipartite": 2,
    "hypercube": 1,
    "kneser": 2,
    "odd": 1,
    "petersen": 0,
}

_ALIASES = {
    "K": "complete",
    "bipartite": "completeBipartite",
    "complete_bipartite": "completeBipartite",
    "cube": "hypercube",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    cones: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        if len(self.params) != KINDS[self.kind]:
            raise GraphError(
                f"{self.kind} takes {KINDS[self.kind]} parameter(s), got {len(self.params)}"
            )
        _check_range(self.kind, self.params)

    def order(self) -> int:
        """Vertex count of the family member, computed without building it."""
        p = self.params
        base = {
            "complete": lambda: p[0],
            "empty": lambda: p[0],
            "path": lambda: p[0],
            "cycle": lambda: p[0],
            "star": lambda: p[0] + 1,
            "wheel": lambda: p[0] + 1,
            "completeBipartite": lambda: p[0] + p[1],
            "hypercube": lambda: 1 << p[0],
            "kneser": lambda: comb(p[0], p[1]),
            "odd": lambda: comb(2 * p[0] - 1, p[0] - 1),
            "petersen": lambda: 10,
        }[self.kind]()
        return base + self.cones

    def __str__(self) -> str:
        return ":".join(["cone"] * self.cones + [self.kind] + [str(x) for x in self.params])


def _check_range(kind: str, p: tuple[int, ...]) -> None:
    ok = {
        "complete": lambda: p[0] >= 1,
        "empty": lambda: p[0] >= 1,
        "path": lambda: p[0] >= 1,
        "cycle": lambda: p[0] >= 3,
        "star": lambda: p[0] >= 1,
        "wheel": lambda: p[0] >= 3,
        "completeBipartite": lambda: p[0] >= 1 and p[1] >= 1,
        "hypercube": lambda: p[0] >= 1,
        "kneser": lambda: p[0] > p[1] >= 1,
        "odd": lambda: p[0] >= 2,
        "petersen": lambda: True,
    }[kind]()
    if not ok:
        raise GraphError(f"parameters {p} out of range for {kind}")


def parse_family_spec(text: str) -> FamilySpec:
    tokens = [t for t in text.strip().split(":") if t]
    cones = 0
    while tokens and tokens[0] == "cone":
        cones += 1
        tokens.pop(0)
    if not tokens:
        raise GraphError(f"family spec {text!r} names no base kind")
    kind = _ALIASES.get(tokens[0], tokens[0])
    try:
        params = tuple(int(t) for t in tokens[1:])
    except ValueError:
        raise GraphError(f"non-integer parameter in family spec {text!r}") from None
    return FamilySpec(kind, params, cones)


def complete(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return graph_from_edges(n, [])


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    return cone(empty(k))


def wheel(k: int) -> Graph:
    return cone(cycle(k))


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(k: int) -> Graph:
    n = 1 << k
    return graph_from_edges(n, [(i, i ^ (1 << b)) for i in range(n) for b in range(k) if i < i ^ (1 << b)])


def kneser(m: int, t: int) -> Graph:
    verts = [frozenset(c) for c in combinations(range(1, m + 1), t)]
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if not verts[i] & verts[j]
    ]
    return graph_from_edges(len(verts), edges)


def odd_graph(k: int) -> Graph:
    return kneser(2 * k - 1, k - 1)


def petersen() -> Graph:
    return kneser(5, 2)


def circulant(n: int, jumps: tuple[int, ...]) -> Graph:
    """Circulant graph with ``i ~ i ± s (mod n)`` for each jump ``s``."""
    edges = set()
    for i in range(n):
        for s in jumps:
            j = (i + s) % n
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return graph_from_edges(n, sorted(edges))


_BUILDERS = {
    "complete": complete,
    "empty": empty,
    "path": path,
    "cycle": cycle,
    "star": star,
    "wheel": wheel,
    "completeBipartite": complete_bipartite,
    "hypercube": hypercube,
    "kneser": kneser,
    "odd": odd_graph,
    "petersen": petersen,
}


def make_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    g = _BUILDERS[spec.kind](*spec.params)
    for _ in range(spec.cones):
        g = cone(g)
    return g
