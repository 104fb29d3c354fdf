"""Quotient matrices of vertex partitions and interlacing checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import tolerance
from .graph import Graph, GraphError
from .spectra import Spectrum, eigenvalues_sym


@dataclass(frozen=True)
class Partition:
    """Ordered list of nonempty, pairwise disjoint vertex cells."""

    cells: tuple[frozenset[int], ...]

    def __init__(self, cells: Iterable[Iterable[int]]):
        frozen = tuple(frozenset(c) for c in cells)
        if not frozen:
            raise GraphError("partition has no cells")
        seen: set[int] = set()
        for c in frozen:
            if not c:
                raise GraphError("partition has an empty cell")
            if seen & c:
                raise GraphError(f"partition cells overlap on {sorted(seen & c)}")
            seen |= c
        object.__setattr__(self, "cells", frozen)

    def __len__(self) -> int:
        return len(self.cells)

    def check(self, g: Graph) -> None:
        covered = set().union(*self.cells)
        if covered != set(range(g.n)):
            raise GraphError(f"partition does not cover exactly the vertices 0..{g.n - 1}")


def _cell_masks(p: Partition) -> list[int]:
    return [sum(1 << v for v in c) for c in p.cells]


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[float, ...], ...]
    cell_sizes: tuple[int, ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def eigenvalues(self) -> list[float]:
        """Eigenvalues, descending, via the similar symmetric matrix
        ``D^{1/2} B D^{-1/2}`` with ``D`` the diagonal of cell sizes."""
        b = self.as_array()
        r = np.sqrt(np.array(self.cell_sizes, dtype=float))
        sym = r[:, None] * b / r[None, :]
        return eigenvalues_sym(0.5 * (sym + sym.T))


def quotient_matrix(g: Graph, p: Partition) -> QuotientMatrix:
    """``b[i][j]`` is the mean number of neighbours in cell j of a vertex in cell i."""
    p.check(g)
    masks = _cell_masks(p)
    entries = tuple(
        tuple(sum((g.rows[u] & mj).bit_count() for u in ci) / len(ci) for mj in masks)
        for ci in p.cells
    )
    return QuotientMatrix(entries, tuple(len(c) for c in p.cells))


def is_equitable(g: Graph, p: Partition) -> bool:
    p.check(g)
    masks = _cell_masks(p)
    for ci in p.cells:
        for mj in masks:
            if len({(g.rows[u] & mj).bit_count() for u in ci}) > 1:
                return False
    return True


def two_cell_quotient_roots(mean_degree: float, delta_max: float) -> tuple[float, float]:
    """Closed-form eigenvalues of ``[[0, Δ], [1, d]]`` (a vertex and its neighbourhood)."""
    disc = math.sqrt(mean_degree * mean_degree + 4.0 * delta_max)
    return (mean_degree + disc) / 2.0, (mean_degree - disc) / 2.0


def _values(x: Spectrum | Sequence[float]) -> list[float]:
    return list(x.values) if isinstance(x, Spectrum) else [float(v) for v in x]


def _check_sorted(xs: list[float], name: str, tol: float) -> None:
    if any(a < b - tol for a, b in zip(xs, xs[1:])):
        raise ValueError(f"{name} eigenvalues are not sorted descending")


def interlaces(
    outer: Spectrum | Sequence[float],
    inner: Sequence[float],
    tol: Optional[float] = None,
) -> bool:
    """True iff ``outer[i] >= inner[i] >= outer[n-m+i]`` for every i, within ``tol``.

    Comparisons landing exactly on the tolerance boundary count as interlacing.
    """
    tol = tolerance.compare_tol(tol)
    lam = _values(outer)
    mu = [float(v) for v in inner]
    n, m = len(lam), len(mu)
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    _check_sorted(lam, "outer", tol)
    _check_sorted(mu, "inner", tol)
    return all(lam[i] + tol >= mu[i] >= lam[n - m + i] - tol for i in range(m))


def tight_interlacing_index(
    outer: Spectrum | Sequence[float],
    inner: Sequence[float],
    tol: Optional[float] = None,
) -> Optional[int]:
    """Smallest k with ``inner[:k]`` matching the top of ``outer`` and the
    rest matching its bottom, or ``None`` when the interlacing is not tight."""
    tol = tolerance.compare_tol(tol)
    if not interlaces(outer, inner, tol):
        raise ValueError("inputs do not interlace")
    lam = _values(outer)
    mu = [float(v) for v in inner]
    n, m = len(lam), len(mu)
    top = [abs(mu[i] - lam[i]) <= tol for i in range(m)]
    bottom = [abs(mu[i] - lam[n - m + i]) <= tol for i in range(m)]
    for k in range(m + 1):
        if all(top[:k]) and all(bottom[k:]):
            return k
    return None
