"""Adjacency spectra via a batched cyclic Jacobi eigensolver.

Rotations are applied in round-robin order: each round annihilates ``n/2``
disjoint off-diagonal pairs at once, which vectorizes cleanly over a stack
of matrices. Sweeps continue until the off-diagonal Frobenius norm drops
below ``1e-12`` times the matrix Frobenius norm, with a hard cap of 100.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from . import tolerance
from .graph import Graph

SYMMETRY_TOL = 1e-12
OFFDIAG_RATIO = 1e-12
MAX_SWEEPS = 100


class EigensolverError(ValueError):
    pass


@lru_cache(maxsize=None)
def _rounds(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule covering every pair ``p < q`` once per sweep."""
    m = n + (n % 2)
    players = list(range(m))
    out = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        out.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(out)


def _validate(a: np.ndarray) -> None:
    if a.ndim != 3 or a.shape[1] != a.shape[2] or a.shape[1] < 1:
        raise EigensolverError(f"expected square matrices, got shape {a.shape[1:]}")
    if not np.all(np.isfinite(a)):
        raise EigensolverError("matrix has non-finite entries")
    if a.size and np.max(np.abs(a - np.swapaxes(a, 1, 2))) > SYMMETRY_TOL:
        raise EigensolverError("matrix is not symmetric")


def eigenvalues_sym_batch(mats: np.ndarray | Sequence[np.ndarray]) -> np.ndarray:
    """Eigenvalues of a stack of real symmetric ``n x n`` matrices.

    Returns an array of shape ``(batch, n)``, each row sorted descending.
    """
    a = np.array(mats, dtype=float, copy=True)
    if a.ndim == 2:
        a = a[None]
    _validate(a)
    a = 0.5 * (a + np.swapaxes(a, 1, 2))
    batch, n, _ = a.shape
    if n > 1 and batch:
        fro2 = np.einsum("bij,bij->b", a, a)
        limit = (OFFDIAG_RATIO**2) * fro2
        offmask = ~np.eye(n, dtype=bool)
        for _ in range(MAX_SWEEPS):
            # summed directly: fro2 minus the diagonal cancels badly
            off2 = (a[:, offmask] ** 2).sum(axis=1)
            active = off2 > limit
            if not active.any():
                break
            sub = a[active]
            for p, q in _rounds(n):
                _rotate(sub, p, q)
            a[active] = sub
    vals = np.diagonal(a, axis1=1, axis2=2).copy()
    return -np.sort(-vals, axis=1)


def _rotate(a: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
    app = a[:, p, p]
    aqq = a[:, q, q]
    apq = a[:, p, q]
    nonzero = apq != 0.0
    safe = np.where(nonzero, apq, 1.0)
    with np.errstate(over="ignore"):
        theta = (aqq - app) / (2.0 * safe)
    big = np.abs(theta) > 1e150
    theta_c = np.where(big, 1.0, theta)
    t = np.sign(theta_c) / (np.abs(theta_c) + np.sqrt(theta_c * theta_c + 1.0))
    t = np.where(theta_c == 0.0, 1.0, t)
    t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
    t = np.where(nonzero, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    c3 = c[:, :, None]
    s3 = s[:, :, None]
    rp = a[:, p, :]
    rq = a[:, q, :]
    a[:, p, :] = c3 * rp - s3 * rq
    a[:, q, :] = s3 * rp + c3 * rq
    cp = a[:, :, p]
    cq = a[:, :, q]
    a[:, :, p] = c[:, None, :] * cp - s[:, None, :] * cq
    a[:, :, q] = s[:, None, :] * cp + c[:, None, :] * cq
    # the rotation zeroes (p, q) analytically; pin it to kill rounding residue
    a[:, p, q] = 0.0
    a[:, q, p] = 0.0


def eigenvalues_sym(m: np.ndarray | Sequence[Sequence[float]]) -> list[float]:
    """All eigenvalues of one real symmetric matrix, sorted descending."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2:
        raise EigensolverError(f"expected a 2-D matrix, got ndim={a.ndim}")
    return eigenvalues_sym_batch(a[None])[0].tolist()


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues ``λ1 >= ... >= λn``."""

    values: tuple[float, ...]
    tolerance: float = field(default_factory=lambda: tolerance.current().compare)

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("spectrum is empty")
        if self.tolerance <= 0:
            raise ValueError("spectrum tolerance must be positive")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("spectrum values must be sorted descending")

    @property
    def lambda_max(self) -> float:
        return self.values[0]

    @property
    def lambda_min(self) -> float:
        return self.values[-1]

    @property
    def trace(self) -> float:
        return math.fsum(self.values)

    @property
    def sum_of_squares(self) -> float:
        return math.fsum(x * x for x in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def distinct(self, tol: Optional[float] = None) -> list[tuple[float, int]]:
        """Distinct values (descending) with multiplicities, grouped within ``tol``."""
        tol = self.tolerance if tol is None else tol
        groups: list[list[float]] = []
        for x in self.values:
            if groups and abs(groups[-1][-1] - x) <= tol:
                groups[-1].append(x)
            else:
                groups.append([x])
        return [(math.fsum(g) / len(g), len(g)) for g in groups]


def spectrum(g: Graph) -> Spectrum:
    return Spectrum(tuple(eigenvalues_sym(g.adjacency_matrix())))


def spectra(graphs: Iterable[Graph]) -> list[Spectrum]:
    """Spectra of many graphs, batching graphs of equal order together."""
    graphs = list(graphs)
    out: list[Optional[Spectrum]] = [None] * len(graphs)
    by_order: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_order.setdefault(g.n, []).append(i)
    for n, idx in by_order.items():
        stack = np.zeros((len(idx), n, n))
        for k, i in enumerate(idx):
            for u, v in graphs[i].edges():
                stack[k, u, v] = stack[k, v, u] = 1.0
        vals = eigenvalues_sym_batch(stack)
        for k, i in enumerate(idx):
            out[i] = Spectrum(tuple(vals[k].tolist()))
    return out  # type: ignore[return-value]


def cone_spectrum_predicted(
    base_spectrum: Spectrum | Sequence[float],
    base_degree: int,
    base_order: int,
    tol: Optional[float] = None,
) -> list[float]:
    """Predicted spectrum of the cone over a ``base_degree``-regular graph.

    One copy of the base's largest eigenvalue (which must equal the degree)
    is replaced by the two roots of ``x^2 - δx - order``. The base may be
    disconnected; only one copy of δ is removed either way.
    """
    tol = tolerance.compare_tol(tol)
    values = list(base_spectrum.values if isinstance(base_spectrum, Spectrum) else base_spectrum)
    if len(values) != base_order:
        raise ValueError(f"base spectrum has {len(values)} values, expected {base_order}")
    values.sort(reverse=True)
    if abs(values[0] - base_degree) > tol:
        raise ValueError(
            f"largest base eigenvalue {values[0]} differs from degree {base_degree}; base is not regular"
        )
    disc = math.sqrt(base_degree * base_degree + 4 * base_order)
    rest = values[1:] + [(base_degree + disc) / 2, (base_degree - disc) / 2]
    return sorted(rest, reverse=True)
