"""The product bound ``-λmin·λmax >= Δ``, its equality structure, and
comparison with Haemers' independence-number bound."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

from . import tolerance
from .graph import Graph, GraphError, delete_vertex, profile, require_connected
from .spectra import Spectrum, spectrum


@dataclass(frozen=True)
class EqualityWitness:
    coneVertex: int
    baseDegree: int
    baseLambdaMin: float
    phiValue: float
    conditionHolds: bool


@dataclass(frozen=True)
class BoundReport:
    n: int
    Delta: int
    delta: int
    lambdaMax: float
    lambdaMin: float
    product: float
    slack: float
    equalityWithinTol: bool
    witness: Optional[EqualityWitness]

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Comparison:
    newBound: float
    haemersBound: float
    winner: str
    alphaThreshold: float
    alpha: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BipartiteBound:
    lambda1Squared: float
    meanDeg1: float
    meanDeg2: float
    boundHolds: bool
    equality: bool
    isBiregular: bool

    def to_dict(self) -> dict:
        return asdict(self)


def phi(delta: float, Delta: float) -> float:
    """Smaller root of ``x^2 - δx - Δ``; always negative for ``Δ >= 1``."""
    if Delta <= 0:
        raise ValueError(f"phi needs Delta >= 1, got {Delta}")
    return 0.5 * (delta - math.sqrt(delta * delta + 4.0 * Delta))


def cone_structure(g: Graph, tol: Optional[float] = None) -> Optional[EqualityWitness]:
    """Witness for the first universal vertex whose deletion leaves a regular
    graph, whether or not the threshold condition holds."""
    tol = tolerance.compare_tol(tol)
    if g.n < 2:
        return None
    degs = g.degrees()
    for u in range(g.n):
        if degs[u] != g.n - 1:
            continue
        base = delete_vertex(g, u)
        bdeg = base.degrees()
        if min(bdeg) != max(bdeg):
            continue
        lam_min = spectrum(base).lambda_min
        threshold = phi(bdeg[0], g.n - 1)
        return EqualityWitness(u, bdeg[0], lam_min, threshold, lam_min >= threshold - tol)
    return None


def equality_structure_check(g: Graph, tol: Optional[float] = None) -> Optional[EqualityWitness]:
    """Witness that ``g`` is a cone over a regular graph meeting the threshold,
    or ``None``.

    All universal vertices of a cone over a regular graph are interchangeable
    by an automorphism, so checking the smallest one decides the question.
    """
    require_connected(g)
    w = cone_structure(g, tol)
    return w if w is not None and w.conditionHolds else None


def product_bound_report(
    g: Graph, tol: Optional[float] = None, spec: Optional[Spectrum] = None
) -> BoundReport:
    """Evaluate ``-λmin·λmax`` against Δ. ``spec`` may be passed to reuse a
    precomputed spectrum. The structural witness is always computed so that
    a numerical/structural disagreement shows up in the report."""
    tol = tolerance.compare_tol(tol)
    if g.n < 2:
        raise GraphError("product bound needs at least two vertices")
    require_connected(g)
    spec = spectrum(g) if spec is None else spec
    prof = profile(g)
    product = -spec.lambda_min * spec.lambda_max
    slack = product - prof.max_degree
    return BoundReport(
        n=g.n,
        Delta=prof.max_degree,
        delta=prof.min_degree,
        lambdaMax=spec.lambda_max,
        lambdaMin=spec.lambda_min,
        product=product,
        slack=slack,
        equalityWithinTol=abs(slack) <= tol,
        witness=equality_structure_check(g, tol),
    )


def haemers_bound(g: Graph, alpha: int) -> float:
    """Haemers' lower bound ``αδ²/(n-α)`` on ``-λ1·λn``; α must be exact."""
    if not 1 <= alpha <= g.n - 1:
        raise ValueError(f"alpha must lie in 1..{g.n - 1}, got {alpha}")
    delta = min(g.degrees())
    return alpha * delta * delta / (g.n - alpha)


def crossover_alpha_threshold(n: int, delta: int, Delta: int) -> float:
    """Largest α for which Δ still beats Haemers' bound: ``n/(1+δ²/Δ)``."""
    if delta <= 0 or Delta <= 0:
        raise ValueError("crossover threshold needs delta >= 1 and Delta >= 1")
    return n / (1.0 + delta * delta / Delta)


def compare_bounds(g: Graph, alpha: int, tol: Optional[float] = None) -> Comparison:
    tol = tolerance.compare_tol(tol)
    require_connected(g)
    degs = g.degrees()
    Delta, delta = max(degs), min(degs)
    new = float(Delta)
    old = haemers_bound(g, alpha)
    if abs(new - old) <= tol:
        winner = "tie"
    elif new > old:
        winner = "new"
    else:
        winner = "haemers"
    return Comparison(new, old, winner, crossover_alpha_threshold(g.n, delta, Delta), alpha)


def bipartite_product_bound(
    g: Graph, tol: Optional[float] = None, spec: Optional[Spectrum] = None
) -> BipartiteBound:
    """``λ1² >= d1·d2`` for bipartite graphs, ``d_i`` the mean degree of part i
    (part 1 the larger); equality exactly for biregular graphs."""
    tol = tolerance.compare_tol(tol)
    if g.n < 2:
        raise GraphError("bipartite bound needs at least two vertices")
    require_connected(g)
    prof = profile(g)
    if prof.bipartition is None:
        raise GraphError("graph is not bipartite")
    spec = spectrum(g) if spec is None else spec
    lam2 = spec.lambda_max**2
    parts = [[prof.degrees[v] for v in part] for part in prof.bipartition]
    d1, d2 = (sum(p) / len(p) for p in parts)
    product = d1 * d2
    return BipartiteBound(
        lambda1Squared=lam2,
        meanDeg1=d1,
        meanDeg2=d2,
        boundHolds=lam2 >= product - tol,
        equality=abs(lam2 - product) <= tol,
        isBiregular=all(len(set(p)) == 1 for p in parts),
    )
