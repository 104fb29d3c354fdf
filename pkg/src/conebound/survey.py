"""Per-order tallies of where Δ beats Haemers' bound on irregular connected graphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import tolerance
from .bounds import compare_bounds
from .enumeration import enumerate_connected, independence_number
from .graph import Graph, GraphError, is_connected

CSV_HEADER = "n,count,new_wins,haemers_wins,ties,proportion"
MIN_ORDER, MAX_ORDER = 4, 8


@dataclass(frozen=True)
class SurveyRow:
    order: int
    irregularConnectedCount: int
    newWins: int
    haemersWins: int
    ties: int

    @property
    def proportion(self) -> Fraction:
        if self.irregularConnectedCount == 0:
            return Fraction(0)
        return Fraction(self.newWins, self.irregularConnectedCount)

    def csv_line(self) -> str:
        return (
            f"{self.order},{self.irregularConnectedCount},{self.newWins},"
            f"{self.haemersWins},{self.ties},{float(self.proportion):.6f}"
        )

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "irregularConnectedCount": self.irregularConnectedCount,
            "newWins": self.newWins,
            "haemersWins": self.haemersWins,
            "ties": self.ties,
            "proportion": float(self.proportion),
            "proportionExact": f"{self.newWins}/{self.irregularConnectedCount}",
        }


def _tally(chunk: list[Graph], tol: float) -> tuple[int, int, int, int]:
    count = new = old = ties = 0
    for g in chunk:
        degs = g.degrees()
        if max(degs) == min(degs):
            continue
        count += 1
        winner = compare_bounds(g, independence_number(g), tol).winner
        if winner == "new":
            new += 1
        elif winner == "haemers":
            old += 1
        else:
            ties += 1
    return count, new, old, ties


def survey(
    n: int,
    tol: Optional[float] = None,
    universe: Optional[Iterable[Graph]] = None,
    threads: Optional[int] = None,
) -> SurveyRow:
    """Tally bound winners over the irregular connected graphs of order ``n``.

    ``universe`` replaces the built-in generator (e.g. graphs read from a
    graph6 file); graphs of other orders and disconnected graphs in it are
    skipped. ``threads`` fans the per-graph work out to processes; tallies
    are summed, so the row does not depend on scheduling.
    """
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise GraphError(f"survey supports orders {MIN_ORDER}..{MAX_ORDER}, got {n}")
    tol = tolerance.compare_tol(tol)
    if universe is None:
        graphs = list(enumerate_connected(n))
    else:
        graphs = [g for g in universe if g.n == n and is_connected(g)]
    if threads and threads > 1 and len(graphs) > 1:
        size = -(-len(graphs) // (threads * 4))
        chunks = [graphs[i:i + size] for i in range(0, len(graphs), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_tally, chunks, [tol] * len(chunks)))
    else:
        parts = [_tally(graphs, tol)]
    count, new, old, ties = (sum(p[i] for p in parts) for i in range(4))
    return SurveyRow(n, count, new, old, ties)
