"""One-pass greedy maximal matching."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from ..graph import UNMATCHED, Edge, Matching
from ..stream import Meter, StreamSource, replay
from ._checks import check_matching


def greedy_pass(
    stream: Iterable[Sequence[int]], n: int, meter: Optional[Meter] = None
) -> tuple[Matching, list[Edge]]:
    """Greedy maximal matching plus the order in which its edges were taken."""
    M = Matching(n)
    mate = M.mate
    order: list[Edge] = []
    count = 0
    for u, v in stream:
        count += 1
        if mate[u] == UNMATCHED and mate[v] == UNMATCHED:
            M.add(u, v)
            order.append(Edge(u, v))
    if meter is not None:
        meter.ops(count)
        meter.store(len(M))
    return M, order


def greedy_maximal_matching(
    stream: Iterable[Sequence[int]], n: int, meter: Optional[Meter] = None
) -> Matching:
    """Take every arriving edge whose endpoints are both still uncovered.

    The result is maximal with respect to the edges seen: no edge of
    ``stream`` has both endpoints uncovered.
    """
    return greedy_pass(stream, n, meter)[0]


def greedy(source: StreamSource, checked: bool = False) -> Matching:
    """The one-pass 1/2-approximation."""
    M = greedy_maximal_matching(replay(source), source.n, source.meter)
    if checked:
        check_matching(M, "greedy")
    return M
