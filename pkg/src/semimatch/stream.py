"""Replayable edge streams with pass counting and resource metering.

A :class:`StreamSource` fixes the arrival order once. Algorithms read it only
through :func:`replay` (one full traversal per pass) and report their work to
the source's :class:`Meter`.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from .graph import Edge, Graph, GraphError


class StreamError(RuntimeError):
    """Misuse of a stream: nested traversal of one source."""


@dataclass
class Meter:
    """Counts elementary update steps and the peak number of stored edges.

    ``stored`` counts edges held at once: matchings, support edges and
    auxiliary matchings. Per-vertex flags and pointers are not edges.
    """

    update_ops: int = 0
    peak_stored_edges: int = 0

    def ops(self, k: int = 1) -> None:
        self.update_ops += k

    def store(self, edges: int) -> None:
        if edges > self.peak_stored_edges:
            self.peak_stored_edges = edges

    def reset(self) -> None:
        self.update_ops = 0
        self.peak_stored_edges = 0


@dataclass(frozen=True)
class PassMetrics:
    passes: int
    peak_stored_edges: int
    update_ops: int
    stream_length: int

    @property
    def ops_per_edge_pass(self) -> float:
        denom = self.stream_length * self.passes
        return self.update_ops / denom if denom else 0.0


@dataclass(eq=False)
class StreamSource:
    """A fixed-order edge sequence over vertices ``0..n-1``.

    The class label and bipartition travel with the source as declared
    metadata; nothing here inspects the edges to infer them.
    """

    n: int
    edges: np.ndarray
    class_label: str = "general"
    sides: Optional[tuple[str, ...]] = None
    provenance: str = "as-given"
    passes_used: int = 0
    meter: Meter = field(default_factory=Meter)
    _live: bool = False
    _cache: Optional[list] = None

    def __len__(self) -> int:
        return int(self.edges.shape[0])

    @property
    def m(self) -> int:
        return len(self)

    def edge_list(self) -> list[Edge]:
        """The fixed ordering, for offline consumers (oracle, reports)."""
        if self._cache is None:
            self._cache = [Edge(u, v) for u, v in self.edges.tolist()]
        return self._cache

    def graph(self) -> Graph:
        return Graph(self.n, tuple(self.edge_list()), self.class_label, self.sides)

    def digest(self) -> str:
        return hashlib.sha256(np.ascontiguousarray(self.edges).tobytes()).hexdigest()

    def reset_metrics(self) -> None:
        self.passes_used = 0
        self.meter.reset()


def _as_edge_array(edges, n: int) -> np.ndarray:
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError("edges must be pairs of vertex ids")
    if (arr[:, 0] == arr[:, 1]).any():
        i = int(np.flatnonzero(arr[:, 0] == arr[:, 1])[0])
        raise GraphError(f"self-loop at vertex {arr[i, 0]} (edge #{i})")
    if (arr < 0).any() or (arr >= n).any():
        bad = int(arr[(arr < 0) | (arr >= n)][0])
        raise GraphError(f"vertex {bad} out of range for n={n}")
    arr = np.sort(arr, axis=1)
    arr.setflags(write=False)
    return arr


def open_source(
    spec: Union[Sequence[Sequence[int]], np.ndarray, Graph, str, os.PathLike],
    n: Optional[int] = None,
    class_label: Optional[str] = None,
    sides: Optional[Sequence[str]] = None,
) -> StreamSource:
    """Build a source from in-memory edges, a :class:`Graph`, or a graph file.

    For files, ``n`` and the class come from the file's directives unless
    given explicitly.
    """
    if isinstance(spec, (str, os.PathLike)):
        from .harness.io import parse_graph_file

        g = parse_graph_file(spec)
        if n is not None and n != g.n:
            raise GraphError(f"file declares n={g.n}, caller expects n={n}")
        return open_source(g)
    if isinstance(spec, Graph):
        return StreamSource(
            spec.n,
            _as_edge_array([tuple(e) for e in spec.edges], spec.n),
            class_label or spec.class_label,
            tuple(sides) if sides is not None else spec.sides,
        )
    if n is None:
        raise GraphError("vertex count n is required for in-memory edges")
    return StreamSource(
        n,
        _as_edge_array(spec, n),
        class_label or "general",
        tuple(sides) if sides is not None else None,
    )


def replay(source: StreamSource) -> Iterator[Edge]:
    """Yield the edges of ``source`` once, in its fixed order.

    ``passes_used`` is incremented when the traversal completes. Starting a
    second traversal while one is live raises :class:`StreamError`.
    """
    if source._live:
        raise StreamError("source already has a live traversal")
    source._live = True
    try:
        yield from source.edge_list()
        source.passes_used += 1
    finally:
        source._live = False


def collect_metrics(source: StreamSource) -> PassMetrics:
    """Snapshot the pass count and meter of ``source`` after a completed run."""
    if source._live:
        raise StreamError("cannot collect metrics during a live traversal")
    return PassMetrics(
        passes=source.passes_used,
        peak_stored_edges=source.meter.peak_stored_edges,
        update_ops=source.meter.update_ops,
        stream_length=len(source),
    )


def measure(algorithm, source: StreamSource, **params):
    """Run ``algorithm`` on a freshly reset source; return ``(matching, metrics)``."""
    source.reset_metrics()
    result = algorithm(source, **params)
    return result, collect_metrics(source)
