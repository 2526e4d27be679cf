"""Multi-pass semi-streaming approximations for maximum matching.

Graphs arrive as a fixed edge stream. Every algorithm starts from a greedy
maximal matching and spends further passes on short (3-edge) augmenting
paths, keeping only a degree-capped set of support edges in memory.
"""

from .graph import Edge, Graph, GraphError, Matching, augment_3, is_valid_matching, make_edge
from .stream import PassMetrics, StreamSource, collect_metrics, measure, open_source, replay

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "Matching",
    "PassMetrics",
    "StreamSource",
    "augment_3",
    "collect_metrics",
    "is_valid_matching",
    "make_edge",
    "measure",
    "open_source",
    "replay",
]
