"""Streaming matching algorithms, each a pass-structured state machine over a source."""

from ._checks import InvariantViolation
from .greedy import greedy, greedy_maximal_matching
from .improve import Event, ImproveMachine, PassRecord, improve_matching
from .multi_pass import multi_pass, pass_budget, pass_caps
from .registry import ALGORITHMS, expected_passes, guarantee, run_algorithm
from .support import IgnoreSets, SupportSet, greedy_augment, semi_matching
from .three_pass import (
    AugmentationPlan,
    three_pass_bipartite,
    three_pass_general,
    three_pass_triangle_free,
)
from .two_pass import improve_params, two_pass_further, two_pass_improved, two_pass_simple

__all__ = [
    "ALGORITHMS",
    "AugmentationPlan",
    "Event",
    "IgnoreSets",
    "ImproveMachine",
    "InvariantViolation",
    "PassRecord",
    "SupportSet",
    "expected_passes",
    "greedy",
    "greedy_augment",
    "greedy_maximal_matching",
    "guarantee",
    "improve_matching",
    "improve_params",
    "multi_pass",
    "pass_budget",
    "pass_caps",
    "run_algorithm",
    "semi_matching",
    "three_pass_bipartite",
    "three_pass_general",
    "three_pass_triangle_free",
    "two_pass_further",
    "two_pass_improved",
    "two_pass_simple",
]
