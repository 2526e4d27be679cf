"""Offline ground truth: exact matchings, union structure, class checks."""

from .charging import ChargeReport, classify_pass
from .classes import bipartition, is_triangle_free, satisfies_class
from .decomposition import AugDecomposition, AugmentingPath, augmentable_bounds_hold, decompose_union, lemma1_check
from .exact import EXHAUSTIVE_EDGE_LIMIT, OracleLimitError, exhaustive_max_matching, max_matching
from .schedule import GuaranteeSchedule, alpha_schedule, improvement, recurrence_step, schedule_from_caps

__all__ = [
    "AugDecomposition",
    "AugmentingPath",
    "ChargeReport",
    "EXHAUSTIVE_EDGE_LIMIT",
    "GuaranteeSchedule",
    "OracleLimitError",
    "alpha_schedule",
    "bipartition",
    "classify_pass",
    "decompose_union",
    "exhaustive_max_matching",
    "improvement",
    "is_triangle_free",
    "augmentable_bounds_hold",
    "lemma1_check",
    "max_matching",
    "recurrence_step",
    "satisfies_class",
    "schedule_from_caps",
]
