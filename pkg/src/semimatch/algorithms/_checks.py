"""Runtime invariant checks used when an algorithm runs in checked mode."""

from __future__ import annotations

from ..graph import Matching


class InvariantViolation(AssertionError):
    """A runtime invariant of a streaming algorithm failed."""


def check_matching(M: Matching, where: str) -> None:
    if not M.is_valid():
        raise InvariantViolation(f"{where}: matching is not vertex-disjoint")


def check_grew(before: int, M: Matching, where: str) -> None:
    if len(M) < before:
        raise InvariantViolation(f"{where}: matching shrank from {before} to {len(M)}")
