"""Run reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class RunReport:
    """One algorithm run on one stream.

    ``optimum``, ``ratio`` and ``guarantee`` are None when the oracle was
    skipped or the algorithm has no proven ratio on the declared class.
    ``violation`` is set when the ratio falls below the guarantee or the
    pass count differs from the algorithm's formula.
    """

    algorithm: str
    class_label: str
    n: int
    m: int
    matching_size: int
    passes: int
    expected_passes: int
    peak_stored_edges: int
    update_ops: int
    ordering: str = "as-given"
    seed: Optional[int] = None
    epsilon: Optional[str] = None
    optimum: Optional[int] = None
    ratio: Optional[float] = None
    guarantee: Optional[float] = None
    guarantee_exact: Optional[str] = None
    violation: bool = False
    source: Optional[str] = None

    @property
    def ratio_exact(self) -> Optional[Fraction]:
        if self.optimum is None:
            return None
        return Fraction(self.matching_size, self.optimum) if self.optimum else Fraction(1)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        """Compact JSON; fields that are None (skipped oracle) are left out."""
        data = {k: v for k, v in self.to_dict().items() if v is not None}
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))


def render_report(r: RunReport) -> str:
    rows = [(k, v) for k, v in r.to_dict().items() if v is not None]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)
