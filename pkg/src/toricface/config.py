"""Run settings shared by the CLI and the scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import BoxSpec
from .homology import QQ, FieldSpec
from .shelling import DEFAULT_BUDGET


@dataclass(frozen=True)
class AnalysisConfig:
    fields: tuple[FieldSpec, ...] = (QQ,)
    box: BoxSpec = field(default_factory=BoxSpec)
    budget: int = DEFAULT_BUDGET
    # treat a search that ran out of budget as a failure (exit status 2)
    strict: bool = True

    def __post_init__(self):
        if not self.fields:
            raise ValueError("at least one coefficient field is needed")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
