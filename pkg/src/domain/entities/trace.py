"""Trace events emitted while a derivation runs."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from src.domain.value_objects.labelled_concept import LabelledConcept
from src.domain.value_objects.rule_kind import RuleKind


class TraceEventKind(str, Enum):
    GIVEN = "given"
    RULE = "rule"
    CLASH = "clash"
    OPEN = "open"
    CUT = "cut"


@dataclass(frozen=True)
class TraceEvent:
    """
    One step of a derivation.

    For a branching rule one event is emitted per child; child_index tells
    which alternative the event's conclusions belong to and parent_branch_id
    names the branch that was split.
    """

    kind: TraceEventKind
    branch_id: str
    rule: RuleKind | None = None
    premises: tuple[LabelledConcept, ...] = ()
    conclusions: tuple[LabelledConcept, ...] = ()
    child_index: int = 0
    child_count: int = 1
    parent_branch_id: str | None = None
    note: str = ""

    @property
    def is_fork(self) -> bool:
        return self.child_count > 1
