"""Labelled concepts and tableau individuals."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from src.domain.value_objects.expressions import Concept
from src.domain.value_objects.printing import print_concept


@dataclass(frozen=True, slots=True)
class LabelledConcept:
    """A tableau fact a:C."""

    label: str
    concept: Concept

    def __str__(self) -> str:
        return f"{self.label} : {print_concept(self.concept)}"


class Origin(str, Enum):
    """How an individual entered the branch."""

    ROOT = "root"
    NOMINAL = "nominal"
    WITNESS = "witness"


@dataclass(frozen=True, slots=True)
class Individual:
    """
    A label of the tableau.

    The index is the creation order and defines the linear order used by
    blocking: a < b iff a.index < b.index.
    """

    index: int
    name: str
    origin: Origin
    parent: str | None = None
    witnessed: Concept | None = None

    def __lt__(self, other: Individual) -> bool:
        return self.index < other.index
