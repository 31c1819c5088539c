"""Rule kinds of the tableau calculus and their scheduling properties."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from src.domain.value_objects.labelled_concept import LabelledConcept


class RuleKind(str, Enum):
    """Rules of the ALBO^id tableau calculus, including unrestricted blocking."""

    CLASH = "clash"
    NOT_NOT = "not-not"
    NOT_OR = "not-or"
    OR = "or"
    EXISTS = "exists"
    NOT_EXISTS = "not-exists"
    SYM = "sym"
    NOT_SYM = "not-sym"
    MON = "mon"
    REFL = "refl"
    EXISTS_OR = "exists-or"
    NOT_EXISTS_OR = "not-exists-or"
    EXISTS_INV = "exists-inv"
    NOT_EXISTS_INV = "not-exists-inv"
    EXISTS_NOT = "exists-not"
    NOT_EXISTS_NOT = "not-exists-not"
    EXISTS_ID = "exists-id"
    NOT_EXISTS_ID = "not-exists-id"
    UB = "ub"

    @property
    def symbol(self) -> str:
        """Name as printed in derivations."""
        mapping = {
            RuleKind.CLASH: "(⊥)",
            RuleKind.NOT_NOT: "(¬¬)",
            RuleKind.NOT_OR: "(¬⊔)",
            RuleKind.OR: "(⊔)",
            RuleKind.EXISTS: "(∃)",
            RuleKind.NOT_EXISTS: "(¬∃)",
            RuleKind.SYM: "(sym)",
            RuleKind.NOT_SYM: "(¬sym)",
            RuleKind.MON: "(mon)",
            RuleKind.REFL: "(refl)",
            RuleKind.EXISTS_OR: "(∃⊔)",
            RuleKind.NOT_EXISTS_OR: "(¬∃⊔)",
            RuleKind.EXISTS_INV: "(∃⁻¹)",
            RuleKind.NOT_EXISTS_INV: "(¬∃⁻¹)",
            RuleKind.EXISTS_NOT: "(∃¬)",
            RuleKind.NOT_EXISTS_NOT: "(¬∃¬)",
            RuleKind.EXISTS_ID: "(∃id)",
            RuleKind.NOT_EXISTS_ID: "(¬∃id)",
            RuleKind.UB: "(ub)",
        }
        return mapping[self]

    @property
    def is_branching(self) -> bool:
        return self in (RuleKind.OR, RuleKind.EXISTS_OR, RuleKind.NOT_EXISTS_NOT, RuleKind.UB)

    @property
    def tier(self) -> int:
        """Scheduling priority, lower runs first."""
        if self == RuleKind.CLASH:
            return 0
        if self == RuleKind.UB:
            return 1
        if self == RuleKind.EXISTS:
            return 4
        return 3 if self.is_branching else 2

    @property
    def branch_labels(self) -> tuple[str, str]:
        """Edge labels for the two children of a branching rule."""
        if self == RuleKind.UB:
            return ("merge", "distinct")
        return ("left", "right")


@dataclass(frozen=True, slots=True)
class RuleInstance:
    """
    A rule together with the premises it is applied to.

    (refl) is keyed by its subject individual, since it fires once per label.
    """

    rule: RuleKind
    premises: tuple[LabelledConcept, ...]
    subject: str | None = None

    def __str__(self) -> str:
        premises = ", ".join(str(premise) for premise in self.premises)
        return f"{self.rule.symbol} {premises}"
