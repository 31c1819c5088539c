"""Problem entity: goal concepts plus a knowledge base, before internalization."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from src.domain.exceptions import EmptyProblem
from src.domain.value_objects.expressions import (
    And,
    Assertion,
    Bottom,
    Concept,
    Incl,
    RIncl,
    RoleAssertion,
    Singleton,
    conjunction,
    individuals,
)


@dataclass
class Problem:
    """
    A satisfiability problem as written in a .albo file.

    The unique name assumption is off unless requested.
    """

    goals: list[Concept] = field(default_factory=list)
    tbox: list[Incl] = field(default_factory=list)
    rbox: list[RIncl] = field(default_factory=list)
    abox: list[Assertion | RoleAssertion] = field(default_factory=list)
    una: bool = False

    def statements(self) -> list[Concept]:
        """Knowledge base statements in TBox, RBox, ABox order."""
        return [*self.tbox, *self.rbox, *self.abox]

    def individuals(self) -> tuple[str, ...]:
        """Individuals of goals and statements in order of first occurrence."""
        seen: dict[str, None] = {}
        for expression in [*self.goals, *self.statements()]:
            for name in individuals(expression):
                seen.setdefault(name)
        return tuple(seen)

    def unique_name_axioms(self) -> list[Incl]:
        """{a} and {b} are disjoint for every pair of distinct individuals."""
        if not self.una:
            return []
        return [
            Incl(And(Singleton(a), Singleton(b)), Bottom())
            for a, b in combinations(self.individuals(), 2)
        ]

    def as_concept(self) -> Concept:
        """
        Conjunction of the goals, all statements and the unique name axioms.

        Returns:
            The sugared concept whose satisfiability is the problem

        Raises:
            EmptyProblem: If there is no goal concept
        """
        if not self.goals:
            raise EmptyProblem()
        return conjunction([*self.goals, *self.statements(), *self.unique_name_axioms()])
