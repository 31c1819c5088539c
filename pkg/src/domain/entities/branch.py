"""Branch entity: the state of one tableau branch."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from src.domain.entities.equality_classes import EqualityClasses
from src.domain.value_objects.expressions import (
    Concept,
    Exists,
    Inverse,
    Not,
    Role,
    RoleNot,
    Singleton,
)
from src.domain.value_objects.labelled_concept import Individual, LabelledConcept, Origin
from src.domain.value_objects.rule_kind import RuleInstance

WITNESS_PREFIX = "$a"


@dataclass
class Branch:
    """
    One branch of a tableau derivation.

    Children are produced with copy(); every container is either copied or
    holds immutable tuples, so expanding one child never affects a sibling.
    Besides the facts themselves the branch keeps the lookup tables the
    two-premise rules need, and the queue of rule instances waiting to be
    applied.
    """

    branch_id: str = "1"
    facts: dict[LabelledConcept, int] = field(default_factory=dict)
    individuals: dict[str, Individual] = field(default_factory=dict)
    labelled: set[str] = field(default_factory=set)
    applied: set[RuleInstance] = field(default_factory=set)
    witness_memo: dict[tuple[str, Concept], str] = field(default_factory=dict)
    equalities: EqualityClasses = field(default_factory=EqualityClasses)
    blocked: set[str] = field(default_factory=set)
    closed: bool = False
    clash: tuple[LabelledConcept, LabelledConcept] | None = None
    step_count: int = 0
    exists_count: int = 0

    pending: list[tuple[int, int, RuleInstance]] = field(default_factory=list)
    deferred: tuple[RuleInstance, ...] = ()
    sequence: int = 0

    by_label: dict[str, tuple[Concept, ...]] = field(default_factory=dict)
    domain: tuple[str, ...] = ()
    links_from: dict[tuple[str, Role], tuple[str, ...]] = field(default_factory=dict)
    links_to: dict[tuple[str, Role], tuple[str, ...]] = field(default_factory=dict)
    neg_exists: dict[tuple[str, Role], tuple[Concept, ...]] = field(default_factory=dict)
    neg_exists_inv: dict[tuple[str, Role], tuple[Concept, ...]] = field(default_factory=dict)
    windows: tuple[tuple[str, Role, Concept], ...] = ()
    eq_into: dict[str, tuple[str, ...]] = field(default_factory=dict)

    # Individuals

    def register(
        self,
        origin: Origin,
        name: str | None = None,
        parent: str | None = None,
        witnessed: Concept | None = None,
    ) -> Individual:
        """Add an individual with the next creation index."""
        index = len(self.individuals)
        individual = Individual(
            index=index,
            name=name if name is not None else f"{WITNESS_PREFIX}{index}",
            origin=origin,
            parent=parent,
            witnessed=witnessed,
        )
        self.individuals[individual.name] = individual
        self.equalities.add(individual.name, index)
        return individual

    def index_of(self, name: str) -> int:
        return self.individuals[name].index

    def is_blocked(self, name: str) -> bool:
        return name in self.blocked

    def representative(self, name: str) -> str:
        return self.equalities.find(name)

    def concepts_of(self, label: str) -> tuple[Concept, ...]:
        return self.by_label.get(label, ())

    # Facts

    def __contains__(self, fact: object) -> bool:
        return fact in self.facts

    def add(self, fact: LabelledConcept) -> bool:
        """
        Insert a fact and update the lookup tables.

        Returns:
            False if the fact was already present
        """
        if fact in self.facts:
            return False
        self.facts[fact] = len(self.facts)
        label, concept = fact.label, fact.concept
        self.by_label[label] = self.by_label.get(label, ()) + (concept,)

        match concept:
            case Singleton(other) if other == label:
                self.domain += (label,)
            case Singleton(other):
                self.eq_into[other] = self.eq_into.get(other, ()) + (label,)
                self.equalities.union(label, other)
                if self.index_of(label) < self.index_of(other):
                    self.blocked.add(other)
            case Exists(role, Singleton(other)):
                key = (label, role)
                self.links_from[key] = self.links_from.get(key, ()) + (other,)
                reverse = (other, role)
                self.links_to[reverse] = self.links_to.get(reverse, ()) + (label,)
            case Not(Exists(role, filler)):
                key = (label, role)
                self.neg_exists[key] = self.neg_exists.get(key, ()) + (filler,)
                if isinstance(role, Inverse):
                    key = (label, role.operand)
                    self.neg_exists_inv[key] = self.neg_exists_inv.get(key, ()) + (filler,)
                if isinstance(role, RoleNot):
                    self.windows += ((label, role.operand, filler),)

        complement = concept.operand if isinstance(concept, Not) else Not(concept)
        if not self.closed and LabelledConcept(label, complement) in self.facts:
            self.closed = True
            self.clash = (LabelledConcept(label, complement), fact)
        return True

    def fact_list(self) -> list[LabelledConcept]:
        """Facts in insertion order."""
        return list(self.facts)

    # Rule queue

    def enqueue(self, instance: RuleInstance) -> None:
        heapq.heappush(self.pending, (instance.rule.tier, self.sequence, instance))
        self.sequence += 1

    def defer(self, instance: RuleInstance) -> None:
        self.deferred += (instance,)

    def release_deferred(self) -> None:
        deferred, self.deferred = self.deferred, ()
        for instance in deferred:
            self.enqueue(instance)

    def copy(self, branch_id: str) -> Branch:
        return Branch(
            branch_id=branch_id,
            facts=dict(self.facts),
            individuals=dict(self.individuals),
            labelled=set(self.labelled),
            applied=set(self.applied),
            witness_memo=dict(self.witness_memo),
            equalities=self.equalities.copy(),
            blocked=set(self.blocked),
            closed=self.closed,
            clash=self.clash,
            step_count=self.step_count,
            exists_count=self.exists_count,
            pending=list(self.pending),
            deferred=self.deferred,
            sequence=self.sequence,
            by_label=dict(self.by_label),
            domain=self.domain,
            links_from=dict(self.links_from),
            links_to=dict(self.links_to),
            neg_exists=dict(self.neg_exists),
            neg_exists_inv=dict(self.neg_exists_inv),
            windows=self.windows,
            eq_into=dict(self.eq_into),
        )
