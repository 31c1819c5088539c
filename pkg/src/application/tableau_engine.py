"""Tableau Engine - the ALBO^id calculus with unrestricted blocking.

Rule instances are generated when their newest premise enters a branch and
wait in the branch's priority queue until the search applies them. Clashes
are detected on insertion, so a closed branch never has anything left to do.
"""
from __future__ import annotations

import heapq
from collections.abc import Iterable

from src.domain.entities.branch import Branch
from src.domain.entities.trace import TraceEvent, TraceEventKind
from src.domain.exceptions import RuleNotApplicable
from src.domain.value_objects.calculus_options import CalculusOptions
from src.domain.value_objects.expressions import (
    Concept,
    Exists,
    Id,
    Inverse,
    Not,
    Or,
    RoleNot,
    RoleOr,
    Singleton,
    individuals,
)
from src.domain.value_objects.labelled_concept import Individual, LabelledConcept, Origin
from src.domain.value_objects.rule_kind import RuleInstance, RuleKind
from src.ports.outbound.trace_port import TraceSinkPort

ROOT_BRANCH_ID = "1"

Alternatives = list[tuple[LabelledConcept, ...]]


def applicable(branch: Branch) -> list[RuleInstance]:
    """Pending rule instances whose side conditions hold, in scheduling order."""
    if branch.closed:
        return []
    return [instance for _, _, instance in sorted(branch.pending) if _is_live(branch, instance)]


def is_fully_expanded(branch: Branch) -> bool:
    return not branch.closed and not applicable(branch)


def is_blocked(branch: Branch, individual: Individual | str) -> bool:
    """An individual is blocked once some earlier individual is known to equal it."""
    name = individual if isinstance(individual, str) else individual.name
    return branch.is_blocked(name)


def _is_live(branch: Branch, instance: RuleInstance) -> bool:
    if instance in branch.applied:
        return False
    if instance.rule == RuleKind.EXISTS:
        return not branch.is_blocked(instance.premises[0].label)
    if instance.rule == RuleKind.UB:
        first, second = (premise.label for premise in instance.premises)
        if branch.representative(first) != first or branch.representative(second) != second:
            return False
    return not any(
        all(fact in branch.facts for fact in alternative)
        for alternative in _alternatives(instance)
    )


def _alternatives(instance: RuleInstance) -> Alternatives:
    """Conclusions of every rule except (∃), one tuple per child."""
    first = instance.premises[0] if instance.premises else None
    a = first.label if first else ""
    match instance.rule, first.concept if first else None:
        case RuleKind.REFL, _:
            subject = instance.subject or a
            return [(LabelledConcept(subject, Singleton(subject)),)]
        case RuleKind.NOT_NOT, Not(Not(inner)):
            return [(LabelledConcept(a, inner),)]
        case RuleKind.NOT_OR, Not(Or(left, right)):
            return [(LabelledConcept(a, Not(left)), LabelledConcept(a, Not(right)))]
        case RuleKind.OR, Or(left, right):
            return [(LabelledConcept(a, left),), (LabelledConcept(a, right),)]
        case RuleKind.NOT_EXISTS, Not(Exists(_, filler)):
            witness = _singleton_name(instance.premises[1].concept)
            return [(LabelledConcept(witness, Not(filler)),)]
        case RuleKind.SYM, Singleton(b):
            return [(LabelledConcept(b, Singleton(a)),)]
        case RuleKind.NOT_SYM, Not(Singleton(b)):
            return [(LabelledConcept(b, Not(Singleton(a))),)]
        case RuleKind.MON, Singleton(b):
            return [(LabelledConcept(a, instance.premises[1].concept),)]
        case RuleKind.EXISTS_OR, Exists(RoleOr(left, right), Singleton(b)):
            return [
                (LabelledConcept(a, Exists(left, Singleton(b))),),
                (LabelledConcept(a, Exists(right, Singleton(b))),),
            ]
        case RuleKind.NOT_EXISTS_OR, Not(Exists(RoleOr(left, right), filler)):
            return [
                (
                    LabelledConcept(a, Not(Exists(left, filler))),
                    LabelledConcept(a, Not(Exists(right, filler))),
                )
            ]
        case RuleKind.EXISTS_INV, Exists(Inverse(role), Singleton(b)):
            return [(LabelledConcept(b, Exists(role, Singleton(a))),)]
        case RuleKind.NOT_EXISTS_INV, Not(Exists(Inverse(_), filler)):
            return [(LabelledConcept(instance.premises[1].label, Not(filler)),)]
        case RuleKind.EXISTS_NOT, Exists(RoleNot(role), Singleton(b)):
            return [(LabelledConcept(a, Not(Exists(role, Singleton(b)))),)]
        case RuleKind.NOT_EXISTS_NOT, Not(Exists(RoleNot(role), filler)):
            b = instance.premises[1].label
            return [
                (LabelledConcept(a, Exists(role, Singleton(b))),),
                (LabelledConcept(b, Not(filler)),),
            ]
        case RuleKind.EXISTS_ID, Exists(Id(), Singleton(b)):
            return [(LabelledConcept(a, Singleton(b)),)]
        case RuleKind.NOT_EXISTS_ID, Not(Exists(Id(), filler)):
            return [(LabelledConcept(a, Not(filler)),)]
        case RuleKind.UB, _:
            b = instance.premises[1].label
            return [(LabelledConcept(a, Singleton(b)),), (LabelledConcept(a, Not(Singleton(b))),)]
    raise RuleNotApplicable(f"premises do not match {instance.rule.symbol}: {instance}")


def _singleton_name(concept: Concept) -> str:
    match concept:
        case Exists(_, Singleton(name)):
            return name
    raise RuleNotApplicable(f"not a role link: {concept}")


class TableauEngine:
    """
    Applies the rules of the calculus to branches.

    The engine holds no branch state of its own; it only knows the calculus
    options and where to report trace events.
    """

    def __init__(
        self,
        options: CalculusOptions | None = None,
        trace: TraceSinkPort | None = None,
    ):
        """
        Initialize the engine.

        Args:
            options: Blocking configuration (default: eager unrestricted blocking)
            trace: Optional sink receiving one event per rule application
        """
        self._options = options or CalculusOptions()
        self._trace = trace

    @property
    def options(self) -> CalculusOptions:
        return self._options

    def init(self, concept: Concept) -> Branch:
        """
        Create the root branch {a0:C}.

        Individuals named in the concept are registered after the root, in
        order of first occurrence, and start out as domain elements b:{b}.
        """
        branch = Branch(branch_id=ROOT_BRANCH_ID)
        root = branch.register(Origin.ROOT)
        for name in individuals(concept):
            branch.register(Origin.NOMINAL, name=name)
        given = [LabelledConcept(root.name, concept)]
        given += [
            LabelledConcept(individual.name, Singleton(individual.name))
            for individual in branch.individuals.values()
            if individual.origin == Origin.NOMINAL
        ]
        added = self._insert_all(branch, given)
        self._emit(TraceEvent(TraceEventKind.GIVEN, branch.branch_id, conclusions=tuple(added)))
        self._emit_clash(branch)
        return branch

    def extend(self, branch: Branch, facts: Iterable[LabelledConcept]) -> list[LabelledConcept]:
        """Add facts to a branch as if they had been given, scheduling their rules."""
        was_closed = branch.closed
        added = self._insert_all(branch, facts)
        if added:
            self._emit(TraceEvent(TraceEventKind.GIVEN, branch.branch_id, conclusions=tuple(added)))
            if not was_closed:
                self._emit_clash(branch)
        return added

    def select(self, branch: Branch) -> RuleInstance | None:
        """
        The next instance to apply, discarding ones that can never fire again.

        Returns:
            The highest-priority live instance, or None if the branch is done
        """
        if branch.closed:
            return None
        pending = branch.pending
        while pending:
            instance = pending[0][2]
            if _is_live(branch, instance):
                return instance
            heapq.heappop(pending)
        return None

    def apply(
        self, branch: Branch, instance: RuleInstance, reuse_parent: bool = False
    ) -> list[Branch]:
        """
        Apply one rule instance.

        Args:
            branch: The branch the instance belongs to
            instance: A currently applicable instance
            reuse_parent: Let the first child take over the parent object instead of copying it

        Returns:
            One child, or two for branching rules; left child first

        Raises:
            RuleNotApplicable: If the instance is not applicable to the branch
        """
        if branch.closed or not _is_live(branch, instance):
            raise RuleNotApplicable(f"{instance} is not applicable in branch {branch.branch_id}")
        if not all(premise in branch.facts for premise in instance.premises):
            raise RuleNotApplicable(f"premises of {instance} are not in branch {branch.branch_id}")
        self._dequeue(branch, instance)

        alternatives = None if instance.rule == RuleKind.EXISTS else _alternatives(instance)
        count = 1 if alternatives is None else len(alternatives)
        parent_id = branch.branch_id
        ids = [parent_id] if count == 1 else [f"{parent_id}.{i + 1}" for i in range(count)]
        children = [branch.copy(child_id) for child_id in ids[1:]]
        if reuse_parent:
            branch.branch_id = ids[0]
            children.insert(0, branch)
        else:
            children.insert(0, branch.copy(ids[0]))

        for child_index, child in enumerate(children):
            child.applied.add(instance)
            child.step_count += 1
            if alternatives is None:
                conclusions: tuple[LabelledConcept, ...] = self._witness(child, instance)
            else:
                conclusions = alternatives[child_index]
            added = self._insert_all(child, conclusions)
            self._emit(
                TraceEvent(
                    TraceEventKind.RULE,
                    child.branch_id,
                    rule=instance.rule,
                    premises=instance.premises,
                    conclusions=tuple(added),
                    child_index=child_index,
                    child_count=count,
                    parent_branch_id=parent_id,
                )
            )
            self._emit_clash(child)
        return children

    def finish(self, branch: Branch, kind: TraceEventKind, note: str = "") -> None:
        """Report that a branch ended open or was cut off by the search."""
        self._emit(TraceEvent(kind, branch.branch_id, note=note))

    # Internals

    def _witness(self, branch: Branch, instance: RuleInstance) -> tuple[LabelledConcept, ...]:
        """Conclusions of (∃): a:∃R.{w} and w:C, reusing the witness of an equal individual."""
        premise = instance.premises[0]
        match premise.concept:
            case Exists(role, filler):
                pass
            case _:
                raise RuleNotApplicable(f"premise of (∃) is not existential: {premise}")
        label = premise.label
        witness = None
        for (owner, concept), candidate in branch.witness_memo.items():
            if concept == premise.concept and branch.equalities.same(owner, label):
                witness = candidate
                break
        if witness is None:
            individual = branch.register(Origin.WITNESS, parent=label, witnessed=premise.concept)
            witness = individual.name
            branch.witness_memo[(label, premise.concept)] = witness
        branch.exists_count += 1
        if branch.deferred and branch.exists_count >= self._options.blocking_delay:
            branch.release_deferred()
        return (
            LabelledConcept(label, Exists(role, Singleton(witness))),
            LabelledConcept(witness, filler),
        )

    def _dequeue(self, branch: Branch, instance: RuleInstance) -> None:
        pending = branch.pending
        if pending and pending[0][2] == instance:
            heapq.heappop(pending)
            return
        branch.pending = [entry for entry in pending if entry[2] != instance]
        heapq.heapify(branch.pending)

    def _insert_all(
        self, branch: Branch, facts: Iterable[LabelledConcept]
    ) -> list[LabelledConcept]:
        added = []
        for fact in facts:
            self._ensure_individuals(branch, fact)
            if not branch.add(fact):
                continue
            added.append(fact)
            if not branch.closed:
                self._schedule(branch, fact)
        return added

    @staticmethod
    def _ensure_individuals(branch: Branch, fact: LabelledConcept) -> None:
        names = [fact.label]
        match fact.concept:
            case Singleton(name) | Not(Singleton(name)) | Exists(_, Singleton(name)):
                names.append(name)
        for name in names:
            if name not in branch.individuals:
                branch.register(Origin.NOMINAL, name=name)

    def _schedule(self, branch: Branch, fact: LabelledConcept) -> None:
        """Create the rule instances whose newest premise is `fact`."""
        label, concept = fact.label, fact.concept
        enqueue = branch.enqueue

        if label not in branch.labelled:
            branch.labelled.add(label)
            enqueue(RuleInstance(RuleKind.REFL, (fact,), subject=label))

        match concept:
            case Not(Not(_)):
                enqueue(RuleInstance(RuleKind.NOT_NOT, (fact,)))
            case Not(Or(_, _)):
                enqueue(RuleInstance(RuleKind.NOT_OR, (fact,)))
            case Or(_, _):
                enqueue(RuleInstance(RuleKind.OR, (fact,)))
            case Not(Singleton(other)) if other != label:
                enqueue(RuleInstance(RuleKind.NOT_SYM, (fact,)))
            case Singleton(other) if other == label:
                self._schedule_domain_element(branch, fact)
            case Singleton(other):
                enqueue(RuleInstance(RuleKind.SYM, (fact,)))
                for known in branch.concepts_of(other):
                    enqueue(RuleInstance(RuleKind.MON, (fact, LabelledConcept(other, known))))
            case Exists(role, Singleton(other)):
                for filler in branch.neg_exists.get((label, role), ()):
                    negative = LabelledConcept(label, Not(Exists(role, filler)))
                    enqueue(RuleInstance(RuleKind.NOT_EXISTS, (negative, fact)))
                for filler in branch.neg_exists_inv.get((other, role), ()):
                    negative = LabelledConcept(other, Not(Exists(Inverse(role), filler)))
                    enqueue(RuleInstance(RuleKind.NOT_EXISTS_INV, (negative, fact)))
                match role:
                    case RoleOr():
                        enqueue(RuleInstance(RuleKind.EXISTS_OR, (fact,)))
                    case Inverse():
                        enqueue(RuleInstance(RuleKind.EXISTS_INV, (fact,)))
                    case RoleNot():
                        enqueue(RuleInstance(RuleKind.EXISTS_NOT, (fact,)))
                    case Id():
                        enqueue(RuleInstance(RuleKind.EXISTS_ID, (fact,)))
            case Exists(_, _):
                enqueue(RuleInstance(RuleKind.EXISTS, (fact,)))
            case Not(Exists(role, _)):
                for other in branch.links_from.get((label, role), ()):
                    link = LabelledConcept(label, Exists(role, Singleton(other)))
                    enqueue(RuleInstance(RuleKind.NOT_EXISTS, (fact, link)))
                if isinstance(role, Inverse):
                    for other in branch.links_to.get((label, role.operand), ()):
                        link = LabelledConcept(other, Exists(role.operand, Singleton(label)))
                        enqueue(RuleInstance(RuleKind.NOT_EXISTS_INV, (fact, link)))
                match role:
                    case RoleOr():
                        enqueue(RuleInstance(RuleKind.NOT_EXISTS_OR, (fact,)))
                    case Id():
                        enqueue(RuleInstance(RuleKind.NOT_EXISTS_ID, (fact,)))
                    case RoleNot():
                        for element in branch.domain:
                            domain_fact = LabelledConcept(element, Singleton(element))
                            enqueue(RuleInstance(RuleKind.NOT_EXISTS_NOT, (fact, domain_fact)))

        for other in branch.eq_into.get(label, ()):
            enqueue(RuleInstance(RuleKind.MON, (LabelledConcept(other, Singleton(label)), fact)))

    def _schedule_domain_element(self, branch: Branch, fact: LabelledConcept) -> None:
        label = fact.label
        for window_label, role, filler in branch.windows:
            window = LabelledConcept(window_label, Not(Exists(RoleNot(role), filler)))
            branch.enqueue(RuleInstance(RuleKind.NOT_EXISTS_NOT, (window, fact)))
        if not self._options.blocking:
            return
        index = branch.index_of(label)
        for element in branch.domain:
            if element == label:
                continue
            element_fact = LabelledConcept(element, Singleton(element))
            pair = (element_fact, fact) if branch.index_of(element) < index else (fact, element_fact)
            instance = RuleInstance(RuleKind.UB, pair)
            if branch.exists_count < self._options.blocking_delay:
                branch.defer(instance)
            else:
                branch.enqueue(instance)

    def _emit(self, event: TraceEvent) -> None:
        if self._trace is not None:
            self._trace.record(event)

    def _emit_clash(self, branch: Branch) -> None:
        if branch.closed and branch.clash is not None:
            self._emit(
                TraceEvent(
                    TraceEventKind.CLASH,
                    branch.branch_id,
                    rule=RuleKind.CLASH,
                    premises=branch.clash,
                )
            )


_default_engine = TableauEngine()


def init(concept: Concept) -> Branch:
    return _default_engine.init(concept)


def apply(branch: Branch, instance: RuleInstance) -> list[Branch]:
    return _default_engine.apply(branch, instance)
