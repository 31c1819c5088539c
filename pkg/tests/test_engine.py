"""Tests for the tableau engine and branch state."""
import pytest

from src.adapters.inbound.problem_parser import parse_concept
from src.application.search_service import schedule
from src.application.tableau_engine import (
    TableauEngine,
    applicable,
    is_blocked,
    is_fully_expanded,
)
from src.domain.entities.branch import Branch
from src.domain.entities.equality_classes import EqualityClasses
from src.domain.exceptions import RuleNotApplicable
from src.domain.value_objects.calculus_options import CalculusOptions
from src.domain.value_objects.expressions import (
    AtomicConcept,
    AtomicRole,
    Exists,
    Not,
    Or,
    RoleNot,
    RoleOr,
    Singleton,
)
from src.domain.value_objects.labelled_concept import LabelledConcept, Origin
from src.domain.value_objects.rule_kind import RuleInstance, RuleKind
from tests.conftest import ROLE_UNION_WITNESS

A = AtomicConcept("A")
B = AtomicConcept("B")
C = AtomicConcept("C")
Q = AtomicRole("Q")
P = AtomicRole("P")
ROOT = "$a0"


def fact(label: str, concept) -> LabelledConcept:
    return LabelledConcept(label, concept)


def instance_of(branch: Branch, rule: RuleKind) -> RuleInstance:
    return next(instance for instance in applicable(branch) if instance.rule == rule)


def advance_to(engine: TableauEngine, branch: Branch, rule: RuleKind) -> RuleInstance:
    """Apply rules in scheduling order until `rule` is next; single-child rules only."""
    while True:
        instance = engine.select(branch)
        assert instance is not None, f"{rule} never became applicable"
        if instance.rule == rule:
            return instance
        children = engine.apply(branch, instance, reuse_parent=True)
        assert len(children) == 1


def expand_linear(engine: TableauEngine, branch: Branch) -> Branch:
    """Expand a branch that never splits until nothing is applicable."""
    while (instance := engine.select(branch)) is not None:
        children = engine.apply(branch, instance, reuse_parent=True)
        assert len(children) == 1
    return branch


@pytest.fixture
def engine() -> TableauEngine:
    return TableauEngine()


class TestEqualityClasses:
    """Test the union-find over individuals."""

    def test_representative_is_least_index(self):
        """The earliest individual represents its class."""
        classes = EqualityClasses()
        for index, name in enumerate(["x", "y", "z"]):
            classes.add(name, index)
        assert classes.union("z", "y") == "y"
        assert classes.union("z", "x") == "x"
        assert classes.find("y") == "x"
        assert classes.same("y", "z")

    def test_classes_ordered(self):
        """Classes come out ordered by representative, members by index."""
        classes = EqualityClasses()
        for index, name in enumerate(["x", "y", "z", "w"]):
            classes.add(name, index)
        classes.union("w", "y")
        assert classes.classes() == [["x"], ["y", "w"], ["z"]]

    def test_copy_is_independent(self):
        """Merging in a copy leaves the original alone."""
        classes = EqualityClasses()
        classes.add("x", 0)
        classes.add("y", 1)
        clone = classes.copy()
        clone.union("x", "y")
        assert clone.same("x", "y")
        assert not classes.same("x", "y")


class TestInit:
    """Test creation of the root branch."""

    def test_single_fact(self, engine):
        """The root branch holds a0:C and nothing else."""
        branch = engine.init(A)
        assert branch.fact_list() == [fact(ROOT, A)]
        assert branch.step_count == 0
        assert branch.branch_id == "1"
        assert not branch.closed

    def test_role_union_witness_first_line(self, engine):
        """The input concept is the first fact."""
        concept = parse_concept(ROLE_UNION_WITNESS)
        assert engine.init(concept).fact_list()[0] == fact(ROOT, concept)

    def test_nominals_are_domain_elements(self, engine):
        """Named individuals start out with b:{b}."""
        branch = engine.init(Exists(Q, Singleton("b")))
        assert fact("b", Singleton("b")) in branch
        assert branch.individuals["b"].origin == Origin.NOMINAL
        assert branch.index_of(ROOT) < branch.index_of("b")

    def test_contradiction_closes(self, engine):
        """A clash is detected as soon as both facts are present."""
        branch = engine.init(A)
        engine.extend(branch, [fact(ROOT, Not(A))])
        assert branch.closed
        assert branch.clash == (fact(ROOT, A), fact(ROOT, Not(A)))
        assert applicable(branch) == []
        assert engine.select(branch) is None


class TestApplicable:
    """Test rule instance generation and side conditions."""

    def test_double_negation(self, engine):
        """a0:not not A schedules (refl) and (¬¬)."""
        branch = engine.init(Not(Not(A)))
        assert [instance.rule for instance in applicable(branch)] == [
            RuleKind.REFL,
            RuleKind.NOT_NOT,
        ]

    def test_no_exists_on_singleton_filler(self, engine):
        """(∃) never fires on a role link to a named individual."""
        branch = engine.init(Exists(Q, Singleton("b")))
        rules = {instance.rule for instance in applicable(branch)}
        assert RuleKind.EXISTS not in rules

    def test_no_exists_on_blocked_label(self, engine):
        """An individual equal to an earlier one generates no witnesses."""
        branch = engine.init(A)
        later = branch.register(Origin.WITNESS, parent=ROOT).name
        engine.extend(branch, [fact(later, Exists(Q, A)), fact(ROOT, Singleton(later))])
        assert is_blocked(branch, later)
        assert not is_blocked(branch, ROOT)
        rules = {instance.rule for instance in applicable(branch)}
        assert RuleKind.EXISTS not in rules

    def test_fresh_branch_is_unblocked(self, engine):
        """Nothing is blocked before any equality is derived."""
        assert not is_blocked(engine.init(Exists(Q, A)), ROOT)

    def test_satisfied_alternative_is_not_applicable(self, engine):
        """A disjunction with a disjunct already present needs no split."""
        branch = engine.init(A)
        engine.extend(branch, [fact(ROOT, Or(A, B))])
        rules = {instance.rule for instance in applicable(branch)}
        assert RuleKind.OR not in rules


class TestApply:
    """Test rule application."""

    def test_not_or(self, engine):
        """(¬⊔) adds both negated disjuncts to a single child."""
        branch = engine.init(Not(Or(A, B)))
        children = engine.apply(branch, instance_of(branch, RuleKind.NOT_OR))
        assert len(children) == 1
        child = children[0]
        assert fact(ROOT, Not(A)) in child
        assert fact(ROOT, Not(B)) in child
        assert child.step_count == 1
        assert set(branch.facts) <= set(child.facts)
        assert fact(ROOT, Not(A)) not in branch

    def test_exists_creates_witness(self, engine):
        """(∃) links the label to a fresh individual carrying the filler."""
        role = RoleOr(Q, RoleNot(Q))
        branch = engine.init(Exists(role, A))
        child = engine.apply(branch, instance_of(branch, RuleKind.EXISTS))[0]
        assert fact(ROOT, Exists(role, Singleton("$a1"))) in child
        assert fact("$a1", A) in child
        assert child.individuals["$a1"].origin == Origin.WITNESS
        assert child.witness_memo == {(ROOT, Exists(role, A)): "$a1"}

    def test_unrestricted_blocking(self, engine):
        """(ub) splits into a merge child and a distinct child."""
        branch = engine.init(Exists(Q, A))
        instance = advance_to(engine, branch, RuleKind.UB)
        merge, distinct = engine.apply(branch, instance)
        assert (merge.branch_id, distinct.branch_id) == ("1.1", "1.2")
        assert fact(ROOT, Singleton("$a1")) in merge
        assert fact(ROOT, Not(Singleton("$a1"))) in distinct
        assert is_blocked(merge, "$a1")
        assert not is_blocked(distinct, "$a1")

    def test_window_split(self, engine):
        """(¬∃¬) pairs a window with every domain element."""
        branch = engine.init(Not(Exists(RoleNot(Q), A)))
        instance = advance_to(engine, branch, RuleKind.NOT_EXISTS_NOT)
        left, right = engine.apply(branch, instance)
        assert fact(ROOT, Exists(Q, Singleton(ROOT))) in left
        assert fact(ROOT, Not(A)) in right

    def test_siblings_do_not_share_state(self, engine):
        """Expanding one child never shows up in its sibling."""
        branch = engine.init(Or(A, B))
        instance = advance_to(engine, branch, RuleKind.OR)
        left, right = engine.apply(branch, instance)
        engine.extend(left, [fact(ROOT, C)])
        assert fact(ROOT, C) not in right
        assert fact(ROOT, B) not in left

    def test_reuse_parent(self, engine):
        """The first child may take over the parent object."""
        branch = engine.init(Or(A, B))
        instance = advance_to(engine, branch, RuleKind.OR)
        children = engine.apply(branch, instance, reuse_parent=True)
        assert children[0] is branch
        assert branch.branch_id == "1.1"

    def test_instance_applies_once(self, engine):
        """Applying the same instance again is refused."""
        branch = engine.init(Not(Not(A)))
        instance = instance_of(branch, RuleKind.NOT_NOT)
        child = engine.apply(branch, instance)[0]
        with pytest.raises(RuleNotApplicable):
            engine.apply(child, instance)

    def test_premises_must_be_present(self, engine):
        """An instance about facts outside the branch is refused."""
        branch = engine.init(A)
        stray = RuleInstance(RuleKind.NOT_NOT, (fact(ROOT, Not(Not(B))),))
        with pytest.raises(RuleNotApplicable):
            engine.apply(branch, stray)

    def test_no_blocking_option(self):
        """Without blocking no (ub) instance is ever scheduled."""
        engine = TableauEngine(options=CalculusOptions(blocking=False))
        branch = engine.init(Exists(Q, A))
        expand_linear(engine, branch)
        assert fact("$a1", Singleton("$a1")) in branch
        assert all(instance.rule != RuleKind.UB for instance in branch.applied)


class TestExpansion:
    """Test fully expanded branches."""

    def test_not_fully_expanded(self, engine):
        """Pending (¬¬) means work is left."""
        assert not is_fully_expanded(engine.init(Not(Not(A))))

    def test_closed_is_not_fully_expanded(self, engine):
        """Closed branches are not open, so not fully expanded."""
        branch = engine.init(A)
        engine.extend(branch, [fact(ROOT, Not(A))])
        assert not is_fully_expanded(branch)

    def test_merged_branch_expands(self, engine):
        """After a merge the later individual inherits nothing new to witness."""
        branch = engine.init(Exists(Q, A))
        instance = advance_to(engine, branch, RuleKind.UB)
        merge = engine.apply(branch, instance, reuse_parent=True)[0]
        expand_linear(engine, merge)
        assert is_fully_expanded(merge)
        assert fact(ROOT, A) in merge
        assert "$a2" not in merge.individuals

    def test_equality_is_an_equivalence(self, engine):
        """Derived equalities are reflexive, symmetric and transitive."""
        branch = engine.init(Exists(Q, A))
        instance = advance_to(engine, branch, RuleKind.UB)
        merge = engine.apply(branch, instance, reuse_parent=True)[0]
        expand_linear(engine, merge)
        pairs = {
            (f.label, f.concept.individual)
            for f in merge.facts
            if isinstance(f.concept, Singleton)
        }
        for element in merge.domain:
            assert (element, element) in pairs
        for a, b in pairs:
            assert (b, a) in pairs
            for c, d in pairs:
                if b == c:
                    assert (a, d) in pairs


class TestSchedule:
    """Test the rule priority order."""

    def test_blocking_before_exists(self, engine):
        """(ub) goes before any pending (∃)."""
        branch = engine.init(Exists(Q, A))
        advance_to(engine, branch, RuleKind.UB)
        engine.extend(branch, [fact("$a1", Exists(P, B))])
        assert any(instance.rule == RuleKind.EXISTS for instance in applicable(branch))
        assert schedule(branch).rule == RuleKind.UB

    def test_only_exists(self, engine):
        """(∃) is chosen when nothing else is left."""
        branch = engine.init(Exists(Q, A))
        advance_to(engine, branch, RuleKind.EXISTS)
        assert schedule(branch).rule == RuleKind.EXISTS

    def test_oldest_first_within_tier(self, engine):
        """Of two disjunctions the earlier one is split first."""
        branch = engine.init(C)
        engine.extend(branch, [fact(ROOT, Or(A, B)), fact(ROOT, Or(B, A))])
        advance_to(engine, branch, RuleKind.OR)
        assert schedule(branch).premises == (fact(ROOT, Or(A, B)),)

    def test_nothing_to_schedule(self, engine):
        """A fully expanded branch has no next instance."""
        branch = expand_linear(engine, engine.init(A))
        with pytest.raises(RuleNotApplicable):
            schedule(branch)
