"""Randomized cross-validation of the tableau against the brute-force oracle.

These suites are slow; deselect them with -m "not slow".
"""
from dataclasses import replace

import pytest

from src.adapters.inbound.problem_parser import parse_concept
from src.adapters.outbound.trace_recorder import TraceRecorder
from src.adapters.outbound.trace_renderers import render_trace
from src.adapters.outbound.z3_model_finder import Z3ModelFinder
from src.application.model_checker import element_assignment, eval_concept, satisfied
from src.application.normalizer import normalize_concept, normalize_problem
from src.application.search_service import SearchService
from src.application.tableau_engine import TableauEngine
from src.domain.entities.branch import Branch
from src.domain.entities.model import Model
from src.domain.entities.problem import Problem
from src.domain.entities.trace import TraceEvent, TraceEventKind
from src.domain.entities.verdict import ResourceLimit, Satisfiable, Unsatisfiable
from src.domain.value_objects.expressions import Concept
from src.domain.value_objects.rule_kind import RuleKind
from src.domain.value_objects.strategy import AvoidHugeBranch, IterativeDeepening, Limits
from tests.conftest import GLOBAL_EFFECT
from tests.generators import concept_with_restriction, small_core_concept

pytestmark = pytest.mark.slow

ORACLE_DOMAIN = 4
ENCODING_DOMAIN = 3
LIMITS = Limits(max_total_steps=100_000)


@pytest.fixture
def finder() -> Z3ModelFinder:
    return Z3ModelFinder(canonical=False)


def _holds(model: Model, mapping: dict[str, int], facts) -> bool:
    labelled = replace(model, individual_map={**model.individual_map, **mapping})
    return all(mapping[fact.label] in eval_concept(labelled, fact.concept) for fact in facts)


def _closed_under(events: list[TraceEvent], rule: RuleKind, child_index: int) -> bool:
    """True if some clash lies below the given child of a fork made by rule."""
    forks = {
        event.branch_id: event
        for event in events
        if event.kind == TraceEventKind.RULE and event.is_fork
    }
    for clash in (event for event in events if event.kind == TraceEventKind.CLASH):
        parts = clash.branch_id.split(".")
        for end in range(2, len(parts) + 1):
            fork = forks.get(".".join(parts[:end]))
            if fork is not None and fork.rule == rule and fork.child_index == child_index:
                return True
    return False


def _follow_model(engine: TableauEngine, concept: Concept, model: Model, max_steps: int) -> int:
    """
    Walk down the tableau, always taking a child whose new facts are true in the model.

    Returns the number of rules applied; fails if some rule leaves no such child.
    """
    branch = engine.init(concept)
    mapping = dict(model.individual_map)
    mapping[branch.fact_list()[0].label] = min(eval_concept(model, concept))
    assert _holds(model, mapping, branch.facts)
    for step in range(max_steps):
        instance = engine.select(branch)
        if instance is None:
            return step
        before = set(branch.facts)
        children = engine.apply(branch, instance)
        branch = _true_child(model, mapping, before, children, instance.rule)
        assert not branch.closed, f"{instance} led into a closed branch"
    return max_steps


def _true_child(
    model: Model, mapping: dict[str, int], before: set, children: list[Branch], rule: RuleKind
) -> Branch:
    for child in children:
        new = [fact for fact in child.facts if fact not in before]
        fresh = {fact.label for fact in new} - mapping.keys()
        if not fresh:
            if _holds(model, mapping, new):
                return child
            continue
        assert rule == RuleKind.EXISTS and len(fresh) == 1
        (witness,) = fresh
        for element in range(model.size):
            if _holds(model, {**mapping, witness: element}, new):
                mapping[witness] = element
                return child
    raise AssertionError(f"no child of {rule.symbol} is true in the model")


class TestOracleAgreement:
    """The tableau and the oracle agree on random core concepts."""

    def test_random_core_concepts(self, rng, logger, finder):
        """Verdicts match the oracle and every open branch reflects its model."""
        search = SearchService(logger=logger)
        decided = 0
        for _ in range(500):
            concept = small_core_concept(rng)
            verdict = search.decide(concept, IterativeDeepening(), LIMITS)
            if isinstance(verdict, ResourceLimit):
                verdict = search.decide(concept, AvoidHugeBranch(), LIMITS)
            oracle_model = finder.find_model(concept, ORACLE_DOMAIN)
            if isinstance(verdict, ResourceLimit):
                assert oracle_model is None, f"{verdict.label} on {concept}, which has a model"
                continue
            decided += 1
            if isinstance(verdict, Unsatisfiable):
                assert oracle_model is None, f"oracle found a model of {concept}"
                continue
            assert satisfied(verdict.model, concept)
            if verdict.model.size <= ORACLE_DOMAIN:
                assert oracle_model is not None
            element_of = element_assignment(verdict.branch)
            assert _holds(verdict.model, element_of, verdict.branch.facts)
        assert decided >= 400

    def test_merge_order_does_not_change_verdicts(self, rng, logger):
        """Distinct-first exploration reaches the same verdicts."""
        merge_first = SearchService(logger=logger)
        distinct_first = SearchService(logger=logger, merge_first=False)
        for _ in range(100):
            concept = small_core_concept(rng, 8)
            first = merge_first.decide(concept, IterativeDeepening(), LIMITS)
            second = distinct_first.decide(concept, IterativeDeepening(), LIMITS)
            if ResourceLimit in (type(first), type(second)):
                continue
            assert first.label == second.label

    def test_global_effect(self, logger, finder):
        """Role negation constrains elements far from the root."""
        recorder = TraceRecorder()
        search = SearchService(logger=logger, trace=recorder)
        concept = parse_concept(GLOBAL_EFFECT)
        verdict = search.decide(normalize_concept(concept).concept, IterativeDeepening(), LIMITS)
        assert isinstance(verdict, Satisfiable)
        assert satisfied(verdict.model, concept)
        assert finder.find_model(concept, ORACLE_DOMAIN) is not None
        source = render_trace(recorder.events, "dot")
        assert "label=merge" in source
        assert "label=distinct" in source
        assert _closed_under(recorder.events, RuleKind.NOT_EXISTS_NOT, 0)


class TestEncoding:
    """The fresh-role encoding preserves satisfiability for each domain size."""

    def test_equisatisfiable(self, rng, finder):
        for _ in range(100):
            concept = concept_with_restriction(rng)
            encoded = normalize_problem(Problem(goals=[concept])).concept
            for size in range(1, ENCODING_DOMAIN + 1):
                original = finder.find_model(concept, size) is not None
                assert original == (finder.find_model(encoded, size) is not None), concept


class TestRuleSoundness:
    """Every rule keeps some child true in a model of the input."""

    def test_follow_the_model(self, rng, finder):
        engine = TableauEngine()
        followed = 0
        while followed < 100:
            concept = small_core_concept(rng)
            model = finder.find_model(concept, ORACLE_DOMAIN)
            if model is None:
                continue
            _follow_model(engine, concept, model, max_steps=300)
            followed += 1


class TestAvoidHugeBranch:
    """With the computed step bound no branch is ever cut."""

    def test_bound_is_never_reached(self, rng, logger):
        search = SearchService(logger=logger)
        checked = 0
        for _ in range(200):
            concept = small_core_concept(rng)
            verdict = search.decide(concept, AvoidHugeBranch(), LIMITS)
            stats = verdict.statistics
            if isinstance(verdict, ResourceLimit) or stats.branch_cap is None:
                continue
            checked += 1
            assert stats.abandoned == 0
            assert stats.deepest_branch <= stats.branch_cap
        assert checked > 0
