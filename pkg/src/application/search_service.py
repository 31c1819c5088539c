"""Search Service - drives tableau expansion to a verdict.

Within a branch, rule instances are applied in the order the branch queue
hands them out: clash, then (ub), then the other non-branching rules, then
branching rules, then (∃), oldest first within each tier. This makes every
applicable instance fire eventually and puts all (ub) applications before
any (∃) application. The strategies below only decide which branch is
worked on next and how long a branch may grow.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from src.application.bounds import default_branch_cap
from src.application.model_checker import extract_model, satisfied
from src.application.tableau_engine import TableauEngine, applicable
from src.domain.entities.branch import Branch
from src.domain.entities.trace import TraceEventKind
from src.domain.entities.verdict import (
    ResourceLimit,
    Satisfiable,
    SearchStatistics,
    Unsatisfiable,
    Verdict,
)
from src.domain.exceptions import InvariantViolation, RuleNotApplicable
from src.domain.value_objects.calculus_options import CalculusOptions
from src.domain.value_objects.expressions import (
    Concept,
    count_individuals,
    existential_subterms,
    length,
)
from src.domain.value_objects.rule_kind import RuleInstance, RuleKind
from src.domain.value_objects.strategy import (
    AvoidHugeBranch,
    BreadthFirst,
    IterativeDeepening,
    Limits,
    Strategy,
)
from src.ports.outbound.logger_port import LoggerPort
from src.ports.outbound.trace_port import TraceSinkPort


def schedule(branch: Branch) -> RuleInstance:
    """
    The rule instance a branch applies next.

    Raises:
        RuleNotApplicable: If nothing is applicable
    """
    live = applicable(branch)
    if not live:
        raise RuleNotApplicable(f"no rule is applicable in branch {branch.branch_id}")
    return live[0]


class _Outcome(str, Enum):
    OPEN = "open"
    CLOSED = "closed"
    CUT = "cut"
    SPLIT = "split"
    PAUSED = "paused"


@dataclass
class _Expansion:
    outcome: _Outcome
    children: list[Branch] = field(default_factory=list)
    rule: RuleKind | None = None


class _BudgetExhausted(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class _Budget:
    """Global step and wall-clock accounting for one decision run."""

    def __init__(self, limits: Limits):
        self._limits = limits
        self._started = time.monotonic()
        self.steps = 0

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._started

    def charge(self) -> None:
        if self._limits.max_total_steps is not None and self.steps >= self._limits.max_total_steps:
            raise _BudgetExhausted(f"max total steps {self._limits.max_total_steps}")
        if self._limits.wall_clock is not None and self.elapsed >= self._limits.wall_clock:
            raise _BudgetExhausted(f"timeout {self._limits.wall_clock:g}s")
        self.steps += 1


class SearchService:
    """
    Decides satisfiability of normalized concepts.

    All strategies explore the merge side of (ub) and the left disjunct
    first unless merge_first is switched off, in which case the distinct
    side of (ub) goes first.
    """

    def __init__(
        self,
        logger: LoggerPort,
        options: CalculusOptions | None = None,
        trace: TraceSinkPort | None = None,
        merge_first: bool = True,
    ):
        """
        Initialize the search service.

        Args:
            logger: Logger for strategy progress
            options: Calculus options handed to the engine
            trace: Optional sink for derivation events
            merge_first: Explore the merge child of (ub) before the distinct child
        """
        self._logger = logger
        self._options = options or CalculusOptions()
        self._trace = trace
        self._engine = TableauEngine(options=self._options, trace=trace)
        self._merge_first = merge_first

    def decide(
        self, concept: Concept, strategy: Strategy, limits: Limits | None = None
    ) -> Verdict:
        """
        Decide satisfiability of a normalized concept.

        Args:
            concept: Core syntax with inverse on atomic roles only
            strategy: Branch selection strategy
            limits: Resource limits (default: none)

        Returns:
            Satisfiable with a checked model, Unsatisfiable, or ResourceLimit

        Raises:
            InvariantViolation: If the model read off an open branch does not satisfy the concept
        """
        limits = limits or Limits()
        statistics = SearchStatistics()
        budget = _Budget(limits)
        self._logger.info(
            f"Starting search ({strategy.name.display_name})",
            strategy=strategy.name.value,
            blocking=self._options.blocking,
            blocking_delay=self._options.blocking_delay,
        )
        try:
            match strategy:
                case BreadthFirst():
                    verdict = self._breadth_first(concept, strategy, limits, budget, statistics)
                case IterativeDeepening():
                    verdict = self._iterative_deepening(
                        concept, strategy, limits, budget, statistics
                    )
                case AvoidHugeBranch():
                    verdict = self._avoid_huge_branch(concept, limits, budget, statistics)
                case _:
                    raise ValueError(f"unknown strategy: {strategy!r}")
        except _BudgetExhausted as exc:
            verdict = ResourceLimit(exc.reason, statistics)
        statistics.steps = budget.steps
        statistics.elapsed_seconds = budget.elapsed
        self._logger.info("Search finished", verdict=verdict.label, **statistics.as_dict())
        return verdict

    # Strategies

    def _breadth_first(
        self,
        concept: Concept,
        strategy: BreadthFirst,
        limits: Limits,
        budget: _Budget,
        statistics: SearchStatistics,
    ) -> Verdict:
        cap = limits.max_steps_per_branch
        statistics.branch_cap = cap
        statistics.iterations = 1
        queue = deque([self._start(concept, statistics)])
        while queue:
            branch = queue.popleft()
            expansion = self._expand(branch, cap, budget, quantum=strategy.quantum)
            if expansion.outcome == _Outcome.PAUSED:
                queue.append(branch)
            elif expansion.outcome == _Outcome.SPLIT:
                statistics.branches += len(expansion.children) - 1
                queue.extend(self._ordered(expansion))
            elif self._settle(branch, expansion, cap, statistics):
                return self._satisfiable(branch, concept, statistics)
        if statistics.abandoned:
            return ResourceLimit(f"max branch steps {cap}", statistics)
        return Unsatisfiable(statistics)

    def _iterative_deepening(
        self,
        concept: Concept,
        strategy: IterativeDeepening,
        limits: Limits,
        budget: _Budget,
        statistics: SearchStatistics,
    ) -> Verdict:
        user_cap = limits.max_steps_per_branch
        depth = strategy.initial_depth
        while True:
            cap = depth if user_cap is None else min(depth, user_cap)
            statistics.iterations += 1
            statistics.branch_cap = cap
            if self._trace is not None:
                self._trace.reset()
            self._logger.info("Starting iteration", iteration=statistics.iterations, cap=cap)
            found, cut = self._depth_first(concept, cap, budget, statistics)
            if found is not None:
                return self._satisfiable(found, concept, statistics)
            if not cut:
                return Unsatisfiable(statistics)
            if user_cap is not None and cap >= user_cap:
                return ResourceLimit(f"max branch steps {user_cap}", statistics)
            depth += strategy.increment

    def _avoid_huge_branch(
        self,
        concept: Concept,
        limits: Limits,
        budget: _Budget,
        statistics: SearchStatistics,
    ) -> Verdict:
        cap = limits.max_steps_per_branch
        user_cap = cap is not None
        if cap is None:
            cap = default_branch_cap(
                length(concept),
                count_individuals(concept),
                len(existential_subterms(concept)),
                self._options,
            )
            if cap is None:
                self._logger.warning("Step bound unavailable, searching without a branch cap")
        statistics.branch_cap = cap
        statistics.iterations = 1
        found, cut = self._depth_first(concept, cap, budget, statistics)
        if found is not None:
            return self._satisfiable(found, concept, statistics)
        if cut and user_cap:
            return ResourceLimit(f"max branch steps {cap}", statistics)
        return Unsatisfiable(statistics)

    # Branch handling

    def _start(self, concept: Concept, statistics: SearchStatistics) -> Branch:
        statistics.branches += 1
        return self._engine.init(concept)

    def _depth_first(
        self,
        concept: Concept,
        cap: int | None,
        budget: _Budget,
        statistics: SearchStatistics,
    ) -> tuple[Branch | None, int]:
        """Explore the tableau depth first; returns an open branch if any and the number cut."""
        stack = [self._start(concept, statistics)]
        cut = 0
        while stack:
            branch = stack.pop()
            expansion = self._expand(branch, cap, budget)
            if expansion.outcome == _Outcome.SPLIT:
                statistics.branches += len(expansion.children) - 1
                stack.extend(reversed(self._ordered(expansion)))
                continue
            if self._settle(branch, expansion, cap, statistics):
                return branch, cut
            if expansion.outcome == _Outcome.CUT:
                cut += 1
        return None, cut

    def _expand(
        self,
        branch: Branch,
        cap: int | None,
        budget: _Budget,
        quantum: int | None = None,
    ) -> _Expansion:
        """Apply rules to one branch until it ends, splits, hits the cap or uses up its quantum."""
        applied = 0
        while True:
            if branch.closed:
                return _Expansion(_Outcome.CLOSED)
            instance = self._engine.select(branch)
            if instance is None:
                return _Expansion(_Outcome.OPEN)
            if cap is not None and branch.step_count >= cap:
                return _Expansion(_Outcome.CUT)
            if quantum is not None and applied >= quantum:
                return _Expansion(_Outcome.PAUSED)
            budget.charge()
            children = self._engine.apply(branch, instance, reuse_parent=True)
            applied += 1
            if len(children) > 1:
                return _Expansion(_Outcome.SPLIT, children, instance.rule)

    def _ordered(self, expansion: _Expansion) -> list[Branch]:
        """Children in exploration order."""
        if expansion.rule == RuleKind.UB and not self._merge_first:
            return list(reversed(expansion.children))
        return expansion.children

    def _settle(
        self,
        branch: Branch,
        expansion: _Expansion,
        cap: int | None,
        statistics: SearchStatistics,
    ) -> bool:
        """Record a finished branch; True if it is open."""
        statistics.deepest_branch = max(statistics.deepest_branch, branch.step_count)
        match expansion.outcome:
            case _Outcome.OPEN:
                statistics.open += 1
                self._engine.finish(branch, TraceEventKind.OPEN)
                self._logger.debug("Open branch", branch=branch.branch_id, steps=branch.step_count)
                return True
            case _Outcome.CLOSED:
                statistics.closed += 1
                self._logger.debug("Closed branch", branch=branch.branch_id)
            case _Outcome.CUT:
                statistics.abandoned += 1
                self._engine.finish(branch, TraceEventKind.CUT, note=f"step cap {cap} reached")
                self._logger.debug("Abandoned branch", branch=branch.branch_id, cap=cap)
        return False

    def _satisfiable(
        self, branch: Branch, concept: Concept, statistics: SearchStatistics
    ) -> Satisfiable:
        model = extract_model(branch)
        if not satisfied(model, concept):
            raise InvariantViolation(
                f"model extracted from branch {branch.branch_id} does not satisfy the input"
            )
        return Satisfiable(
            model=model, branch_id=branch.branch_id, branch=branch, statistics=statistics
        )


def create_search_service(
    logger: LoggerPort | None = None,
    options: CalculusOptions | None = None,
    trace: TraceSinkPort | None = None,
) -> SearchService:
    """
    Factory function to create a SearchService with default adapters.

    Args:
        logger: Logger (default: ConsoleLogger at WARNING)
        options: Calculus options
        trace: Optional trace sink

    Returns:
        Configured SearchService instance
    """
    from src.adapters.outbound.console_logger import ConsoleLogger

    return SearchService(logger=logger or ConsoleLogger(), options=options, trace=trace)
