"""Reasoner Service - runs a problem through normalization, search and model checks."""
from __future__ import annotations

from dataclasses import dataclass

from src.application.model_checker import satisfied
from src.application.normalizer import NormalizedInput, normalize_problem
from src.application.search_service import SearchService
from src.domain.entities.model import Model
from src.domain.entities.problem import Problem
from src.domain.entities.verdict import Satisfiable, Verdict
from src.domain.exceptions import InvariantViolation
from src.domain.value_objects.calculus_options import CalculusOptions
from src.domain.value_objects.expressions import Concept
from src.domain.value_objects.strategy import Limits, Strategy
from src.ports.outbound.logger_port import LoggerPort
from src.ports.outbound.model_finder_port import ModelFinderPort
from src.ports.outbound.model_output_port import ModelOutputPort
from src.ports.outbound.trace_port import TraceSinkPort


@dataclass
class SolveReport:
    """Outcome of one solve run."""

    verdict: Verdict
    normalized: NormalizedInput
    model_path: str | None = None


class ReasonerService:
    """
    Application service for deciding .albo problems.

    Every SAT verdict is checked twice against the problem as written: once
    for the model the search returned, and once more after the model has
    been written out and read back.
    """

    def __init__(
        self,
        logger: LoggerPort,
        model_output: ModelOutputPort,
        model_finder: ModelFinderPort | None = None,
        trace: TraceSinkPort | None = None,
    ):
        """
        Initialize the reasoner service.

        Args:
            logger: Logger for pipeline progress
            model_output: Adapter that persists models of satisfiable problems
            model_finder: Optional brute-force oracle
            trace: Optional sink for derivation events
        """
        self._logger = logger
        self._model_output = model_output
        self._model_finder = model_finder
        self._trace = trace

    def normalize(self, problem: Problem) -> NormalizedInput:
        normalized = normalize_problem(problem)
        self._logger.info(
            "Normalized problem",
            length=normalized.length,
            individuals=normalized.individual_count,
            existentials=normalized.existential_count,
            fresh_roles=len(normalized.fresh_roles),
        )
        return normalized

    def solve(
        self,
        problem: Problem,
        strategy: Strategy,
        limits: Limits | None = None,
        options: CalculusOptions | None = None,
        model_path: str | None = None,
        merge_first: bool = True,
    ) -> SolveReport:
        """
        Decide a problem.

        Args:
            problem: Parsed problem
            strategy: Search strategy
            limits: Resource limits
            options: Calculus options (blocking, blocking delay)
            model_path: Where to write the model of a satisfiable problem
            merge_first: Explore the merge side of (ub) first

        Returns:
            The verdict with the normalized input and the written model path

        Raises:
            EmptyProblem: If the problem has no goal
            InvariantViolation: If a model fails its check against the problem
        """
        normalized = self.normalize(problem)
        search = SearchService(
            logger=self._logger, options=options, trace=self._trace, merge_first=merge_first
        )
        verdict = search.decide(normalized.concept, strategy, limits)
        report = SolveReport(verdict=verdict, normalized=normalized)
        if isinstance(verdict, Satisfiable):
            original = problem.as_concept()
            self._check(verdict.model, original, "extracted model")
            self._logger.info("Model checked", domain_size=verdict.model.size)
            if model_path:
                report.model_path = self._model_output.write(verdict.model, model_path)
                self._check(self._model_output.read(report.model_path), original, "model file")
                self._logger.info("Model written", path=report.model_path)
        return report

    def find_model(self, problem: Problem, max_domain: int) -> Model | None:
        """
        Run the brute-force oracle on a problem.

        Raises:
            InvariantViolation: If no oracle is configured
        """
        if self._model_finder is None:
            raise InvariantViolation("no model finder configured")
        concept = problem.as_concept()
        self._logger.info(
            "Running model finder", finder=self._model_finder.get_name(), max_domain=max_domain
        )
        return self._model_finder.find_model(concept, max_domain)

    @staticmethod
    def _check(model: Model, concept: Concept, what: str) -> None:
        if not satisfied(model, concept):
            raise InvariantViolation(f"{what} does not satisfy the problem")


def create_reasoner(
    logger: LoggerPort,
    trace: TraceSinkPort | None = None,
    model_output: ModelOutputPort | None = None,
) -> ReasonerService:
    """
    Factory function to create a properly configured ReasonerService.

    Args:
        logger: Logger instance to use
        trace: Optional trace sink
        model_output: Model adapter (defaults to ModelFileWriter)

    Returns:
        Configured ReasonerService instance
    """
    from src.adapters.outbound import ModelFileWriter, Z3ModelFinder

    return ReasonerService(
        logger=logger,
        model_output=model_output or ModelFileWriter(),
        model_finder=Z3ModelFinder(logger=logger),
        trace=trace,
    )
