"""Value objects for the ALBO^id tableau domain."""
from src.domain.value_objects.calculus_options import CalculusOptions
from src.domain.value_objects.expressions import Concept, Expression, Role
from src.domain.value_objects.labelled_concept import Individual, LabelledConcept, Origin
from src.domain.value_objects.printing import print_concept, print_role
from src.domain.value_objects.rule_kind import RuleInstance, RuleKind
from src.domain.value_objects.strategy import (
    AvoidHugeBranch,
    BreadthFirst,
    IterativeDeepening,
    Limits,
    Strategy,
    StrategyName,
    strategy_for,
)

__all__ = [
    "CalculusOptions",
    "Concept",
    "Expression",
    "Role",
    "Individual",
    "LabelledConcept",
    "Origin",
    "print_concept",
    "print_role",
    "RuleInstance",
    "RuleKind",
    "AvoidHugeBranch",
    "BreadthFirst",
    "IterativeDeepening",
    "Limits",
    "Strategy",
    "StrategyName",
    "strategy_for",
]
