"""Domain layer for the ALBO^id tableau."""
from src.domain.entities import Branch, Model, Problem, Verdict
from src.domain.value_objects import Concept, LabelledConcept, Role, RuleKind

__all__ = ["Branch", "Model", "Problem", "Verdict", "Concept", "Role", "LabelledConcept", "RuleKind"]
