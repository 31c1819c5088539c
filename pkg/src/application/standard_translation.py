"""Standard translation of core concepts into two-variable first-order logic."""
from __future__ import annotations

from dataclasses import dataclass

from src.domain.entities.model import Model
from src.domain.exceptions import NormalizationError, UnboundIndividual
from src.domain.value_objects.expressions import (
    AtomicConcept,
    AtomicRole,
    Concept,
    Exists,
    Id,
    Inverse,
    Not,
    Or,
    Role,
    RoleNot,
    RoleOr,
    Singleton,
)

VARIABLES = ("x", "y")


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Const:
    name: str


FOTerm = Var | Const


@dataclass(frozen=True, slots=True)
class Pred:
    name: str
    args: tuple[FOTerm, ...]


@dataclass(frozen=True, slots=True)
class Equals:
    left: FOTerm
    right: FOTerm


@dataclass(frozen=True, slots=True)
class FNot:
    operand: FOFormula


@dataclass(frozen=True, slots=True)
class FOr:
    left: FOFormula
    right: FOFormula


@dataclass(frozen=True, slots=True)
class FAnd:
    left: FOFormula
    right: FOFormula


@dataclass(frozen=True, slots=True)
class FExists:
    variable: str
    body: FOFormula


FOFormula = Pred | Equals | FNot | FOr | FAnd | FExists


def _other(variable: str) -> str:
    return VARIABLES[1] if variable == VARIABLES[0] else VARIABLES[0]


def st_translate(concept: Concept, variable: str = "x") -> FOFormula:
    """
    ST_x of a core concept; only the variables x and y are ever used.

    Raises:
        NormalizationError: If the concept contains sugared constructors
    """
    free = Var(variable)
    match concept:
        case AtomicConcept(name):
            return Pred(name, (free,))
        case Singleton(individual):
            return Equals(free, Const(individual))
        case Not(operand):
            return FNot(st_translate(operand, variable))
        case Or(left, right):
            return FOr(st_translate(left, variable), st_translate(right, variable))
        case Exists(role, filler):
            bound = _other(variable)
            return FExists(
                bound,
                FAnd(st_translate_role(role, variable, bound), st_translate(filler, bound)),
            )
    raise NormalizationError(f"not a core concept: {concept!r}")


def st_translate_role(role: Role, first: str, second: str) -> FOFormula:
    """ST_xy of a core role."""
    match role:
        case AtomicRole(name):
            return Pred(name, (Var(first), Var(second)))
        case Id():
            return Equals(Var(first), Var(second))
        case RoleOr(left, right):
            return FOr(
                st_translate_role(left, first, second), st_translate_role(right, first, second)
            )
        case RoleNot(operand):
            return FNot(st_translate_role(operand, first, second))
        case Inverse(operand):
            return st_translate_role(operand, second, first)
    raise NormalizationError(f"not a core role: {role!r}")


def formula_size(formula: FOFormula) -> int:
    match formula:
        case Pred() | Equals():
            return 1
        case FNot(operand) | FExists(_, operand):
            return 1 + formula_size(operand)
        case FOr(left, right) | FAnd(left, right):
            return 1 + formula_size(left) + formula_size(right)
    raise TypeError(f"not a formula: {formula!r}")


def variables_of(formula: FOFormula) -> frozenset[str]:
    """Variable names occurring in a formula, bound or free."""
    match formula:
        case Pred(_, args):
            return frozenset(term.name for term in args if isinstance(term, Var))
        case Equals(left, right):
            return frozenset(term.name for term in (left, right) if isinstance(term, Var))
        case FNot(operand):
            return variables_of(operand)
        case FExists(variable, body):
            return variables_of(body) | {variable}
        case FOr(left, right) | FAnd(left, right):
            return variables_of(left) | variables_of(right)
    raise TypeError(f"not a formula: {formula!r}")


def _value(model: Model, term: FOTerm, assignment: dict[str, int]) -> int:
    if isinstance(term, Var):
        return assignment[term.name]
    try:
        return model.individual_map[term.name]
    except KeyError:
        raise UnboundIndividual(term.name) from None


def evaluate(model: Model, formula: FOFormula, assignment: dict[str, int]) -> bool:
    """Truth of a formula in a model under a variable assignment."""
    match formula:
        case Pred(name, (term,)):
            return _value(model, term, assignment) in model.concept(name)
        case Pred(name, (first, second)):
            pair = (_value(model, first, assignment), _value(model, second, assignment))
            return pair in model.role(name)
        case Equals(left, right):
            return _value(model, left, assignment) == _value(model, right, assignment)
        case FNot(operand):
            return not evaluate(model, operand, assignment)
        case FOr(left, right):
            return evaluate(model, left, assignment) or evaluate(model, right, assignment)
        case FAnd(left, right):
            return evaluate(model, left, assignment) and evaluate(model, right, assignment)
        case FExists(variable, body):
            return any(
                evaluate(model, body, {**assignment, variable: element})
                for element in range(model.size)
            )
    raise TypeError(f"not a formula: {formula!r}")


def fo_satisfied(model: Model, concept: Concept) -> bool:
    """Truth of the sentence ∃x.ST_x(C) in the model."""
    return evaluate(model, FExists("x", st_translate(concept, "x")), {})


def print_formula(formula: FOFormula) -> str:
    match formula:
        case Pred(name, args):
            return f"{name}({', '.join(_print_term(term) for term in args)})"
        case Equals(left, right):
            return f"{_print_term(left)} = {_print_term(right)}"
        case FNot(operand):
            return f"~{print_formula(operand)}"
        case FOr(left, right):
            return f"({print_formula(left)} | {print_formula(right)})"
        case FAnd(left, right):
            return f"({print_formula(left)} & {print_formula(right)})"
        case FExists(variable, body):
            return f"exists {variable}. {print_formula(body)}"
    raise TypeError(f"not a formula: {formula!r}")


def _print_term(term: FOTerm) -> str:
    return term.name if isinstance(term, Var) else f"'{term.name}'"
