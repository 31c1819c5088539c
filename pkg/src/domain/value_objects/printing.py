"""Printer for the concrete .albo syntax.

The printer never simplifies: what it prints is exactly the tree it was given,
so derivation traces show the engine's facts verbatim. Binary operators are
always parenthesized, which keeps the output re-parseable without precedence
rules.
"""
from __future__ import annotations

from src.domain.value_objects.expressions import (
    And,
    Assertion,
    AtomicConcept,
    AtomicRole,
    Bottom,
    BottomRole,
    Box,
    Concept,
    Cross,
    Div,
    DomRestrict,
    Exists,
    Forall,
    Id,
    Incl,
    Inverse,
    LeftCyl,
    Not,
    Or,
    RanRestrict,
    RightCyl,
    RIncl,
    Role,
    RoleAnd,
    RoleAssertion,
    RoleNot,
    RoleOr,
    Singleton,
    Test,
    Top,
    TopRole,
    Window,
)


def print_concept(concept: Concept) -> str:
    match concept:
        case AtomicConcept(name):
            return name
        case Singleton(individual):
            return f"{{{individual}}}"
        case Top():
            return "top"
        case Bottom():
            return "bot"
        case Not(operand):
            return f"not {print_concept(operand)}"
        case Or(left, right):
            return f"({print_concept(left)} or {print_concept(right)})"
        case And(left, right):
            return f"({print_concept(left)} and {print_concept(right)})"
        case Exists(role, filler):
            return f"some {print_role(role)} . {print_concept(filler)}"
        case Forall(role, filler):
            return f"all {print_role(role)} . {print_concept(filler)}"
        case Window(role, filler):
            return f"win {print_role(role)} . {print_concept(filler)}"
        case Box(operand):
            return f"box {print_concept(operand)}"
        case Assertion(individual, inner):
            return f"[{individual} : {print_concept(inner)}]"
        case RoleAssertion(subject, obj, role):
            return f"[({subject}, {obj}) : {print_role(role)}]"
        case Incl(sub, sup):
            return f"[{print_concept(sub)} <= {print_concept(sup)}]"
        case RIncl(sub, sup):
            return f"[role {print_role(sub)} <= {print_role(sup)}]"
    raise TypeError(f"not a concept: {concept!r}")


def print_role(role: Role) -> str:
    match role:
        case AtomicRole(name):
            return name
        case Id():
            return "id"
        case TopRole():
            return "topr"
        case BottomRole():
            return "botr"
        case Div():
            return "div"
        case RoleNot(operand):
            return f"not {print_role(operand)}"
        case Inverse(operand):
            return f"inv({print_role(operand)})"
        case RoleOr(left, right):
            return f"({print_role(left)} or {print_role(right)})"
        case RoleAnd(left, right):
            return f"({print_role(left)} and {print_role(right)})"
        case Test(concept):
            return f"test({print_concept(concept)})"
        case DomRestrict(inner, concept):
            return f"domr({print_role(inner)}, {print_concept(concept)})"
        case RanRestrict(inner, concept):
            return f"ranr({print_role(inner)}, {print_concept(concept)})"
        case LeftCyl(concept):
            return f"lcyl({print_concept(concept)})"
        case RightCyl(concept):
            return f"rcyl({print_concept(concept)})"
        case Cross(left, right):
            return f"cross({print_concept(left)}, {print_concept(right)})"
    raise TypeError(f"not a role: {role!r}")
