"""Abstract syntax of ALBO^id concepts and roles.

All nodes are immutable and hashable, so they can be shared between tableau
branches and used as keys in fact sets.

Core concepts are AtomicConcept, Singleton, Not, Or and Exists. Core roles are
AtomicRole, Id, RoleOr, RoleNot and Inverse. Everything else is syntactic sugar
that the normalizer rewrites away.
"""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

# Concepts


@dataclass(frozen=True, slots=True)
class AtomicConcept:
    name: str


@dataclass(frozen=True, slots=True)
class Singleton:
    individual: str


@dataclass(frozen=True, slots=True)
class Not:
    operand: Concept


@dataclass(frozen=True, slots=True)
class Or:
    left: Concept
    right: Concept


@dataclass(frozen=True, slots=True)
class Exists:
    role: Role
    filler: Concept


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bottom:
    pass


@dataclass(frozen=True, slots=True)
class And:
    left: Concept
    right: Concept


@dataclass(frozen=True, slots=True)
class Forall:
    role: Role
    filler: Concept


@dataclass(frozen=True, slots=True)
class Window:
    """Sufficiency operator: every element of the filler is a role successor."""

    role: Role
    filler: Concept


@dataclass(frozen=True, slots=True)
class Box:
    """Universal modality."""

    operand: Concept


@dataclass(frozen=True, slots=True)
class Assertion:
    individual: str
    concept: Concept


@dataclass(frozen=True, slots=True)
class RoleAssertion:
    subject: str
    object: str
    role: Role


@dataclass(frozen=True, slots=True)
class Incl:
    sub: Concept
    sup: Concept


@dataclass(frozen=True, slots=True)
class RIncl:
    sub: Role
    sup: Role


# Roles


@dataclass(frozen=True, slots=True)
class AtomicRole:
    name: str


@dataclass(frozen=True, slots=True)
class Id:
    pass


@dataclass(frozen=True, slots=True)
class RoleOr:
    left: Role
    right: Role


@dataclass(frozen=True, slots=True)
class RoleNot:
    operand: Role


@dataclass(frozen=True, slots=True)
class Inverse:
    operand: Role


@dataclass(frozen=True, slots=True)
class TopRole:
    pass


@dataclass(frozen=True, slots=True)
class BottomRole:
    pass


@dataclass(frozen=True, slots=True)
class RoleAnd:
    left: Role
    right: Role


@dataclass(frozen=True, slots=True)
class Div:
    """Diversity role: all pairs of distinct elements."""


@dataclass(frozen=True, slots=True)
class Test:
    """Test role C?: the identity restricted to C."""

    __test__ = False

    concept: Concept


@dataclass(frozen=True, slots=True)
class DomRestrict:
    role: Role
    concept: Concept


@dataclass(frozen=True, slots=True)
class RanRestrict:
    role: Role
    concept: Concept


@dataclass(frozen=True, slots=True)
class LeftCyl:
    """Left cylindrification: C x Domain."""

    concept: Concept


@dataclass(frozen=True, slots=True)
class RightCyl:
    """Right cylindrification: Domain x C."""

    concept: Concept


@dataclass(frozen=True, slots=True)
class Cross:
    left: Concept
    right: Concept


Concept = (
    AtomicConcept
    | Singleton
    | Not
    | Or
    | Exists
    | Top
    | Bottom
    | And
    | Forall
    | Window
    | Box
    | Assertion
    | RoleAssertion
    | Incl
    | RIncl
)

Role = (
    AtomicRole
    | Id
    | RoleOr
    | RoleNot
    | Inverse
    | TopRole
    | BottomRole
    | RoleAnd
    | Div
    | Test
    | DomRestrict
    | RanRestrict
    | LeftCyl
    | RightCyl
    | Cross
)

Expression = Concept | Role

CORE_CONCEPT_TYPES = (AtomicConcept, Singleton, Not, Or, Exists)
CORE_ROLE_TYPES = (AtomicRole, Id, RoleOr, RoleNot, Inverse)
RESTRICTION_ROLE_TYPES = (Test, DomRestrict, RanRestrict, LeftCyl, RightCyl, Cross)


def children(node: Expression) -> tuple[Expression, ...]:
    """Direct subexpressions of a node, left to right."""
    match node:
        case Not(operand) | Box(operand) | RoleNot(operand) | Inverse(operand):
            return (operand,)
        case Or(left, right) | And(left, right) | RoleOr(left, right) | RoleAnd(left, right):
            return (left, right)
        case Exists(role, filler) | Forall(role, filler) | Window(role, filler):
            return (role, filler)
        case Assertion(_, concept):
            return (concept,)
        case RoleAssertion(_, _, role):
            return (role,)
        case Incl(sub, sup) | RIncl(sub, sup):
            return (sub, sup)
        case Test(concept) | LeftCyl(concept) | RightCyl(concept):
            return (concept,)
        case DomRestrict(role, concept) | RanRestrict(role, concept):
            return (role, concept)
        case Cross(left, right):
            return (left, right)
        case _:
            return ()


def subterms(node: Expression) -> Iterator[Expression]:
    """All subexpressions, the node itself first (pre-order)."""
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(children(current)))


def length(node: Expression) -> int:
    """Length in symbols: every operator, symbol occurrence and individual occurrence counts 1."""
    own = 1
    match node:
        case Assertion():
            own = 2
        case RoleAssertion():
            own = 3
    return own + sum(length(child) for child in children(node))


def individuals(node: Expression) -> tuple[str, ...]:
    """Distinct individual names in order of first occurrence."""
    seen: dict[str, None] = {}
    for term in subterms(node):
        match term:
            case Singleton(name) | Assertion(name, _):
                seen.setdefault(name)
            case RoleAssertion(subject, obj, _):
                seen.setdefault(subject)
                seen.setdefault(obj)
    return tuple(seen)


def count_individuals(node: Expression) -> int:
    """Number of distinct individuals plus one for the tableau's root label."""
    return len(individuals(node)) + 1


def concept_symbols(node: Expression) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for term in subterms(node):
        if isinstance(term, AtomicConcept):
            seen.setdefault(term.name)
    return tuple(seen)


def role_symbols(node: Expression) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for term in subterms(node):
        if isinstance(term, AtomicRole):
            seen.setdefault(term.name)
    return tuple(seen)


def existential_subterms(node: Expression) -> frozenset[Exists]:
    """Distinct existential restrictions; their count is n' in the step bound."""
    return frozenset(term for term in subterms(node) if isinstance(term, Exists))


def is_core(node: Expression) -> bool:
    """True when only core constructors occur and inverse wraps atomic roles only."""
    for term in subterms(node):
        if not isinstance(term, CORE_CONCEPT_TYPES + CORE_ROLE_TYPES):
            return False
        if isinstance(term, Inverse) and not isinstance(term.operand, AtomicRole):
            return False
    return True


def conjunction(concepts: list[Concept]) -> Concept:
    """Left-nested conjunction of a non-empty list."""
    result = concepts[0]
    for concept in concepts[1:]:
        result = And(result, concept)
    return result
