"""Normalizer - rewrites problems into core ALBO^id concepts.

Pipeline for a problem:

1. the goals, statements and unique name axioms are conjoined (sugared);
2. restriction-family roles are replaced by fresh cylinder roles plus their
   defining inclusions;
3. all remaining sugar is rewritten into the five core concept and four core
   role constructors;
4. inverse is pushed down to atomic roles.

Fresh symbols start with "$", which the parser never accepts, so they cannot
capture user symbols.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from src.domain.entities.problem import Problem
from src.domain.exceptions import NormalizationError
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
    conjunction,
    count_individuals,
    existential_subterms,
    length,
)

RESERVED_PREFIX = "$"
TOP_SYMBOL = "$top"
UNIVERSAL_ROLE = "$univ"
CYLINDER_PREFIX = "$cyl"

_TOP = Or(AtomicConcept(TOP_SYMBOL), Not(AtomicConcept(TOP_SYMBOL)))
_UNIVERSAL = RoleOr(AtomicRole(UNIVERSAL_ROLE), RoleNot(AtomicRole(UNIVERSAL_ROLE)))


@dataclass(frozen=True)
class NormalizedInput:
    """
    A core concept ready for the tableau, with the sizes the bounds are computed from.

    Attributes:
        concept: Core syntax, inverse on atomic roles only
        fresh_roles: Cylinder role name to the concept it encodes
    """

    concept: Concept
    fresh_roles: dict[str, Concept] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return length(self.concept)

    @property
    def individual_count(self) -> int:
        return count_individuals(self.concept)

    @property
    def existential_count(self) -> int:
        return len(existential_subterms(self.concept))


# Desugaring


def desugar(concept: Concept) -> Concept:
    """
    Rewrite every sugared concept and role constructor into core syntax.

    Raises:
        NormalizationError: If a restriction-family role is still present
    """
    match concept:
        case AtomicConcept() | Singleton():
            return concept
        case Not(operand):
            return Not(desugar(operand))
        case Or(left, right):
            return Or(desugar(left), desugar(right))
        case Exists(role, filler):
            return Exists(desugar_role(role), desugar(filler))
        case Top():
            return _TOP
        case Bottom():
            return Not(_TOP)
        case And(left, right):
            return Not(Or(Not(desugar(left)), Not(desugar(right))))
        case Forall(role, filler):
            return Not(Exists(desugar_role(role), Not(desugar(filler))))
        case Window(role, filler):
            return Not(Exists(RoleNot(desugar_role(role)), desugar(filler)))
        case Box(operand):
            return desugar(Forall(TopRole(), operand))
        case Assertion(individual, inner):
            return desugar(Exists(TopRole(), And(Singleton(individual), inner)))
        case RoleAssertion(subject, obj, role):
            return desugar(Assertion(subject, Exists(role, Singleton(obj))))
        case Incl(sub, sup):
            return desugar(Box(Or(Not(sub), sup)))
        case RIncl(sub, sup):
            return desugar(Box(Forall(RoleNot(RoleOr(RoleNot(sub), sup)), Bottom())))
    raise NormalizationError(f"cannot desugar {concept!r}")


def desugar_role(role: Role) -> Role:
    match role:
        case AtomicRole() | Id():
            return role
        case RoleOr(left, right):
            return RoleOr(desugar_role(left), desugar_role(right))
        case RoleNot(operand):
            return RoleNot(desugar_role(operand))
        case Inverse(operand):
            return Inverse(desugar_role(operand))
        case TopRole():
            return _UNIVERSAL
        case BottomRole():
            return RoleNot(_UNIVERSAL)
        case RoleAnd(left, right):
            return RoleNot(RoleOr(RoleNot(desugar_role(left)), RoleNot(desugar_role(right))))
        case Div():
            return RoleNot(Id())
        case Test() | DomRestrict() | RanRestrict() | LeftCyl() | RightCyl() | Cross():
            raise NormalizationError(
                f"restriction operator must be encoded before desugaring: {role!r}"
            )
    raise NormalizationError(f"cannot desugar {role!r}")


# Inverse pushing


def push_inverse(concept: Concept) -> Concept:
    """
    Move every inverse onto atomic roles.

    Raises:
        NormalizationError: If the concept is not in core syntax
    """
    match concept:
        case AtomicConcept() | Singleton():
            return concept
        case Not(operand):
            return Not(push_inverse(operand))
        case Or(left, right):
            return Or(push_inverse(left), push_inverse(right))
        case Exists(role, filler):
            return Exists(_push_role(role, inverted=False), push_inverse(filler))
    raise NormalizationError(f"not a core concept: {concept!r}")


def _push_role(role: Role, inverted: bool) -> Role:
    match role:
        case AtomicRole():
            return Inverse(role) if inverted else role
        case Id():
            return role
        case RoleOr(left, right):
            return RoleOr(_push_role(left, inverted), _push_role(right, inverted))
        case RoleNot(operand):
            return RoleNot(_push_role(operand, inverted))
        case Inverse(operand):
            return _push_role(operand, not inverted)
    raise NormalizationError(f"not a core role: {role!r}")


# Restriction operators


class RestrictionEncoder:
    """
    Replaces cylindrifications and restrictions by fresh role symbols.

    Every distinct cylinder concept D gets one role $cylN constrained to equal
    D x Domain; the other operators are expressed through it:

        rcyl(D)      = inv(lcyl(D))
        cross(C, D)  = lcyl(C) and inv(lcyl(D))
        domr(R, C)   = R and lcyl(C)
        ranr(R, C)   = R and inv(lcyl(C))
        test(C)      = ranr(id, C)
    """

    def __init__(self) -> None:
        self._cylinders: dict[Concept, str] = {}
        self.definitions: list[Incl] = []
        self.fresh_roles: dict[str, Concept] = {}

    def concept(self, concept: Concept) -> Concept:
        match concept:
            case AtomicConcept() | Singleton() | Top() | Bottom():
                return concept
            case Not(operand):
                return Not(self.concept(operand))
            case Box(operand):
                return Box(self.concept(operand))
            case Or(left, right):
                return Or(self.concept(left), self.concept(right))
            case And(left, right):
                return And(self.concept(left), self.concept(right))
            case Exists(role, filler):
                return Exists(self.role(role), self.concept(filler))
            case Forall(role, filler):
                return Forall(self.role(role), self.concept(filler))
            case Window(role, filler):
                return Window(self.role(role), self.concept(filler))
            case Assertion(individual, inner):
                return Assertion(individual, self.concept(inner))
            case RoleAssertion(subject, obj, role):
                return RoleAssertion(subject, obj, self.role(role))
            case Incl(sub, sup):
                return Incl(self.concept(sub), self.concept(sup))
            case RIncl(sub, sup):
                return RIncl(self.role(sub), self.role(sup))
        raise NormalizationError(f"not a concept: {concept!r}")

    def role(self, role: Role) -> Role:
        match role:
            case AtomicRole() | Id() | TopRole() | BottomRole() | Div():
                return role
            case RoleOr(left, right):
                return RoleOr(self.role(left), self.role(right))
            case RoleAnd(left, right):
                return RoleAnd(self.role(left), self.role(right))
            case RoleNot(operand):
                return RoleNot(self.role(operand))
            case Inverse(operand):
                return Inverse(self.role(operand))
            case LeftCyl(concept):
                return self._cylinder(concept)
            case RightCyl(concept):
                return Inverse(self._cylinder(concept))
            case Cross(left, right):
                return RoleAnd(self._cylinder(left), Inverse(self._cylinder(right)))
            case DomRestrict(inner, concept):
                return RoleAnd(self.role(inner), self._cylinder(concept))
            case RanRestrict(inner, concept):
                return RoleAnd(self.role(inner), Inverse(self._cylinder(concept)))
            case Test(concept):
                return self.role(RanRestrict(Id(), concept))
        raise NormalizationError(f"not a role: {role!r}")

    def _cylinder(self, concept: Concept) -> AtomicRole:
        encoded = self.concept(concept)
        name = self._cylinders.get(encoded)
        if name is None:
            name = f"{CYLINDER_PREFIX}{len(self._cylinders)}"
            self._cylinders[encoded] = name
            self.fresh_roles[name] = concept
            role = AtomicRole(name)
            self.definitions.append(Incl(Not(encoded), Forall(role, Bottom())))
            self.definitions.append(Incl(encoded, Window(role, Top())))
        return AtomicRole(name)


def encode_restriction_ops(concept: Concept) -> tuple[Concept, list[Incl]]:
    """
    Replace restriction-family roles by fresh symbols.

    Returns:
        The rewritten concept and the defining inclusions of the fresh roles;
        the concept is equisatisfiable with the input once conjoined with them
    """
    encoder = RestrictionEncoder()
    return encoder.concept(concept), encoder.definitions


# Internalization


def _internalize(problem: Problem, encoder: RestrictionEncoder) -> Concept:
    encoded = encoder.concept(problem.as_concept())
    return desugar(conjunction([encoded, *encoder.definitions]))


def internalize(problem: Problem) -> Concept:
    """
    Reduce a problem to one core concept.

    Raises:
        EmptyProblem: If the problem has no goal
    """
    return _internalize(problem, RestrictionEncoder())


def normalize_problem(problem: Problem) -> NormalizedInput:
    """Run the whole pipeline and keep the fresh role table for trace annotation."""
    encoder = RestrictionEncoder()
    concept = push_inverse(_internalize(problem, encoder))
    return NormalizedInput(concept=concept, fresh_roles=dict(encoder.fresh_roles))


def normalize_concept(concept: Concept) -> NormalizedInput:
    return normalize_problem(Problem(goals=[concept]))
