"""Model Checker - evaluation of concepts in finite models and model extraction."""
from __future__ import annotations

from itertools import product

from src.application.tableau_engine import is_fully_expanded
from src.domain.entities.branch import Branch
from src.domain.entities.model import Model
from src.domain.exceptions import BranchClosed, NotExpanded, UnboundIndividual
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
from src.domain.value_objects.labelled_concept import Origin

Extension = frozenset[int]
Relation = frozenset[tuple[int, int]]


def _element(model: Model, individual: str) -> int:
    try:
        return model.individual_map[individual]
    except KeyError:
        raise UnboundIndividual(individual) from None


def _all_pairs(model: Model) -> Relation:
    return frozenset(product(range(model.size), repeat=2))


def eval_concept(model: Model, concept: Concept) -> Extension:
    """
    Extension of a concept, sugared forms included.

    Statements (assertions and inclusions) evaluate to the whole domain when
    they hold in the model and to the empty set otherwise.

    Raises:
        UnboundIndividual: If the concept names an individual the model does not map
    """
    domain = model.domain
    match concept:
        case AtomicConcept(name):
            return model.concept(name)
        case Singleton(individual):
            return frozenset({_element(model, individual)})
        case Not(operand):
            return domain - eval_concept(model, operand)
        case Or(left, right):
            return eval_concept(model, left) | eval_concept(model, right)
        case And(left, right):
            return eval_concept(model, left) & eval_concept(model, right)
        case Top():
            return domain
        case Bottom():
            return frozenset()
        case Exists(role, filler):
            pairs = eval_role(model, role)
            members = eval_concept(model, filler)
            return frozenset(x for x, y in pairs if y in members)
        case Forall(role, filler):
            pairs = eval_role(model, role)
            members = eval_concept(model, filler)
            return domain - frozenset(x for x, y in pairs if y not in members)
        case Window(role, filler):
            pairs = eval_role(model, role)
            members = eval_concept(model, filler)
            return frozenset(x for x in domain if all((x, y) in pairs for y in members))
        case Box(operand):
            return domain if eval_concept(model, operand) == domain else frozenset()
        case Assertion(individual, inner):
            holds = _element(model, individual) in eval_concept(model, inner)
            return domain if holds else frozenset()
        case RoleAssertion(subject, obj, role):
            pair = (_element(model, subject), _element(model, obj))
            return domain if pair in eval_role(model, role) else frozenset()
        case Incl(sub, sup):
            holds = eval_concept(model, sub) <= eval_concept(model, sup)
            return domain if holds else frozenset()
        case RIncl(sub, sup):
            holds = eval_role(model, sub) <= eval_role(model, sup)
            return domain if holds else frozenset()
    raise TypeError(f"not a concept: {concept!r}")


def eval_role(model: Model, role: Role) -> Relation:
    """Extension of a role as a set of ordered pairs."""
    domain = model.domain
    match role:
        case AtomicRole(name):
            return model.role(name)
        case Id():
            return frozenset((x, x) for x in domain)
        case RoleOr(left, right):
            return eval_role(model, left) | eval_role(model, right)
        case RoleAnd(left, right):
            return eval_role(model, left) & eval_role(model, right)
        case RoleNot(operand):
            return _all_pairs(model) - eval_role(model, operand)
        case Inverse(operand):
            return frozenset((y, x) for x, y in eval_role(model, operand))
        case TopRole():
            return _all_pairs(model)
        case BottomRole():
            return frozenset()
        case Div():
            return frozenset((x, y) for x, y in _all_pairs(model) if x != y)
        case Test(concept):
            return frozenset((x, x) for x in eval_concept(model, concept))
        case DomRestrict(inner, concept):
            members = eval_concept(model, concept)
            return frozenset((x, y) for x, y in eval_role(model, inner) if x in members)
        case RanRestrict(inner, concept):
            members = eval_concept(model, concept)
            return frozenset((x, y) for x, y in eval_role(model, inner) if y in members)
        case LeftCyl(concept):
            return frozenset(product(eval_concept(model, concept), domain))
        case RightCyl(concept):
            return frozenset(product(domain, eval_concept(model, concept)))
        case Cross(left, right):
            return frozenset(product(eval_concept(model, left), eval_concept(model, right)))
    raise TypeError(f"not a role: {role!r}")


def satisfied(model: Model, concept: Concept) -> bool:
    """A concept is satisfied by a model when its extension is non-empty."""
    return bool(eval_concept(model, concept))


def extract_model(branch: Branch) -> Model:
    """
    Read a model off an open, fully expanded branch.

    Domain elements are the classes of individuals b with b:{b} in the branch,
    numbered by the creation order of their least member. An input individual
    that never became a domain element is mapped to element 0.

    Raises:
        BranchClosed: If the branch contains a clash
        NotExpanded: If rules are still applicable
    """
    if branch.closed:
        raise BranchClosed(f"branch {branch.branch_id} is closed")
    if not is_fully_expanded(branch):
        raise NotExpanded(f"branch {branch.branch_id} still has applicable rules")

    element_of = element_assignment(branch)
    concept_ext: dict[str, set[int]] = {}
    role_ext: dict[str, set[tuple[int, int]]] = {}
    for fact in branch.facts:
        if fact.label not in element_of:
            continue
        match fact.concept:
            case AtomicConcept(name):
                concept_ext.setdefault(name, set()).add(element_of[fact.label])
            case Exists(AtomicRole(name), Singleton(other)) if other in element_of:
                role_ext.setdefault(name, set()).add((element_of[fact.label], element_of[other]))

    individual_map = {
        individual.name: element_of.get(individual.name, 0)
        for individual in branch.individuals.values()
        if individual.origin == Origin.NOMINAL
    }
    return Model(
        size=len(set(element_of.values())) or 1,
        concept_ext={name: frozenset(ext) for name, ext in sorted(concept_ext.items())},
        role_ext={name: frozenset(ext) for name, ext in sorted(role_ext.items())},
        individual_map=individual_map,
    )


def element_assignment(branch: Branch) -> dict[str, int]:
    """Map every domain individual of a branch to the number of its class."""
    domain = set(branch.domain)
    representatives: dict[str, int] = {}
    element_of: dict[str, int] = {}
    for name in sorted(domain, key=branch.index_of):
        root = branch.representative(name)
        if root not in representatives:
            representatives[root] = len(representatives)
        element_of[name] = representatives[root]
    return element_of
