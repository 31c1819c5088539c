"""Seeded random generators for expressions and models."""
import random
from itertools import product

from src.domain.entities.model import Model
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
    length,
)

CONCEPT_NAMES = ("A", "B")
ROLE_NAMES = ("Q", "P")
INDIVIDUAL_NAMES = ("a",)


def core_role(rng: random.Random, budget: int) -> Role:
    """Core role, inverse on atomic roles only."""
    atomic = AtomicRole(rng.choice(ROLE_NAMES))
    roll = rng.random()
    if budget < 2 or roll < 0.45:
        return Id() if rng.random() < 0.15 else atomic
    if roll < 0.65:
        return RoleNot(core_role(rng, budget - 1))
    if roll < 0.8:
        return Inverse(atomic)
    return RoleOr(core_role(rng, budget // 2), core_role(rng, budget // 2))


def core_concept(rng: random.Random, budget: int, nominals: bool = True) -> Concept:
    """Core concept built from at most `budget` constructors (roughly)."""
    if budget <= 1:
        if nominals and rng.random() < 0.2:
            return Singleton(rng.choice(INDIVIDUAL_NAMES))
        return AtomicConcept(rng.choice(CONCEPT_NAMES))
    roll = rng.random()
    if roll < 0.3:
        return Not(core_concept(rng, budget - 1, nominals))
    if roll < 0.55 and budget >= 3:
        left = rng.randint(1, budget - 2)
        return Or(
            core_concept(rng, left, nominals),
            core_concept(rng, budget - 1 - left, nominals),
        )
    if budget >= 3:
        role = core_role(rng, rng.randint(1, 2))
        return Exists(role, core_concept(rng, budget - 1 - length(role), nominals))
    return Not(core_concept(rng, budget - 1, nominals))


def small_core_concept(rng: random.Random, max_length: int = 10) -> Concept:
    """Core concept of length at most max_length."""
    while True:
        concept = core_concept(rng, rng.randint(1, max_length - 1))
        if length(concept) <= max_length:
            return concept


def restriction_role(rng: random.Random) -> Role:
    """One restriction-family operator over small core arguments."""
    concept = core_concept(rng, 2, nominals=False)
    role = AtomicRole(rng.choice(ROLE_NAMES))
    return rng.choice(
        [
            Test(concept),
            DomRestrict(role, concept),
            RanRestrict(role, concept),
            LeftCyl(concept),
            RightCyl(concept),
            Cross(concept, core_concept(rng, 2, nominals=False)),
        ]
    )


def concept_with_restriction(rng: random.Random) -> Concept:
    """A core concept with one restriction-family role somewhere inside."""
    inner = Exists(restriction_role(rng), core_concept(rng, 2, nominals=False))
    match rng.randint(0, 2):
        case 0:
            return inner
        case 1:
            return And(inner, core_concept(rng, 4, nominals=False))
        case _:
            return Not(inner)


def any_role(rng: random.Random, depth: int) -> Role:
    atomic = AtomicRole(rng.choice(ROLE_NAMES))
    if depth <= 1:
        return rng.choice([atomic, atomic, Id(), TopRole(), BottomRole(), Div()])
    roll = rng.randint(0, 9)
    match roll:
        case 0:
            return RoleNot(any_role(rng, depth - 1))
        case 1:
            return Inverse(any_role(rng, depth - 1))
        case 2:
            return RoleOr(any_role(rng, depth - 1), any_role(rng, depth - 1))
        case 3:
            return RoleAnd(any_role(rng, depth - 1), any_role(rng, depth - 1))
        case 4:
            return Test(any_concept(rng, depth - 1))
        case 5:
            return DomRestrict(any_role(rng, depth - 1), any_concept(rng, depth - 1))
        case 6:
            return RanRestrict(any_role(rng, depth - 1), any_concept(rng, depth - 1))
        case 7:
            return LeftCyl(any_concept(rng, depth - 1))
        case 8:
            return RightCyl(any_concept(rng, depth - 1))
        case _:
            return Cross(any_concept(rng, depth - 1), any_concept(rng, depth - 1))


def any_concept(rng: random.Random, depth: int) -> Concept:
    """Any concept, sugar and statements included, of nesting depth at most `depth`."""
    if depth <= 1:
        return rng.choice(
            [
                AtomicConcept(rng.choice(CONCEPT_NAMES)),
                Singleton(rng.choice(("a", "b"))),
                Top(),
                Bottom(),
            ]
        )
    sub = depth - 1
    roll = rng.randint(0, 13)
    match roll:
        case 0:
            return Not(any_concept(rng, sub))
        case 1:
            return Or(any_concept(rng, sub), any_concept(rng, sub))
        case 2:
            return And(any_concept(rng, sub), any_concept(rng, sub))
        case 3:
            return Exists(any_role(rng, sub), any_concept(rng, sub))
        case 4:
            return Forall(any_role(rng, sub), any_concept(rng, sub))
        case 5:
            return Window(any_role(rng, sub), any_concept(rng, sub))
        case 6:
            return Box(any_concept(rng, sub))
        case 7:
            return Assertion(rng.choice(("a", "b")), any_concept(rng, sub))
        case 8:
            return RoleAssertion("a", "b", any_role(rng, sub))
        case 9:
            return Incl(any_concept(rng, sub), any_concept(rng, sub))
        case 10:
            return RIncl(any_role(rng, sub), any_role(rng, sub))
        case _:
            return AtomicConcept(rng.choice(CONCEPT_NAMES))


def small_model(rng: random.Random, max_size: int = 3) -> Model:
    """Random interpretation of CONCEPT_NAMES, ROLE_NAMES and INDIVIDUAL_NAMES."""
    size = rng.randint(1, max_size)
    elements = range(size)
    pairs = list(product(elements, repeat=2))
    return Model(
        size=size,
        concept_ext={
            name: frozenset(e for e in elements if rng.random() < 0.5) for name in CONCEPT_NAMES
        },
        role_ext={name: frozenset(p for p in pairs if rng.random() < 0.4) for name in ROLE_NAMES},
        individual_map={name: rng.randrange(size) for name in INDIVIDUAL_NAMES},
    )
