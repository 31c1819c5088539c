"""Z3 Model Finder Adapter - finite model enumeration oracle.

For each domain size from 1 upwards the concept is grounded into a
propositional formula over one Boolean per (concept symbol, element) and
(role symbol, pair) and one integer per individual. The first model in
canonical order is then obtained by fixing the variables one at a time to
their least feasible value:

    individuals (sorted by name), then concept symbols (sorted) element by
    element, then role symbols (sorted) pair by pair in ascending order,

with False before True. This is exactly the first model a binary counter over
the same variable order would hit.
"""
from __future__ import annotations

from itertools import product

import z3

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
    concept_symbols,
    individuals,
    role_symbols,
)
from src.ports.outbound.logger_port import LoggerPort


class _Grounding:
    """Propositional grounding of one concept over a fixed domain size."""

    def __init__(self, concept: Concept, size: int):
        self.size = size
        self.elements = range(size)
        self.individuals = {
            name: z3.Int(f"ind!{name}") for name in sorted(individuals(concept))
        }
        self.concepts = {
            name: [z3.Bool(f"c!{name}!{i}") for i in self.elements]
            for name in sorted(concept_symbols(concept))
        }
        self.roles = {
            name: [[z3.Bool(f"r!{name}!{i}!{j}") for j in self.elements] for i in self.elements]
            for name in sorted(role_symbols(concept))
        }
        self._concept_cache: dict[tuple[Concept, int], z3.BoolRef] = {}
        self._role_cache: dict[tuple[Role, int, int], z3.BoolRef] = {}

    def bounds(self) -> list[z3.BoolRef]:
        return [
            z3.And(variable >= 0, variable < self.size) for variable in self.individuals.values()
        ]

    def satisfiable_somewhere(self, concept: Concept) -> z3.BoolRef:
        return z3.Or([self.concept(concept, i) for i in self.elements])

    def _at(self, individual: str, i: int) -> z3.BoolRef:
        return self.individuals[individual] == i

    def _everywhere(self, concept: Concept) -> z3.BoolRef:
        return z3.And([self.concept(concept, i) for i in self.elements])

    def concept(self, concept: Concept, i: int) -> z3.BoolRef:
        key = (concept, i)
        cached = self._concept_cache.get(key)
        if cached is None:
            cached = self._concept(concept, i)
            self._concept_cache[key] = cached
        return cached

    def _concept(self, concept: Concept, i: int) -> z3.BoolRef:
        match concept:
            case AtomicConcept(name):
                return self.concepts[name][i]
            case Singleton(individual):
                return self._at(individual, i)
            case Top():
                return z3.BoolVal(True)
            case Bottom():
                return z3.BoolVal(False)
            case Not(operand):
                return z3.Not(self.concept(operand, i))
            case Or(left, right):
                return z3.Or(self.concept(left, i), self.concept(right, i))
            case And(left, right):
                return z3.And(self.concept(left, i), self.concept(right, i))
            case Exists(role, filler):
                return z3.Or(
                    [z3.And(self.role(role, i, j), self.concept(filler, j)) for j in self.elements]
                )
            case Forall(role, filler):
                return z3.And(
                    [z3.Implies(self.role(role, i, j), self.concept(filler, j))
                     for j in self.elements]
                )
            case Window(role, filler):
                return z3.And(
                    [z3.Implies(self.concept(filler, j), self.role(role, i, j))
                     for j in self.elements]
                )
            case Box(operand):
                return self._everywhere(operand)
            case Assertion(individual, inner):
                return z3.Or(
                    [z3.And(self._at(individual, j), self.concept(inner, j)) for j in self.elements]
                )
            case RoleAssertion(subject, obj, role):
                return z3.Or(
                    [
                        z3.And(self._at(subject, j), self._at(obj, k), self.role(role, j, k))
                        for j, k in product(self.elements, repeat=2)
                    ]
                )
            case Incl(sub, sup):
                return z3.And(
                    [z3.Implies(self.concept(sub, j), self.concept(sup, j)) for j in self.elements]
                )
            case RIncl(sub, sup):
                return z3.And(
                    [
                        z3.Implies(self.role(sub, j, k), self.role(sup, j, k))
                        for j, k in product(self.elements, repeat=2)
                    ]
                )
        raise TypeError(f"not a concept: {concept!r}")

    def role(self, role: Role, i: int, j: int) -> z3.BoolRef:
        key = (role, i, j)
        cached = self._role_cache.get(key)
        if cached is None:
            cached = self._role(role, i, j)
            self._role_cache[key] = cached
        return cached

    def _role(self, role: Role, i: int, j: int) -> z3.BoolRef:
        match role:
            case AtomicRole(name):
                return self.roles[name][i][j]
            case Id():
                return z3.BoolVal(i == j)
            case RoleOr(left, right):
                return z3.Or(self.role(left, i, j), self.role(right, i, j))
            case RoleAnd(left, right):
                return z3.And(self.role(left, i, j), self.role(right, i, j))
            case RoleNot(operand):
                return z3.Not(self.role(operand, i, j))
            case Inverse(operand):
                return self.role(operand, j, i)
            case TopRole():
                return z3.BoolVal(True)
            case BottomRole():
                return z3.BoolVal(False)
            case Div():
                return z3.BoolVal(i != j)
            case Test(concept):
                return self.concept(concept, i) if i == j else z3.BoolVal(False)
            case DomRestrict(inner, concept):
                return z3.And(self.role(inner, i, j), self.concept(concept, i))
            case RanRestrict(inner, concept):
                return z3.And(self.role(inner, i, j), self.concept(concept, j))
            case LeftCyl(concept):
                return self.concept(concept, i)
            case RightCyl(concept):
                return self.concept(concept, j)
            case Cross(left, right):
                return z3.And(self.concept(left, i), self.concept(right, j))
        raise TypeError(f"not a role: {role!r}")

    def canonical_order(self) -> list[z3.ExprRef]:
        ordered: list[z3.ExprRef] = list(self.individuals.values())
        for bits in self.concepts.values():
            ordered.extend(bits)
        for matrix in self.roles.values():
            for row in matrix:
                ordered.extend(row)
        return ordered


class Z3ModelFinder:
    """
    Implementation of ModelFinderPort backed by the Z3 SMT solver.

    Searches domain sizes in ascending order and returns the first model in
    canonical order, so answers are reproducible across runs and platforms.
    """

    def __init__(self, logger: LoggerPort | None = None, canonical: bool = True):
        """
        Initialize the model finder.

        Args:
            logger: Optional logger for per-size progress
            canonical: Return the canonical first model; when False any model
                of the smallest size is returned
        """
        self._logger = logger
        self._canonical = canonical

    def find_model(self, concept: Concept, max_domain: int) -> Model | None:
        """
        Search for a model of the concept with at most max_domain elements.

        Returns:
            The first model found, or None if there is none within the bound
        """
        for size in range(1, max_domain + 1):
            grounding = _Grounding(concept, size)
            solver = z3.Solver()
            solver.add(*grounding.bounds())
            solver.add(grounding.satisfiable_somewhere(concept))
            outcome = solver.check()
            if self._logger:
                self._logger.debug("Oracle checked domain size", size=size, result=str(outcome))
            if outcome != z3.sat:
                continue
            if self._canonical:
                self._fix_least(solver, grounding)
                solver.check()
            return self._read_model(solver.model(), grounding)
        return None

    def get_name(self) -> str:
        return "z3"

    @staticmethod
    def _fix_least(solver: z3.Solver, grounding: _Grounding) -> None:
        for variable in grounding.canonical_order():
            if z3.is_bool(variable):
                candidates: list[z3.BoolRef] = [z3.Not(variable), variable]
            else:
                candidates = [variable == value for value in grounding.elements]
            for candidate in candidates:
                solver.push()
                solver.add(candidate)
                feasible = solver.check() == z3.sat
                solver.pop()
                if feasible:
                    solver.add(candidate)
                    break

    @staticmethod
    def _read_model(assignment: z3.ModelRef, grounding: _Grounding) -> Model:
        def holds(variable: z3.BoolRef) -> bool:
            return z3.is_true(assignment.eval(variable, model_completion=True))

        concept_ext = {
            name: frozenset(i for i in grounding.elements if holds(bits[i]))
            for name, bits in grounding.concepts.items()
        }
        role_ext = {
            name: frozenset(
                (i, j) for i, j in product(grounding.elements, repeat=2) if holds(matrix[i][j])
            )
            for name, matrix in grounding.roles.items()
        }
        individual_map = {
            name: assignment.eval(variable, model_completion=True).as_long()
            for name, variable in grounding.individuals.items()
        }
        return Model(
            size=grounding.size,
            concept_ext=concept_ext,
            role_ext=role_ext,
            individual_map=individual_map,
        )


def enumerate_model(concept: Concept, max_domain: int) -> Model | None:
    """First model of the concept in canonical order with at most max_domain elements."""
    return Z3ModelFinder().find_model(concept, max_domain)
