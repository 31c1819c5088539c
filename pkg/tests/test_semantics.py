"""Tests for model checking, model extraction, the standard translation and the oracle."""
from dataclasses import replace

import pytest

from src.adapters.inbound.problem_parser import parse_concept
from src.adapters.outbound.z3_model_finder import Z3ModelFinder, enumerate_model
from src.application.model_checker import (
    element_assignment,
    eval_concept,
    eval_role,
    extract_model,
    satisfied,
)
from src.application.normalizer import normalize_concept
from src.application.standard_translation import (
    VARIABLES,
    Const,
    Equals,
    FAnd,
    FExists,
    Pred,
    Var,
    fo_satisfied,
    formula_size,
    print_formula,
    st_translate,
    st_translate_role,
    variables_of,
)
from src.application.tableau_engine import TableauEngine
from src.domain.entities.model import Model
from src.domain.exceptions import (
    BranchClosed,
    InvalidModel,
    NormalizationError,
    NotExpanded,
    UnboundIndividual,
)
from src.domain.value_objects.expressions import (
    And,
    Assertion,
    AtomicConcept,
    AtomicRole,
    Box,
    Cross,
    Div,
    Exists,
    Forall,
    Incl,
    Inverse,
    Not,
    RoleAssertion,
    RoleNot,
    Singleton,
    Test,
    Top,
    Window,
    length,
)
from src.domain.value_objects.labelled_concept import LabelledConcept
from src.domain.value_objects.rule_kind import RuleKind
from src.domain.value_objects.strategy import IterativeDeepening
from tests.conftest import (
    EVERYWHERE_SUCCESSOR,
    ROLE_UNION_WITNESS,
    UNSAT_SUCCESSOR_CHAIN,
)
from tests.generators import core_role, small_core_concept, small_model

A = AtomicConcept("A")
Q = AtomicRole("Q")


@pytest.fixture
def two_elements() -> Model:
    """0 -Q-> 1, A = {1}, a = 1."""
    return Model(
        size=2,
        concept_ext={"A": frozenset({1})},
        role_ext={"Q": frozenset({(0, 1)})},
        individual_map={"a": 1},
    )


def merged_branch():
    """Branch for some Q . A after (ub) merged the witness into the root."""
    engine = TableauEngine()
    branch = engine.init(Exists(Q, A))
    while (instance := engine.select(branch)).rule != RuleKind.UB:
        engine.apply(branch, instance, reuse_parent=True)
    merge, _ = engine.apply(branch, instance, reuse_parent=True)
    while (instance := engine.select(merge)) is not None:
        engine.apply(merge, instance, reuse_parent=True)
    return merge


class TestModel:
    """Test model construction."""

    def test_empty_domain_is_rejected(self):
        """Domains are non-empty."""
        with pytest.raises(InvalidModel):
            Model(size=0)

    def test_extension_outside_domain_is_rejected(self):
        """Every element named must exist."""
        with pytest.raises(InvalidModel):
            Model(size=1, concept_ext={"A": frozenset({1})})
        with pytest.raises(InvalidModel):
            Model(size=1, role_ext={"Q": frozenset({(0, 2)})})
        with pytest.raises(InvalidModel):
            Model(size=1, individual_map={"a": 3})

    def test_missing_symbols_are_empty(self):
        """Unlisted symbols have empty extensions."""
        model = Model(size=1)
        assert model.concept("A") == frozenset()
        assert model.role("Q") == frozenset()


class TestEvaluation:
    """Test extensions of concepts and roles."""

    def test_exists_and_forall(self, two_elements):
        """0 has a Q-successor in A; 1 has no Q-successor at all."""
        assert eval_concept(two_elements, Exists(Q, A)) == frozenset({0})
        assert eval_concept(two_elements, Forall(Q, Not(A))) == frozenset({1})

    def test_window(self, two_elements):
        """0 reaches every A-element through Q."""
        assert eval_concept(two_elements, Window(Q, A)) == frozenset({0})

    def test_box(self, two_elements):
        """A does not hold everywhere."""
        assert eval_concept(two_elements, Box(A)) == frozenset()
        assert eval_concept(two_elements, Box(Top())) == frozenset({0, 1})

    def test_statements_are_global(self, two_elements):
        """Statements evaluate to the whole domain or nothing."""
        everything = frozenset({0, 1})
        assert eval_concept(two_elements, Assertion("a", A)) == everything
        assert eval_concept(two_elements, RoleAssertion("a", "a", Q)) == frozenset()
        assert eval_concept(two_elements, Incl(A, Exists(Inverse(Q), Top()))) == everything

    def test_roles(self, two_elements):
        """Role constructors over the two-element model."""
        assert eval_role(two_elements, Div()) == frozenset({(0, 1), (1, 0)})
        assert eval_role(two_elements, Test(A)) == frozenset({(1, 1)})
        assert eval_role(two_elements, Cross(A, Not(A))) == frozenset({(1, 0)})
        assert eval_role(two_elements, RoleNot(Q)) == frozenset({(0, 0), (1, 0), (1, 1)})

    def test_satisfied(self, two_elements):
        """Satisfaction is non-emptiness of the extension."""
        assert satisfied(two_elements, Exists(Q, A))
        assert not satisfied(two_elements, And(A, Not(A)))

    def test_unbound_individual(self):
        """Nominals must be mapped by the model."""
        with pytest.raises(UnboundIndividual):
            eval_concept(Model(size=1), Singleton("zed"))

    def test_window_is_forall_over_complement(self, rng):
        """Sufficiency on R equals necessity on the complement of R for the complement of C."""
        for _ in range(200):
            model = small_model(rng)
            role = core_role(rng, 3)
            concept = small_core_concept(rng, 6)
            assert eval_concept(model, Window(role, concept)) == eval_concept(
                model, Forall(RoleNot(role), Not(concept))
            )


class TestModelExtraction:
    """Test reading models off branches."""

    def test_merged_witness_gives_a_loop(self):
        """Merging the witness into the root yields one element with a Q-loop."""
        model = extract_model(merged_branch())
        assert model.size == 1
        assert model.role("Q") == frozenset({(0, 0)})
        assert model.concept("A") == frozenset({0})
        assert model.individual_map == {}

    def test_closed_branch(self):
        """A closed branch has no model."""
        engine = TableauEngine()
        branch = engine.init(A)
        engine.extend(branch, [LabelledConcept("$a0", Not(A))])
        with pytest.raises(BranchClosed):
            extract_model(branch)

    def test_unexpanded_branch(self):
        """Rules must be exhausted first."""
        with pytest.raises(NotExpanded):
            extract_model(TableauEngine().init(Exists(Q, A)))

    @pytest.mark.parametrize("text", [ROLE_UNION_WITNESS, EVERYWHERE_SUCCESSOR])
    def test_every_fact_holds_in_the_model(self, search, text):
        """Each labelled concept of the open branch is true at its element."""
        verdict = search.decide(normalize_concept(parse_concept(text)).concept, IterativeDeepening())
        branch = verdict.branch
        element_of = element_assignment(branch)
        model = replace(
            verdict.model, individual_map={**verdict.model.individual_map, **element_of}
        )
        for fact in branch.facts:
            assert element_of[fact.label] in eval_concept(model, fact.concept), str(fact)


class TestStandardTranslation:
    """Test the translation into two-variable first-order logic."""

    def test_exists(self):
        """The successor gets the other variable."""
        expected = FExists(
            "y", FAnd(Pred("Q", (Var("x"), Var("y"))), Pred("A", (Var("y"),)))
        )
        assert st_translate(Exists(Q, A)) == expected
        assert print_formula(expected) == "exists y. (Q(x, y) & A(y))"

    def test_variables_are_reused(self):
        """Nesting switches back to x instead of inventing a third variable."""
        formula = st_translate(Exists(Q, Exists(Q, A)))
        assert variables_of(formula) == frozenset({"x", "y"})
        assert print_formula(formula) == "exists y. (Q(x, y) & exists x. (Q(y, x) & A(x)))"

    def test_inverse_swaps_arguments(self):
        """inv(Q) reads Q backwards."""
        assert st_translate_role(Inverse(Q), "x", "y") == Pred("Q", (Var("y"), Var("x")))

    def test_nominal(self):
        """A nominal is an equality with a constant."""
        formula = st_translate(Singleton("a"))
        assert formula == Equals(Var("x"), Const("a"))
        assert print_formula(formula) == "x = 'a'"

    def test_sugar_is_rejected(self):
        """Only core concepts translate."""
        with pytest.raises(NormalizationError):
            st_translate(And(A, A))

    def test_two_variables_and_linear_size(self, rng):
        """Random core concepts stay in two variables and at most double in size."""
        for _ in range(200):
            concept = small_core_concept(rng)
            formula = st_translate(concept)
            assert variables_of(formula) <= set(VARIABLES)
            assert formula_size(formula) <= 2 * length(concept)

    def test_translation_is_faithful(self, rng):
        """C is satisfied in M exactly when its translation holds somewhere in M."""
        for _ in range(200):
            concept = small_core_concept(rng)
            model = small_model(rng)
            assert fo_satisfied(model, concept) == satisfied(model, concept)


class TestOracle:
    """Test the brute-force model finder."""

    def test_first_model(self):
        """The canonical first model of some Q . A is a Q-loop."""
        assert enumerate_model(Exists(Q, A), 1) == Model(
            size=1,
            concept_ext={"A": frozenset({0})},
            role_ext={"Q": frozenset({(0, 0)})},
            individual_map={},
        )

    def test_nominal_placement(self):
        """Individuals are placed on the least element."""
        model = enumerate_model(And(Singleton("a"), A), 2)
        assert model is not None
        assert model.size == 1
        assert model.individual_map == {"a": 0}

    def test_contradiction(self):
        """No model of A and not A exists at any size."""
        assert enumerate_model(And(A, Not(A)), 3) is None

    def test_unsatisfiable_fixture(self):
        """The successor chain has no small model."""
        assert enumerate_model(parse_concept(UNSAT_SUCCESSOR_CHAIN), 3) is None

    def test_needs_two_elements(self):
        """A and some Q . not A requires a second element."""
        model = enumerate_model(And(A, Exists(Q, Not(A))), 3)
        assert model is not None
        assert model.size == 2
        assert satisfied(model, And(A, Exists(Q, Not(A))))

    def test_any_model_mode(self):
        """Without canonical ordering the model still satisfies the concept."""
        finder = Z3ModelFinder(canonical=False)
        concept = parse_concept(ROLE_UNION_WITNESS)
        model = finder.find_model(concept, 3)
        assert model is not None
        assert satisfied(model, concept)
        assert finder.get_name() == "z3"
