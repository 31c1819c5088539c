"""Problem Parser - reads the .albo surface syntax.

The grammar does not distinguish concepts from roles: `not`, `or` and `and`
are shared by both sorts. Parsing therefore happens in two steps. Lark builds
a sort-free term tree; the sort of every subterm is then fixed by the
position it occurs in (role of `some`, filler of `some`, argument of `inv`,
...) and every identifier is assigned to exactly one alphabet.

An inclusion `X <= Y` is a role inclusion when one side contains a role-only
construct (`id`, `inv(...)`, `div`, ...) or an identifier that is used as a
role somewhere else in the input; otherwise it is a concept inclusion. The
keyword form `role X <= Y` (or `[role X <= Y]` inside a concept) is always a
role inclusion, and it is what the printer emits.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from src.domain.entities.problem import Problem
from src.domain.exceptions import AlphabetClash, ParseError
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

PROBLEM_EXTENSION = ".albo"

GRAMMAR = r"""
problem: (statement ";")*

statement: "sat" term                                 -> goal
         | term "<=" term                             -> inclusion
         | "role" term "<=" term                      -> role_inclusion
         | IDENT ":" term                             -> assertion
         | "(" IDENT "," IDENT ")" ":" term           -> role_assertion
         | "una"                                      -> una

?term: "not" term                                     -> neg
     | "some" term "." term                           -> some
     | "all" term "." term                            -> all
     | "win" term "." term                            -> win
     | "box" term                                     -> box
     | atom

?atom: IDENT                                          -> name
     | "{" IDENT "}"                                  -> singleton
     | "top"                                          -> top
     | "bot"                                          -> bot
     | "id"                                           -> ident
     | "topr"                                         -> topr
     | "botr"                                         -> botr
     | "div"                                          -> div
     | "inv" "(" term ")"                             -> inv
     | "test" "(" term ")"                            -> test
     | "lcyl" "(" term ")"                            -> lcyl
     | "rcyl" "(" term ")"                            -> rcyl
     | "domr" "(" term "," term ")"                   -> domr
     | "ranr" "(" term "," term ")"                   -> ranr
     | "cross" "(" term "," term ")"                  -> cross
     | "(" term "or" term ")"                         -> disj
     | "(" term "and" term ")"                        -> conj
     | "[" IDENT ":" term "]"                         -> assertion
     | "[" "(" IDENT "," IDENT ")" ":" term "]"       -> role_assertion
     | "[" term "<=" term "]"                         -> inclusion
     | "[" "role" term "<=" term "]"                  -> role_inclusion

IDENT: /[A-Za-z_][A-Za-z0-9_']*/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_PARSER = Lark(GRAMMAR, parser="lalr", start=["problem", "term"], propagate_positions=True)

CONCEPT = "concept"
ROLE = "role"
INDIVIDUAL = "individual"

_ROLE_ONLY = frozenset(
    {"ident", "topr", "botr", "div", "inv", "test", "lcyl", "rcyl", "domr", "ranr", "cross"}
)
_CONCEPT_ONLY = frozenset(
    {
        "singleton",
        "top",
        "bot",
        "some",
        "all",
        "win",
        "box",
        "assertion",
        "role_assertion",
        "inclusion",
        "role_inclusion",
    }
)
_BOOLEAN = frozenset({"neg", "disj", "conj"})

_DESCRIPTIONS = {
    "name": "identifier",
    "singleton": "nominal",
    "ident": "'id'",
    "neg": "'not'",
    "disj": "'or'",
    "conj": "'and'",
    "inclusion": "inclusion",
    "role_inclusion": "role inclusion",
    "assertion": "assertion",
    "role_assertion": "role assertion",
}


@dataclass(eq=False)
class _Term:
    """Sort-free parse tree node; args are identifiers (str) or subterms."""

    kind: str
    args: tuple[Any, ...]
    line: int
    column: int

    @property
    def description(self) -> str:
        return _DESCRIPTIONS.get(self.kind, f"'{self.kind}'")


class _TermBuilder(Transformer):
    """Turns lark trees into _Term nodes, keeping source positions."""

    def __default__(self, data: str, children: list[Any], meta: Any) -> _Term:
        args = tuple(str(child) if isinstance(child, Token) else child for child in children)
        line = getattr(meta, "line", 0) if not getattr(meta, "empty", True) else 0
        column = getattr(meta, "column", 0) if not getattr(meta, "empty", True) else 0
        return _Term(str(data), args, line, column)


class _SortResolver:
    """
    Assigns identifiers to alphabets and converts terms into expressions.

    Raises ParseError where a construct occurs in a position of the wrong
    sort and AlphabetClash where one identifier ends up in two alphabets.
    """

    def __init__(self) -> None:
        self._symbols: dict[str, dict[str, _Term]] = {CONCEPT: {}, ROLE: {}, INDIVIDUAL: {}}
        self._inclusions: list[_Term] = []
        self._inclusion_sorts: dict[_Term, str] = {}

    # Collection

    def collect(self, term: _Term, sort: str) -> None:
        kind, args = term.kind, term.args
        match kind:
            case "name":
                self._symbols[sort].setdefault(args[0], term)
            case "singleton":
                self._individual(args[0], term)
            case "neg":
                self.collect(args[0], sort)
            case "disj" | "conj":
                self.collect(args[0], sort)
                self.collect(args[1], sort)
            case "some" | "all" | "win":
                self.collect(args[0], ROLE)
                self.collect(args[1], CONCEPT)
            case "box" | "test" | "lcyl" | "rcyl":
                self.collect(args[0], CONCEPT)
            case "cross":
                self.collect(args[0], CONCEPT)
                self.collect(args[1], CONCEPT)
            case "inv":
                self.collect(args[0], ROLE)
            case "domr" | "ranr":
                self.collect(args[0], ROLE)
                self.collect(args[1], CONCEPT)
            case "assertion":
                self._individual(args[0], term)
                self.collect(args[1], CONCEPT)
            case "role_assertion":
                self._individual(args[0], term)
                self._individual(args[1], term)
                self.collect(args[2], ROLE)
            case "inclusion":
                self._inclusions.append(term)
            case "role_inclusion":
                self.collect(args[0], ROLE)
                self.collect(args[1], ROLE)

    def _individual(self, name: str, term: _Term) -> None:
        self._symbols[INDIVIDUAL].setdefault(name, term)

    def resolve(self) -> None:
        """Decide the sort of every inclusion, then check the alphabets are disjoint."""
        while self._inclusions:
            decided = [term for term in self._inclusions if self._inclusion_sort(term)]
            if not decided:
                decided = [self._inclusions[0]]
                self._inclusion_sorts[decided[0]] = CONCEPT
            for term in decided:
                self._inclusions.remove(term)
                sort = self._inclusion_sorts.setdefault(term, self._inclusion_sort(term) or CONCEPT)
                self.collect(term.args[0], sort)
                self.collect(term.args[1], sort)
        self._check_alphabets()

    def _inclusion_sort(self, term: _Term) -> str | None:
        return self._classify(term.args[0]) or self._classify(term.args[1])

    def _classify(self, term: _Term) -> str | None:
        if term.kind in _ROLE_ONLY:
            return ROLE
        if term.kind in _CONCEPT_ONLY:
            return CONCEPT
        if term.kind == "name":
            if term.args[0] in self._symbols[ROLE]:
                return ROLE
            if term.args[0] in self._symbols[CONCEPT]:
                return CONCEPT
            return None
        if term.kind in _BOOLEAN:
            for arg in term.args:
                sort = self._classify(arg)
                if sort is not None:
                    return sort
        return None

    def _check_alphabets(self) -> None:
        for name in sorted(set().union(*(table.keys() for table in self._symbols.values()))):
            kinds = tuple(kind for kind, table in self._symbols.items() if name in table)
            if len(kinds) > 1:
                raise AlphabetClash(name, kinds)

    # Conversion

    def concept(self, term: _Term) -> Concept:
        args = term.args
        match term.kind:
            case "name":
                return AtomicConcept(args[0])
            case "singleton":
                return Singleton(args[0])
            case "top":
                return Top()
            case "bot":
                return Bottom()
            case "neg":
                return Not(self.concept(args[0]))
            case "disj":
                return Or(self.concept(args[0]), self.concept(args[1]))
            case "conj":
                return And(self.concept(args[0]), self.concept(args[1]))
            case "some":
                return Exists(self.role(args[0]), self.concept(args[1]))
            case "all":
                return Forall(self.role(args[0]), self.concept(args[1]))
            case "win":
                return Window(self.role(args[0]), self.concept(args[1]))
            case "box":
                return Box(self.concept(args[0]))
            case "assertion":
                return Assertion(args[0], self.concept(args[1]))
            case "role_assertion":
                return RoleAssertion(args[0], args[1], self.role(args[2]))
            case "inclusion":
                if self._inclusion_sorts.get(term) == ROLE:
                    return RIncl(self.role(args[0]), self.role(args[1]))
                return Incl(self.concept(args[0]), self.concept(args[1]))
            case "role_inclusion":
                return RIncl(self.role(args[0]), self.role(args[1]))
        raise _sort_error(term, CONCEPT)

    def role(self, term: _Term) -> Role:
        args = term.args
        match term.kind:
            case "name":
                return AtomicRole(args[0])
            case "ident":
                return Id()
            case "topr":
                return TopRole()
            case "botr":
                return BottomRole()
            case "div":
                return Div()
            case "neg":
                return RoleNot(self.role(args[0]))
            case "disj":
                return RoleOr(self.role(args[0]), self.role(args[1]))
            case "conj":
                return RoleAnd(self.role(args[0]), self.role(args[1]))
            case "inv":
                return Inverse(self.role(args[0]))
            case "test":
                return Test(self.concept(args[0]))
            case "domr":
                return DomRestrict(self.role(args[0]), self.concept(args[1]))
            case "ranr":
                return RanRestrict(self.role(args[0]), self.concept(args[1]))
            case "lcyl":
                return LeftCyl(self.concept(args[0]))
            case "rcyl":
                return RightCyl(self.concept(args[0]))
            case "cross":
                return Cross(self.concept(args[0]), self.concept(args[1]))
        raise _sort_error(term, ROLE)


def _sort_error(term: _Term, expected: str) -> ParseError:
    return ParseError(term.line, term.column, f"expected a {expected}, found {term.description}")


def _parse_tree(text: str, start: str) -> _Term:
    try:
        tree = _PARSER.parse(text, start=start)
    except UnexpectedToken as exc:
        found = "end of input" if exc.token.type == "$END" else f"'{exc.token}'"
        line, column = _position(text, exc)
        raise ParseError(line, column, f"unexpected {found}") from None
    except UnexpectedCharacters as exc:
        line, column = _position(text, exc)
        raise ParseError(line, column, f"unexpected character '{exc.char}'") from None
    except UnexpectedInput as exc:
        line, column = _position(text, exc)
        raise ParseError(line, column, "unexpected end of input") from None
    result = _TermBuilder().transform(tree)
    assert isinstance(result, _Term)
    _inherit_positions(result, 1, 1)
    return result


def _inherit_positions(term: _Term, line: int, column: int) -> None:
    """Keyword-only nodes carry no position of their own; use the enclosing one."""
    if term.line < 1:
        term.line, term.column = line, column
    for arg in term.args:
        if isinstance(arg, _Term):
            _inherit_positions(arg, term.line, term.column)


def _position(text: str, exc: UnexpectedInput) -> tuple[int, int]:
    line = getattr(exc, "line", -1)
    column = getattr(exc, "column", -1)
    if line is None or line < 1:
        lines = text.splitlines() or [""]
        return len(lines), len(lines[-1]) + 1
    return line, column


def parse_problem(text: str) -> Problem:
    """
    Parse the contents of a .albo file.

    Args:
        text: Statements separated by ';'

    Returns:
        The problem, statements in source order

    Raises:
        ParseError: On malformed input or a construct of the wrong sort
        AlphabetClash: If an identifier is used in two alphabets
    """
    statements = _parse_tree(text, "problem").args
    resolver = _SortResolver()
    for statement in statements:
        match statement.kind:
            case "goal":
                resolver.collect(statement.args[0], CONCEPT)
            case "una":
                pass
            case _:
                resolver.collect(statement, CONCEPT)
    resolver.resolve()

    problem = Problem()
    for statement in statements:
        match statement.kind:
            case "goal":
                problem.goals.append(resolver.concept(statement.args[0]))
            case "una":
                problem.una = True
            case "inclusion" | "role_inclusion":
                inclusion = resolver.concept(statement)
                if isinstance(inclusion, RIncl):
                    problem.rbox.append(inclusion)
                else:
                    assert isinstance(inclusion, Incl)
                    problem.tbox.append(inclusion)
            case "assertion" | "role_assertion":
                assertion = resolver.concept(statement)
                assert isinstance(assertion, Assertion | RoleAssertion)
                problem.abox.append(assertion)
    return problem


def parse_concept(text: str) -> Concept:
    """Parse a single concept expression."""
    term = _parse_tree(text, "term")
    resolver = _SortResolver()
    resolver.collect(term, CONCEPT)
    resolver.resolve()
    return resolver.concept(term)


def parse_role(text: str) -> Role:
    """Parse a single role expression."""
    term = _parse_tree(text, "term")
    resolver = _SortResolver()
    resolver.collect(term, ROLE)
    resolver.resolve()
    return resolver.role(term)


def read_problem(path: str | Path) -> Problem:
    """Read and parse a problem file."""
    return parse_problem(Path(path).read_text(encoding="utf-8"))
