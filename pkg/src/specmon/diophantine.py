"""Word equations over a presented special monoid.

No general decision procedure exists for these monoids, so the solver
is an explicit bounded search: assignments of irreducible words up to a
length cap, tried in shortlex order per variable, with the exact number
of assignments examined reported back.  Two one-variable shapes are
decided exactly instead of searched: ``w x = 1`` is solvable iff w is
right invertible (membership in the prefix closure of the word-problem
language), and ``x w = 1`` iff w is left invertible; a failed membership
becomes an unsatisfiability certificate.

Equation file format::

    vars: x y
    eq: x a y = .

Tokens are whitespace separated and ``.`` is the empty word; a token
naming a declared variable is a variable, anything else must be an
alphabet symbol.  Sides may mix variables and constants freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .errors import NotConfluent, ParseError, UndeclaredVariable, UnknownSymbol
from .errors import BudgetExceeded
from .presentation import Alphabet, SpecialSystem, Word, render_word
from .rewrite import irreducible_words, is_confluent, normal_form
from .wp_language import _prefix_cnf, _suffix_cnf, member

Side = tuple[int | str, ...]

Assignment = Mapping[str, Word]

DEFAULT_CHECK_BUDGET = 10**7

SOLUTION = "solution"
NO_SOLUTION_WITHIN_BOUND = "no_solution_within_bound"
UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class EquationSystem:
    """Equations between token sequences; int tokens are alphabet
    indices, str tokens are declared variables."""

    variables: tuple[str, ...]
    equations: tuple[tuple[Side, Side], ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(
            self,
            "equations",
            tuple((tuple(lhs), tuple(rhs)) for lhs, rhs in self.equations),
        )
        if len(set(self.variables)) != len(self.variables):
            raise ParseError("duplicate variable name")
        if not self.equations:
            raise ParseError("an equation system needs at least one equation")
        declared = set(self.variables)
        for lhs, rhs in self.equations:
            for token in (*lhs, *rhs):
                if isinstance(token, str) and token not in declared:
                    raise UndeclaredVariable(f"undeclared variable {token!r}")


@dataclass(frozen=True)
class SolveResult:
    status: str
    assignment: dict[str, Word] | None
    checked: int
    certificate: str | None

    def as_json(self, alphabet: Alphabet) -> dict:
        return {
            "status": self.status,
            "assignment": None
            if self.assignment is None
            else {
                name: render_word(alphabet, word)
                for name, word in self.assignment.items()
            },
            "checked": self.checked,
            "certificate": self.certificate,
        }


def substitute(side: Side, assignment: Assignment) -> Word:
    """Replace variables by their assigned words, keeping constants."""
    letters: list[int] = []
    for token in side:
        if isinstance(token, int):
            letters.append(token)
        else:
            try:
                letters.extend(assignment[token])
            except KeyError:
                raise UndeclaredVariable(f"no value assigned to {token!r}") from None
    return tuple(letters)


def check(system: SpecialSystem, equations: EquationSystem, assignment: Assignment) -> bool:
    """True iff every equation holds in the monoid under the assignment."""
    if not is_confluent(system):
        raise NotConfluent("equality is decided by normal forms, which needs confluence")
    return all(
        normal_form(system, substitute(lhs, assignment))
        == normal_form(system, substitute(rhs, assignment))
        for lhs, rhs in equations.equations
    )


def _one_variable_certificate(system: SpecialSystem, equations: EquationSystem) -> str | None:
    """Exact unsatisfiability for ``w x = 1`` and ``x w = 1``.

    ``w x = 1`` has a solution iff w is right invertible, which for a
    confluent system is membership of w in the prefix closure of the
    word-problem language; dually for ``x w = 1`` and the suffix
    closure.
    """
    if len(equations.equations) != 1:
        return None
    lhs, rhs = equations.equations[0]
    for side, other in ((lhs, rhs), (rhs, lhs)):
        if other or not side:
            continue
        if isinstance(side[-1], str) and all(isinstance(t, int) for t in side[:-1]):
            constant: Word = tuple(side[:-1])  # type: ignore[arg-type]
            if not member(_prefix_cnf(system), constant):
                return f"{render_word(system.alphabet, constant)} ∉ Prefix(WP)"
        if isinstance(side[0], str) and all(isinstance(t, int) for t in side[1:]):
            constant = tuple(side[1:])  # type: ignore[arg-type]
            if not member(_suffix_cnf(system), constant):
                return f"{render_word(system.alphabet, constant)} ∉ Suffix(WP)"
    return None


def solve_bounded(
    system: SpecialSystem,
    equations: EquationSystem,
    maxlen: int,
    *,
    budget: int = DEFAULT_CHECK_BUDGET,
    certificates: bool = True,
) -> SolveResult:
    """Bounded semi-decision for solvability.

    Tries assignments of irreducible words of length <= maxlen per
    variable (every solution equals its normal-form image, so nothing is
    lost) in shortlex order per variable, first variable slowest, and
    returns the first satisfying assignment.  When the single-variable
    certificate rule applies, returns Unsatisfiable with the certificate
    instead of searching.
    """
    if not is_confluent(system):
        raise NotConfluent("bounded solving needs a confluent system")
    if certificates:
        certificate = _one_variable_certificate(system, equations)
        if certificate is not None:
            return SolveResult(UNSATISFIABLE, None, 0, certificate)
    candidates = irreducible_words(system, maxlen)
    names = equations.variables
    total = len(candidates) ** len(names)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate assignments, budget {budget}")
    checked = 0
    for combo in product(candidates, repeat=len(names)):
        checked += 1
        assignment = dict(zip(names, combo))
        if all(
            normal_form(system, substitute(lhs, assignment))
            == normal_form(system, substitute(rhs, assignment))
            for lhs, rhs in equations.equations
        ):
            return SolveResult(SOLUTION, assignment, checked, None)
    return SolveResult(NO_SOLUTION_WITHIN_BOUND, None, checked, None)


def parse_equations(alphabet: Alphabet, text: str) -> EquationSystem:
    """Parse the equation file format against a known alphabet."""
    variables: tuple[str, ...] | None = None
    equations: list[tuple[Side, Side]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError("expected 'vars:' or 'eq:'", line=lineno)
        if key == "vars":
            if variables is not None:
                raise ParseError("duplicate vars line", line=lineno)
            names = tuple(rest.split())
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", line=lineno)
            variables = names
        elif key == "eq":
            if variables is None:
                raise ParseError("vars line must come before equations", line=lineno)
            tokens = rest.split()
            if tokens.count("=") != 1:
                raise ParseError("an equation needs exactly one '='", line=lineno)
            split = tokens.index("=")
            try:
                sides = (
                    _parse_side(alphabet, variables, tokens[:split]),
                    _parse_side(alphabet, variables, tokens[split + 1:]),
                )
            except UnknownSymbol as exc:
                raise UnknownSymbol(exc.message, line=lineno) from None
            equations.append(sides)
        else:
            raise ParseError(f"unknown directive {key!r}", line=lineno)
    if variables is None:
        raise ParseError("missing vars line")
    return EquationSystem(variables, tuple(equations))


def _parse_side(alphabet: Alphabet, variables: tuple[str, ...], tokens: list[str]) -> Side:
    side: list[int | str] = []
    for token in tokens:
        if token == ".":
            continue
        if token in variables:
            side.append(token)
        else:
            side.append(alphabet.index(token))
    return tuple(side)


def render_equations(alphabet: Alphabet, equations: EquationSystem) -> str:
    """Inverse of parse_equations."""

    def side_text(side: Side) -> str:
        if not side:
            return "."
        return " ".join(
            alphabet.symbols[t] if isinstance(t, int) else t for t in side
        )

    lines = ["vars: " + " ".join(equations.variables)]
    lines.extend(
        f"eq: {side_text(lhs)} = {side_text(rhs)}" for lhs, rhs in equations.equations
    )
    return "\n".join(lines) + "\n"
