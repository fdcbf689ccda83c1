import random

import pytest

from specmon import (
    BudgetExceeded,
    EquationSystem,
    NotConfluent,
    ParseError,
    UndeclaredVariable,
    UnknownSymbol,
    check,
    normal_form,
    parse_equations,
    render_equations,
    solve_bounded,
    substitute,
)
from helpers import random_word


def test_substitute_examples():
    assert substitute(("x", 0, "y"), {"x": (), "y": (1,)}) == (0, 1)
    assert substitute((0, 0), {}) == (0, 0)
    assert substitute(("x", "x"), {"x": (0, 1)}) == (0, 1, 0, 1)


def test_substitute_missing_variable():
    with pytest.raises(UndeclaredVariable):
        substitute(("x",), {})


def test_check_examples(bicyclic):
    equations = EquationSystem(("x", "y"), ((("x", 0, "y"), ()),))
    assert check(bicyclic, equations, {"x": (), "y": (1,)}) is True
    assert check(bicyclic, equations, {"x": (1,), "y": (1,)}) is False
    reflexive = EquationSystem(("x",), ((("x",), ("x",)),))
    assert check(bicyclic, reflexive, {"x": ()}) is True


def test_check_needs_confluence(nonconfluent):
    equations = EquationSystem(("x",), ((("x",), ("x",)),))
    with pytest.raises(NotConfluent):
        check(nonconfluent, equations, {"x": ()})


def test_solve_finds_least_assignment(bicyclic):
    equations = EquationSystem(("x", "y"), ((("x", 0, "y"), ()),))
    result = solve_bounded(bicyclic, equations, 1)
    assert result.status == "solution"
    assert result.assignment == {"x": (), "y": (1,)}
    # assignments are tried in shortlex order per variable, first
    # variable slowest: (., .), (., a), (., b)
    assert result.checked == 3
    assert check(bicyclic, equations, result.assignment)


def test_solve_unsatisfiable_certificate(bicyclic):
    equations = EquationSystem(("x",), (((1, "x"), ()),))
    result = solve_bounded(bicyclic, equations, 4)
    assert result.status == "unsatisfiable"
    assert result.certificate == "b ∉ Prefix(WP)"
    assert result.checked == 0
    # reconfirmed by exhaustive search two lengths past the bound
    confirm = solve_bounded(bicyclic, equations, 6, certificates=False)
    assert confirm.status == "no_solution_within_bound"


def test_solve_suffix_certificate(bicyclic):
    equations = EquationSystem(("x",), ((("x", 0), ()),))
    result = solve_bounded(bicyclic, equations, 4)
    assert result.status == "unsatisfiable"
    assert result.certificate == "a ∉ Suffix(WP)"
    confirm = solve_bounded(bicyclic, equations, 6, certificates=False)
    assert confirm.status == "no_solution_within_bound"


def test_solve_solvable_one_variable_patterns(bicyclic, z2):
    # a x = 1 over the bicyclic monoid: x = b
    equations = EquationSystem(("x",), (((0, "x"), ()),))
    result = solve_bounded(bicyclic, equations, 1)
    assert result.status == "solution" and result.assignment == {"x": (1,)}
    # a x = 1 over z2: x = a
    equations = EquationSystem(("x",), (((0, "x"), ()),))
    result = solve_bounded(z2, equations, 1)
    assert result.status == "solution" and result.assignment == {"x": (0,)}
    # x b = 1 over the bicyclic monoid: x = a
    equations = EquationSystem(("x",), ((("x", 1), ()),))
    result = solve_bounded(bicyclic, equations, 1)
    assert result.status == "solution" and result.assignment == {"x": (0,)}


def test_solve_identity_equation_at_zero_bound(bicyclic):
    equations = EquationSystem(("x",), ((("x",), ("x",)),))
    result = solve_bounded(bicyclic, equations, 0)
    assert result.status == "solution"
    assert result.assignment == {"x": ()}


def test_solve_reports_bound_exhaustion(bicyclic):
    # ba = 1 has no solution and no certificate pattern applies
    equations = EquationSystem(("x",), (((1, 0, "x"), ("x", "x")),))
    result = solve_bounded(bicyclic, equations, 1)
    assert result.status == "no_solution_within_bound"
    assert result.checked == 3


def test_solve_budget(bicyclic):
    equations = EquationSystem(("x", "y", "z"), ((("x", "y", "z"), ()),))
    with pytest.raises(BudgetExceeded):
        solve_bounded(bicyclic, equations, 4, budget=10)


def test_solve_needs_confluence(nonconfluent):
    equations = EquationSystem(("x",), ((("x",), ("x",)),))
    with pytest.raises(NotConfluent):
        solve_bounded(nonconfluent, equations, 1)


def test_solutions_are_irreducible_and_sound(bicyclic, zint):
    # random equation systems; every returned solution passes check()
    rng = random.Random(7)
    for system in (bicyclic, zint):
        n = len(system.alphabet)
        for _ in range(30):
            names = ("x", "y")[: rng.randint(1, 2)]
            def side():
                out = []
                for _ in range(rng.randint(0, 4)):
                    if rng.random() < 0.4:
                        out.append(rng.choice(names))
                    else:
                        out.append(rng.randrange(n))
                return tuple(out)
            equations = EquationSystem(names, tuple((side(), side()) for _ in range(rng.randint(1, 2))))
            result = solve_bounded(system, equations, 2)
            if result.status == "solution":
                assert check(system, equations, result.assignment)
                for word in result.assignment.values():
                    assert normal_form(system, word) == word


def test_canonical_completeness_at_bound(bicyclic, zint):
    # restricting candidates to irreducible words loses nothing: the
    # solver reports a solution exactly when a brute-force scan over ALL
    # words (reducible ones included) finds one at the same bound
    from helpers import words_upto

    rng = random.Random(8)
    for system in (bicyclic, zint):
        n = len(system.alphabet)
        for _ in range(20):
            def side():
                return tuple(
                    rng.choice(("x", "y")) if rng.random() < 0.4 else rng.randrange(n)
                    for _ in range(rng.randint(0, 3))
                )
            equations = EquationSystem(("x", "y"), ((side(), side()),))
            brute_found = any(
                check(system, equations, {"x": u, "y": v})
                for u in words_upto(n, 2)
                for v in words_upto(n, 2)
            )
            result = solve_bounded(system, equations, 2, certificates=False)
            assert (result.status == "solution") == brute_found


def test_equation_system_validation():
    with pytest.raises(ParseError):
        EquationSystem(("x",), ())
    with pytest.raises(UndeclaredVariable):
        EquationSystem(("x",), ((("y",), ()),))
    with pytest.raises(ParseError):
        EquationSystem(("x", "x"), ((("x",), ()),))


def test_parse_equations(bicyclic):
    text = "# solve around a\nvars: x y\neq: x a y = .\neq: x = x\n"
    equations = parse_equations(bicyclic.alphabet, text)
    assert equations.variables == ("x", "y")
    assert equations.equations[0] == (("x", 0, "y"), ())
    assert equations.equations[1] == (("x",), ("x",))


def test_parse_equations_round_trip(bicyclic):
    text = "vars: x y\neq: x a y = .\neq: a a = x\n"
    equations = parse_equations(bicyclic.alphabet, text)
    assert parse_equations(bicyclic.alphabet, render_equations(bicyclic.alphabet, equations)) == equations


def test_parse_equations_errors(bicyclic):
    with pytest.raises(ParseError):
        parse_equations(bicyclic.alphabet, "eq: a = .")
    with pytest.raises(ParseError):
        parse_equations(bicyclic.alphabet, "vars: x\neq: a .")
    with pytest.raises(UnknownSymbol) as info:
        parse_equations(bicyclic.alphabet, "vars: x\neq: x q = .")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_equations(bicyclic.alphabet, "vars: x\nvars: y\neq: x = .")
    with pytest.raises(ParseError):
        parse_equations(bicyclic.alphabet, "vars: x\n")


def test_variables_shadow_symbols(bicyclic):
    # a token naming a declared variable is a variable even if an
    # alphabet symbol spells the same
    equations = parse_equations(bicyclic.alphabet, "vars: a\neq: a b = .\n")
    assert equations.equations[0][0] == ("a", 1)
