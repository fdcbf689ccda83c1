"""Bounded search for word equations, with exact refutations.

No general algorithm decides solvability of equation systems over these
monoids, so the solver enumerates assignments of irreducible words up
to a length bound and says exactly what it did.  Two shapes escape the
bound entirely: w x = 1 is solvable iff w is right invertible, and
x w = 1 iff w is left invertible, both decided by the word-problem
grammar closures; a failed membership is a certificate that no bound
would ever help.

Run with:  python demos/04_word_equations.py
"""

from specmon import SpecialSystem, check, parse_equations, solve_bounded

bicyclic = SpecialSystem.from_words(["a", "b"], ["ab"])

equations = parse_equations(
    bicyclic.alphabet,
    """
    vars: x y
    eq: x a y = .
    """,
)
result = solve_bounded(bicyclic, equations, 1)
print("solve  x a y = 1  with components up to length 1:")
print("  status:", result.status)
assignment = {name: bicyclic.render(word) for name, word in result.assignment.items()}
print("  assignment:", assignment, f"after {result.checked} candidates")
print("  check():", check(bicyclic, equations, result.assignment))
print()

# An unsolvable shape with a certificate: nothing erasable starts with
# b, so b x = 1 can never hold, at any bound.
equations = parse_equations(bicyclic.alphabet, "vars: x\neq: b x = .\n")
result = solve_bounded(bicyclic, equations, 4)
print("solve  b x = 1:")
print("  status:", result.status)
print("  certificate:", result.certificate)
print()

# The same question without certificates falls back to plain search and
# can only report that the bound was exhausted.
result = solve_bounded(bicyclic, equations, 6, certificates=False)
print("same equation, certificates disabled, bound 6:")
print(f"  status: {result.status} after {result.checked} candidates")
print()

# Systems of several equations work the same way: the second equation
# pins x to a, and the first then forces y to be a right inverse of a.
equations = parse_equations(
    bicyclic.alphabet,
    """
    vars: x y
    eq: x y = .
    eq: a x = a a
    """,
)
result = solve_bounded(bicyclic, equations, 2)
print("solve  x y = 1  and  a x = a a:")
print("  status:", result.status)
if result.assignment is not None:
    print("  assignment:", {n: bicyclic.render(w) for n, w in result.assignment.items()})
