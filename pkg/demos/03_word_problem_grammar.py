"""The context-free language of words equal to the identity.

For a confluent special system the word problem {w : w = 1} is a
context-free language with a Dyck-flavored grammar: S produces nothing,
S S, or a relator with S squeezed between consecutive letters.  This
demo builds the grammar, tests membership with CYK, enumerates the
language, and cross-checks everything against the exhaustive rewriting
oracle.

Run with:  python demos/03_word_problem_grammar.py
"""

from itertools import product

from specmon import (
    SpecialSystem,
    enumerate_words,
    erasable_oracle,
    member,
    prefix_closure,
    suffix_closure,
    to_cnf,
    wp_grammar,
)
from specmon.wp_language import render_grammar

bicyclic = SpecialSystem.from_words(["a", "b"], ["ab"])

grammar = wp_grammar(bicyclic)
print("grammar of the bicyclic word problem:")
print(render_grammar(grammar))

cnf = to_cnf(grammar)
print(f"Chomsky normal form has {len(cnf.productions)} productions")
print()

for text in ("ab", "aabb", "abab", "ba", "b", "."):
    word = bicyclic.word(text)
    print(f"member({text!r}) = {member(grammar, word)}")
print()

print("language up to length 6:")
for word in enumerate_words(grammar, 6):
    print("  ", bicyclic.render(word))
print()

# The grammar is validated against an oracle that knows nothing about
# grammars: exhaustive memoized search over all rewrite sequences.
disagreements = 0
total = 0
for length in range(9):
    for letters in product(range(2), repeat=length):
        total += 1
        if member(grammar, letters) != erasable_oracle(bicyclic, letters):
            disagreements += 1
print(f"grammar vs oracle on all {total} words up to length 8: {disagreements} disagreements")
print()

# Prefix and suffix closures answer one-sided invertibility: p is a
# prefix of the language iff something completes p to the identity.
prefixes = prefix_closure(grammar)
suffixes = suffix_closure(grammar)
for text in ("a", "aab", "b"):
    word = bicyclic.word(text)
    print(
        f"{text!r}: extendable to 1 on the right: {member(prefixes, word)},"
        f" on the left: {member(suffixes, word)}"
    )
