"""Rewriting, overlaps, and confluence on three small monoids.

A special presentation turns each relation u = 1 into a deletion rule:
any occurrence of u may be erased.  Deletions strictly shorten words,
so normal forms always exist; whether they are unique is exactly the
confluence question, and confluence is decided by inspecting overlaps
between relators.

Run with:  python demos/01_rewriting_and_confluence.py
"""

from specmon import (
    SpecialSystem,
    critical_pairs,
    descendants,
    is_confluent,
    is_overlap_free,
    normal_form,
    overlaps,
    rewrite_step,
)

bicyclic = SpecialSystem.from_words(["a", "b"], ["ab"])
z2 = SpecialSystem.from_words(["a"], ["aa"])
zint = SpecialSystem.from_words(["a", "b"], ["ab", "ba"])


def show(system, name):
    print(f"== {name} ==")
    print("relators:", ", ".join(system.render(r) for r in system.relators))
    for overlap in overlaps(system):
        print(
            f"  overlap {overlap.kind} between rules"
            f" {overlap.left_rule} and {overlap.right_rule}"
            f" inside {system.render(overlap.word)}"
        )
    for pair in critical_pairs(system):
        print(
            f"  critical pair: {system.render(pair.left_reduct)}"
            f" vs {system.render(pair.right_reduct)}"
        )
    print("overlap-free:", is_overlap_free(system))
    print("confluent:", is_confluent(system))
    print()


show(bicyclic, "bicyclic monoid <a,b | ab=1>")
show(z2, "order-two group <a | aa=1>")
show(zint, "integers <a,b | ab=1, ba=1>")

# Normal forms step by step on the bicyclic monoid.
word = bicyclic.word("aabbab")
print("rewriting", bicyclic.render(word))
current = word
while True:
    step = rewrite_step(bicyclic, current)
    if step is None:
        break
    current, pos, rule = step
    print(f"  delete rule {rule} at position {pos} ->", bicyclic.render(current))
print("normal form:", bicyclic.render(normal_form(bicyclic, word)))
print()

# Confluence means: however you rewrite, you end in the same place.
# The full descendant set of a word makes that visible.
word = zint.word("aba")
reachable = sorted(descendants(zint, word), key=len)
print(f"everything reachable from {zint.render(word)} over the integers:")
for w in reachable:
    print("  ", zint.render(w))

# A non-confluent example: bc = 1 makes 'a' equal to the identity
# (a bc = abc = 1), yet no deletion applies to the bare word 'a'.
nonconf = SpecialSystem.from_words(["a", "b", "c"], ["abc", "bc"])
print()
print("non-confluent <a,b,c | abc=1, bc=1>:")
print("confluent:", is_confluent(nonconf))
[pair] = critical_pairs(nonconf)
print(
    "unjoinable pair:",
    repr(nonconf.render(pair.left_reduct)),
    "vs",
    repr(nonconf.render(pair.right_reduct)),
)
