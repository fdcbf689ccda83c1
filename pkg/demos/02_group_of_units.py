"""Invertibility and the group of units.

A word is invertible when it represents a unit of the monoid.  Every
relator factors uniquely into minimal invertible pieces, and those
pieces generate the whole group of units, which gives a concrete test
for triviality.  For systems without any overlap between relators there
is a certified shortcut: each relator is itself a single minimal piece,
all pieces equal the identity, and the group of units is trivial.

Run with:  python demos/02_group_of_units.py
"""

from specmon import (
    SpecialSystem,
    delta_set,
    invertibility,
    minimal_factorization,
    random_overlap_free_system,
    units_trivial,
)

bicyclic = SpecialSystem.from_words(["a", "b"], ["ab"])
z2 = SpecialSystem.from_words(["a"], ["aa"])
zint = SpecialSystem.from_words(["a", "b"], ["ab", "ba"])

# One-sided invertibility in the bicyclic monoid: ab = 1 makes 'a'
# right invertible but nothing undoes it from the left.
report = invertibility(bicyclic, bicyclic.word("a"))
print("bicyclic 'a':", f"right={report.right} left={report.left} via {report.method}")

# In the integers both generators are two-sided units.
report = invertibility(zint, zint.word("a"))
print("integers 'a':", f"right={report.right} left={report.left} via {report.method}")
print()

# Minimal factorizations of the relators.
for system, name in ((bicyclic, "bicyclic"), (z2, "z2"), (zint, "integers")):
    for relator in system.relators:
        factors = minimal_factorization(system, relator)
        rendered = " | ".join(system.render(f) for f in factors)
        print(f"{name}: {system.render(relator)} factors as {rendered}")
print()

# The units verdicts.  The bicyclic monoid is overlap-free, so the
# shortcut applies; the other two have overlaps and real units.
for system, name in ((bicyclic, "bicyclic"), (z2, "z2"), (zint, "integers")):
    report = units_trivial(system)
    line = f"{name}: units {report.verdict} (certificate: {report.certificate})"
    if report.witness is not None:
        line += f", witness {system.render(report.witness)}"
    print(line)
print()

# The delta set: minimal words equal to some factor and no longer.
for system, name in ((z2, "z2"), (zint, "integers")):
    rendered = sorted(system.render(w) for w in delta_set(system))
    print(f"{name}: delta set {rendered}")
print()

# The shortcut at scale: a generated overlap-free system with many
# rules gets its verdict instantly, no grammar or search involved.
big = random_overlap_free_system(0, min_rules=71, max_rules=71, min_interior=1, max_interior=18)
report = units_trivial(big)
print(f"71-rule generated system: units {report.verdict} via {report.certificate}")

# Both routes agree wherever both apply; forcing the slow route on an
# overlap-free system reproduces the same factorizations.
small = random_overlap_free_system(1)
fast = units_trivial(small)
slow = units_trivial(small, use_lemma_fast_path=False)
print(
    f"{len(small.relators)}-rule system: fast={fast.verdict}/{fast.certificate}"
    f" slow={slow.verdict}/{slow.certificate}"
    f" same factorizations: {fast.factorizations == slow.factorizations}"
)
