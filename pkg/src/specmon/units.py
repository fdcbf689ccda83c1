"""Invertibility and the group of units of a special monoid.

A word is right invertible when some word extends it to the identity,
so for confluent systems right invertibility is exactly membership in
the prefix closure of the word-problem language (and left invertibility
in the suffix closure).  Two structural facts need no grammar at all:
every prefix of a relator is right invertible and every suffix is left
invertible, because the remaining piece completes the relator.

The group-of-units decision has a certified fast path: in a system
whose relators admit no overlap at all, each relator is a single
minimal invertible word, the minimal factors generate the units, and
every factor equals the identity, so the group of units is trivial.
On confluent systems that do have overlaps, the verdict falls back to
computing the minimal factors of every relator and checking their
normal forms directly; on non-confluent systems it is Unknown.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import chain, product

from .errors import BudgetExceeded, NotConfluent, NotInvertible
from .presentation import Alphabet, SpecialSystem, Word, length_lex_key, render_word
from .rewrite import (
    DEFAULT_WORD_BUDGET,
    is_confluent,
    is_overlap_free,
    normal_form,
)
from .wp_language import _prefix_cnf, _suffix_cnf, erasable_oracle, member

GRAMMAR = "grammar"
BOUNDED_SEARCH = "bounded_search"
RELATOR_PREFIX = "relator_prefix"

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"
UNKNOWN = "unknown"

OVERLAP_FREE_LEMMA = "overlap_free_lemma"
GENERATOR_CHECK = "generator_check"

DEFAULT_SEARCH_BOUND = 8


@dataclass(frozen=True)
class Invertibility:
    """One-sided invertibility verdicts: True, False, or None (unknown).

    ``method`` names the machinery that settled the report: the
    relator prefix/suffix fast path, the grammar closures (exact, only
    on confluent systems), or the bounded bidirectional search (which
    can return None when the bound runs out).
    """

    right: bool | None
    left: bool | None
    method: str

    def two_sided(self) -> bool | None:
        # a left inverse and a right inverse of the same element coincide
        if self.right and self.left:
            return True
        if self.right is False or self.left is False:
            return False
        return None


@dataclass(frozen=True)
class UnitsReport:
    """Minimal invertible factors of the relators and the units verdict.

    ``delta_set`` is None unless its enumeration was requested: the
    candidate space is exponential in the longest factor and is not
    needed for the verdict.
    """

    lambda_set: frozenset[Word]
    delta_set: frozenset[Word] | None
    factorizations: tuple[tuple[Word, ...], ...]
    verdict: str
    witness: Word | None
    certificate: str | None

    def as_json(self, alphabet: Alphabet) -> dict:
        def words(items) -> list[str]:
            return [render_word(alphabet, w) for w in sorted(items, key=length_lex_key)]

        return {
            "verdict": self.verdict,
            "certificate": self.certificate,
            "lambda": words(self.lambda_set),
            "delta": None if self.delta_set is None else words(self.delta_set),
            "witness": None if self.witness is None else render_word(alphabet, self.witness),
            "factorizations": [
                [render_word(alphabet, factor) for factor in factors]
                for factors in self.factorizations
            ],
        }


def _is_relator_prefix(system: SpecialSystem, word: Word) -> bool:
    return any(relator[:len(word)] == word for relator in system.relators)


def _is_relator_suffix(system: SpecialSystem, word: Word) -> bool:
    return any(
        len(relator) >= len(word) and relator[len(relator) - len(word):] == word
        for relator in system.relators
    )


def invertibility(system: SpecialSystem, word: Word, bound: int | None = None) -> Invertibility:
    """Classify left/right invertibility of the element the word represents.

    The structural fast path applies in any special monoid.  Confluent
    systems are then decided exactly by the closure grammars; otherwise
    a bounded search looks for witnesses up to ``bound`` extra letters
    per side and may leave a side unknown.
    """
    right = True if not word or _is_relator_prefix(system, word) else None
    left = True if not word or _is_relator_suffix(system, word) else None
    if right and left:
        return Invertibility(True, True, RELATOR_PREFIX)
    if is_confluent(system):
        if right is None:
            right = member(_prefix_cnf(system), word)
        if left is None:
            left = member(_suffix_cnf(system), word)
        return Invertibility(right, left, GRAMMAR)
    limit = DEFAULT_SEARCH_BOUND if bound is None else bound
    if right is None:
        right = _search_one_side(system, word, limit, append_right=True)
    if left is None:
        left = _search_one_side(system, word, limit, append_right=False)
    return Invertibility(right, left, BOUNDED_SEARCH)


def _search_one_side(system: SpecialSystem, word: Word, bound: int, append_right: bool) -> bool | None:
    """True when some completion of length <= bound erases the word;
    None when the bound is exhausted (erasure implies identity in any
    special monoid, so a found witness is conclusive)."""
    n_letters = len(system.alphabet)
    for length in range(bound + 1):
        for extra in product(range(n_letters), repeat=length):
            candidate = word + extra if append_right else tuple(extra) + word
            if erasable_oracle(system, candidate):
                return True
    return None


def minimal_factorization(system: SpecialSystem, word: Word) -> list[Word]:
    """Factor an invertible word into minimal invertible pieces.

    Greedy: repeatedly cut the shortest nonempty invertible prefix.  The
    minimal invertible words form a biprefix code, so the factorization
    is unique.
    """
    if not is_confluent(system):
        raise NotConfluent("minimal factorization needs a confluent system")
    if invertibility(system, word).two_sided() is not True:
        raise NotInvertible(f"{render_word(system.alphabet, word)!r} is not invertible")
    factors: list[Word] = []
    rest = word
    while rest:
        for cut in range(1, len(rest) + 1):
            prefix = rest[:cut]
            if invertibility(system, prefix).two_sided() is True:
                factors.append(prefix)
                rest = rest[cut:]
                break
        else:
            # unreachable: the remainder of an invertible word is invertible
            raise NotInvertible("no invertible prefix found")
    return factors


def lambda_set(system: SpecialSystem) -> frozenset[Word]:
    """Union of the minimal factors over all relators."""
    return frozenset(
        chain.from_iterable(minimal_factorization(system, r) for r in system.relators)
    )


def delta_set(system: SpecialSystem, budget: int = DEFAULT_WORD_BUDGET) -> frozenset[Word]:
    """Minimal words no longer than, and equal in the monoid to, some
    minimal factor.

    Candidates are all nonempty words up to the longest factor length
    (not only irreducible ones); equality is decided by normal forms and
    minimality by invertibility of proper prefixes.
    """
    if not is_confluent(system):
        raise NotConfluent("delta set needs a confluent system")
    factors = lambda_set(system)
    if not factors:
        return frozenset()
    longest = max(len(f) for f in factors)
    n_letters = len(system.alphabet)
    total = sum(n_letters**length for length in range(1, longest + 1))
    if total > budget:
        raise BudgetExceeded(f"delta candidate space has {total} words, budget {budget}")
    result: set[Word] = set()
    for length in range(1, longest + 1):
        targets = {normal_form(system, f) for f in factors if len(f) >= length}
        if not targets:
            break
        for candidate in product(range(n_letters), repeat=length):
            if normal_form(system, candidate) not in targets:
                continue
            if all(
                invertibility(system, candidate[:cut]).two_sided() is not True
                for cut in range(1, length)
            ):
                result.add(candidate)
    return frozenset(result)


def units_trivial(
    system: SpecialSystem,
    *,
    with_delta: bool = False,
    use_lemma_fast_path: bool = True,
    budget: int = DEFAULT_WORD_BUDGET,
) -> UnitsReport:
    """Decide whether the group of units is trivial.

    Overlap-free systems take the certified fast path: every relator is
    one minimal invertible piece and the verdict is Trivial without any
    grammar work.  Confluent systems otherwise run the generator check:
    the minimal factors generate the units, so the group is trivial iff
    every factor has empty normal form; the shortlex-least factor with a
    nonempty normal form serves as witness.  Non-confluent systems get
    verdict Unknown.  ``use_lemma_fast_path=False`` forces the generator
    check, which is how the two routes are cross-validated in tests.
    """
    if use_lemma_fast_path and is_overlap_free(system):
        factorizations = tuple((relator,) for relator in system.relators)
        factors = frozenset(system.relators)
        delta = delta_set(system, budget) if with_delta else None
        return UnitsReport(factors, delta, factorizations, TRIVIAL, None, OVERLAP_FREE_LEMMA)
    if is_confluent(system, budget):
        factorizations = tuple(
            tuple(minimal_factorization(system, relator)) for relator in system.relators
        )
        factors = frozenset(chain.from_iterable(factorizations))
        nonidentity = sorted(
            (f for f in factors if normal_form(system, f)), key=length_lex_key
        )
        delta = delta_set(system, budget) if with_delta else None
        if nonidentity:
            return UnitsReport(
                factors, delta, factorizations, NONTRIVIAL, nonidentity[0], GENERATOR_CHECK
            )
        return UnitsReport(factors, delta, factorizations, TRIVIAL, None, GENERATOR_CHECK)
    return UnitsReport(frozenset(), None, (), UNKNOWN, None, None)


def random_overlap_free_system(
    seed: int,
    *,
    min_rules: int = 2,
    max_rules: int = 8,
    min_interior: int = 1,
    max_interior: int = 6,
) -> SpecialSystem:
    """Random system that is overlap-free by construction.

    Every relator is a x1..xm b with interior letters drawn from
    {c, d}; a and b appear nowhere else, so no relator suffix can match
    another's prefix and no relator can sit inside another.
    """
    rng = random.Random(seed)
    alphabet = Alphabet(("a", "b", "c", "d"))
    available = sum(2**m for m in range(min_interior, max_interior + 1))
    count = min(rng.randint(min_rules, max_rules), available)
    relators: list[Word] = []
    seen: set[Word] = set()
    while len(relators) < count:
        interior = tuple(
            rng.choice((2, 3)) for _ in range(rng.randint(min_interior, max_interior))
        )
        relator = (0,) + interior + (1,)
        if relator not in seen:
            seen.add(relator)
            relators.append(relator)
    system = SpecialSystem(alphabet, tuple(relators))
    assert is_overlap_free(system)
    return system
