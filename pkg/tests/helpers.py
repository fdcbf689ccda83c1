"""Independent oracles and generators shared by the test modules.

These deliberately avoid the library's own search paths: the overlap
oracle is a single shift-scan rather than two kind-specific loops, and
the word enumerators are plain itertools products.
"""

from __future__ import annotations

import random
from itertools import product

from specmon import SpecialSystem, Word
from specmon.rewrite import rewrite_step


def words_upto(n_letters: int, maxlen: int):
    """Every word over {0..n_letters-1} of length <= maxlen, shortlex order."""
    for length in range(maxlen + 1):
        yield from product(range(n_letters), repeat=length)


def random_word(rng: random.Random, n_letters: int, maxlen: int) -> Word:
    length = rng.randint(0, maxlen)
    return tuple(rng.randrange(n_letters) for _ in range(length))


def naive_normal_form(system: SpecialSystem, word: Word) -> Word:
    """Reference path: iterate single deterministic steps from scratch."""
    current = word
    while True:
        step = rewrite_step(system, current)
        if step is None:
            return current
        current = step[0]


def brute_overlaps(system: SpecialSystem) -> set[tuple]:
    """Shift-scan overlap oracle: place the right relator at every offset
    relative to the left one and classify the agreeing placements."""
    relators = system.relators
    found = set()
    for i, left in enumerate(relators):
        for j, right in enumerate(relators):
            for shift in range(-len(right) + 1, len(left)):
                lo, hi = max(0, shift), min(len(left), shift + len(right))
                if lo >= hi:
                    continue
                if any(left[p] != right[p - shift] for p in range(lo, hi)):
                    continue
                if 0 <= shift and shift + len(right) <= len(left):
                    if len(right) < len(left):
                        found.add(("inclusion", i, j, shift, left))
                elif 0 < shift < len(left):
                    overlap_word = left + right[len(left) - shift:]
                    found.add(("suffix_prefix", i, j, shift, overlap_word))
    return found


def random_general_system(rng: random.Random, max_symbols: int = 3, max_rules: int = 5,
                          max_len: int = 8) -> SpecialSystem:
    """Arbitrary small system; overlaps and non-confluence are welcome."""
    n = rng.randint(1, max_symbols)
    symbols = tuple("abc"[:n])
    count = rng.randint(1, max_rules)
    relators: list[Word] = []
    seen: set[Word] = set()
    attempts = 0
    while len(relators) < count and attempts < 50:
        attempts += 1
        length = rng.randint(1, max_len)
        word = tuple(rng.randrange(n) for _ in range(length))
        if word not in seen:
            seen.add(word)
            relators.append(word)
    from specmon import Alphabet

    return SpecialSystem(Alphabet(symbols), tuple(relators))
