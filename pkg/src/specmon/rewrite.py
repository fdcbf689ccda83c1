"""Length-reducing rewriting for special systems.

Every rule deletes one occurrence of a relator, so every rewrite step
strictly shortens the word and rewriting always terminates.  Occurrence
search runs on an Aho-Corasick automaton built once per system and
cached; the deterministic one-step strategy picks the occurrence with
the leftmost start, breaking ties by longest relator, then lowest
relator index.

Confluence is decided exactly: a system is confluent iff every critical
pair is joinable, and joinability is tested by intersecting full
descendant sets rather than by comparing deterministic normal forms
(which may spuriously differ on non-confluent systems).  Termination is
automatic, so local confluence suffices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BudgetExceeded
from .presentation import SpecialSystem, Word

DEFAULT_WORD_BUDGET = 10**6

INCLUSION = "inclusion"
SUFFIX_PREFIX = "suffix_prefix"


@dataclass(frozen=True)
class Overlap:
    """A coincidence between two relators.

    ``inclusion``: the right rule occurs inside the left rule; the
    overlap word is the left relator and ``offset`` is the position of
    the occurrence.  ``suffix_prefix``: a nonempty proper suffix of the
    left relator equals a nonempty proper prefix of the right one; the
    overlap word is ``p s q`` with left = ``p s`` and right = ``s q``,
    and ``offset`` is ``len(p)``.  Self-overlaps at nonzero offset are
    included; the full coincidence of a rule with itself is not.
    """

    kind: str
    left_rule: int
    right_rule: int
    offset: int
    word: Word


@dataclass(frozen=True)
class CriticalPair:
    """The two one-step reducts of an overlap word."""

    source: Overlap
    left_reduct: Word
    right_reduct: Word

    def as_json(self) -> dict:
        return {
            "kind": self.source.kind,
            "left_rule": self.source.left_rule,
            "right_rule": self.source.right_rule,
            "offset": self.source.offset,
            "word": list(self.source.word),
            "reducts": [list(self.left_reduct), list(self.right_reduct)],
        }


class Matcher:
    """Aho-Corasick automaton over alphabet indices.

    ``_out[state]`` lists the relator indices whose occurrence ends at
    the current text position: the state's own match plus the matches
    inherited along the failure chain.
    """

    def __init__(self, relators: tuple[Word, ...]):
        self.relators = relators
        self.max_len = max((len(r) for r in relators), default=0)
        goto: list[dict[int, int]] = [{}]
        out: list[list[int]] = [[]]
        for idx, pattern in enumerate(relators):
            state = 0
            for letter in pattern:
                nxt = goto[state].get(letter)
                if nxt is None:
                    goto.append({})
                    out.append([])
                    nxt = len(goto) - 1
                    goto[state][letter] = nxt
                state = nxt
            out[state].append(idx)
        fail = [0] * len(goto)
        queue: deque[int] = deque(goto[0].values())
        while queue:
            state = queue.popleft()
            for letter, nxt in goto[state].items():
                queue.append(nxt)
                f = fail[state]
                while f and letter not in goto[f]:
                    f = fail[f]
                fail[nxt] = goto[f].get(letter, 0)
                # BFS order: the failure target is shallower, so its
                # output list is already complete.
                out[nxt].extend(out[fail[nxt]])
        self._goto = goto
        self._fail = fail
        self._out = [tuple(o) for o in out]

    def _step(self, state: int, letter: int) -> int:
        goto = self._goto
        fail = self._fail
        while True:
            nxt = goto[state].get(letter)
            if nxt is not None:
                return nxt
            if state == 0:
                return 0
            state = fail[state]

    def occurrences(self, word: Word, start: int = 0) -> Iterator[tuple[int, int]]:
        """Yield every (position, rule) occurrence pair in word[start:]."""
        relators = self.relators
        out = self._out
        state = 0
        for end in range(start, len(word)):
            state = self._step(state, word[end])
            for rule in out[state]:
                yield end - len(relators[rule]) + 1, rule

    def best_occurrence(self, word: Word, start: int = 0) -> tuple[int, int] | None:
        """Strategy occurrence in word[start:]: leftmost start, then
        longest relator, then lowest rule index.

        Assumes no occurrence starts before ``start``.  The scan stops
        once the position passes best_start + max_len - 1, past which no
        occurrence can start at or before the current best.
        """
        relators = self.relators
        out = self._out
        best: tuple[int, int, int] | None = None
        state = 0
        for pos in range(start, len(word)):
            if best is not None and pos > best[0] + self.max_len - 1:
                break
            state = self._step(state, word[pos])
            for rule in out[state]:
                length = len(relators[rule])
                key = (pos - length + 1, -length, rule)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        return best[0], best[2]


@lru_cache(maxsize=256)
def _matcher(system: SpecialSystem) -> Matcher:
    return Matcher(system.relators)


def occurrences(system: SpecialSystem, word: Word) -> list[tuple[int, int]]:
    """All (position, rule) pairs at which a relator occurs in the word."""
    return list(_matcher(system).occurrences(word))


def rewrite_step(system: SpecialSystem, word: Word) -> tuple[Word, int, int] | None:
    """One deterministic rewrite step, or None when the word is irreducible.

    Returns the reduct together with the position and relator index of
    the deleted occurrence.
    """
    hit = _matcher(system).best_occurrence(word)
    if hit is None:
        return None
    pos, rule = hit
    reduct = word[:pos] + word[pos + len(system.relators[rule]):]
    return reduct, pos, rule


def normal_form(system: SpecialSystem, word: Word) -> Word:
    """Irreducible word reached by iterating the deterministic step.

    Unique normal form of the input when the system is confluent.  After
    a deletion the scan resumes max_relator_len letters left of the
    splice point: deletions cannot create occurrences starting further
    left than that.
    """
    matcher = _matcher(system)
    relators = system.relators
    current = word
    scan_from = 0
    while True:
        hit = matcher.best_occurrence(current, scan_from)
        if hit is None:
            return current
        pos, rule = hit
        current = current[:pos] + current[pos + len(relators[rule]):]
        scan_from = max(0, pos - matcher.max_len)


def overlaps(system: SpecialSystem) -> tuple[Overlap, ...]:
    """All overlaps between relators, ordered by (left, right, offset)."""
    relators = system.relators
    found: list[Overlap] = []
    for i, left in enumerate(relators):
        for j, right in enumerate(relators):
            if len(right) < len(left):
                # inclusion: right occurs inside left (the degenerate
                # full coincidence is impossible since lengths differ)
                for offset in range(len(left) - len(right) + 1):
                    if left[offset:offset + len(right)] == right:
                        found.append(Overlap(INCLUSION, i, j, offset, left))
            # suffix-prefix: a proper suffix of left equals a proper
            # prefix of right
            for s_len in range(1, min(len(left), len(right))):
                if left[len(left) - s_len:] == right[:s_len]:
                    word = left + right[s_len:]
                    found.append(Overlap(SUFFIX_PREFIX, i, j, len(left) - s_len, word))
    found.sort(key=lambda o: (o.left_rule, o.right_rule, o.offset))
    return tuple(found)


def critical_pairs(system: SpecialSystem) -> tuple[CriticalPair, ...]:
    """One critical pair per overlap.

    Inclusion of v inside u = x v y gives (empty, x y); suffix-prefix
    overlap p s q gives (q, p).
    """
    relators = system.relators
    pairs: list[CriticalPair] = []
    for overlap in overlaps(system):
        word = overlap.word
        if overlap.kind == INCLUSION:
            inner = relators[overlap.right_rule]
            left_reduct: Word = ()
            right_reduct = word[:overlap.offset] + word[overlap.offset + len(inner):]
        else:
            left = relators[overlap.left_rule]
            left_reduct = word[len(left):]
            right_reduct = word[:overlap.offset]
        pairs.append(CriticalPair(overlap, left_reduct, right_reduct))
    return tuple(pairs)


def is_overlap_free(system: SpecialSystem) -> bool:
    """True iff the relators admit no overlap at all."""
    return not overlaps(system)


def descendants(system: SpecialSystem, word: Word, budget: int = DEFAULT_WORD_BUDGET) -> frozenset[Word]:
    """The full set {v : word rewrites to v in any number of steps}.

    Finite because rewriting is length-reducing.  Raises BudgetExceeded
    rather than silently truncating when the set would outgrow budget.
    """
    matcher = _matcher(system)
    relators = system.relators
    seen: set[Word] = {word}
    stack: list[Word] = [word]
    while stack:
        current = stack.pop()
        for pos, rule in matcher.occurrences(current):
            child = current[:pos] + current[pos + len(relators[rule]):]
            if child not in seen:
                if len(seen) >= budget:
                    raise BudgetExceeded(f"descendant set exceeded {budget} words")
                seen.add(child)
                stack.append(child)
    return frozenset(seen)


def _joinable(system: SpecialSystem, left: Word, right: Word, budget: int) -> bool:
    # equal deterministic normal forms certify joinability; only the
    # negative answer needs the exact descendant-set intersection
    if normal_form(system, left) == normal_form(system, right):
        return True
    return bool(descendants(system, left, budget) & descendants(system, right, budget))


@lru_cache(maxsize=1024)
def _confluent(system: SpecialSystem, budget: int) -> bool:
    return all(
        _joinable(system, pair.left_reduct, pair.right_reduct, budget)
        for pair in critical_pairs(system)
    )


def is_confluent(system: SpecialSystem, budget: int = DEFAULT_WORD_BUDGET) -> bool:
    """Exact confluence decision via joinability of all critical pairs."""
    return _confluent(system, budget)


def irreducible_words(system: SpecialSystem, maxlen: int, budget: int = DEFAULT_WORD_BUDGET) -> list[Word]:
    """All irreducible words of length <= maxlen, in shortlex order.

    Generated by walking the matching automaton and refusing any step
    that completes a relator occurrence.
    """
    matcher = _matcher(system)
    out = matcher._out
    n_letters = len(system.alphabet)
    result: list[Word] = [()]
    level: list[tuple[Word, int]] = [((), 0)]
    for _ in range(maxlen):
        next_level: list[tuple[Word, int]] = []
        for word, state in level:
            for letter in range(n_letters):
                nxt = matcher._step(state, letter)
                if not out[nxt]:
                    if len(result) + len(next_level) >= budget:
                        raise BudgetExceeded(f"more than {budget} irreducible words")
                    next_level.append((word + (letter,), nxt))
        level = next_level
        result.extend(word for word, _ in level)
        if not level:
            break
    return result
