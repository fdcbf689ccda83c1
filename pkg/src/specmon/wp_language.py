"""The context-free language of erasable words and its closures.

For a special system, the words that rewrite to the empty word form a
context-free language generated by a single nonterminal: S -> empty,
S -> S S, and one Dyck-style production per relator interleaving its
letters with S.  When the system is confluent this language is exactly
the word problem {w : w = 1}; on non-confluent systems it may be a
proper subset, and callers are expected to surface that caveat.

The construction is not taken on faith: the test suite checks it
against `erasable_oracle`, an exhaustive rewriting search that shares
no machinery with the grammar side.

Production bodies are tuples mixing ints (terminal = alphabet index)
and strings (nonterminal names), which keeps rendering unambiguous even
when a user alphabet contains grammar-looking names.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded
from .presentation import Alphabet, SpecialSystem, Word, length_lex_key
from .rewrite import DEFAULT_WORD_BUDGET, _matcher

Body = tuple[int | str, ...]
Production = tuple[str, Body]


@dataclass(frozen=True)
class Grammar:
    """Context-free grammar over an alphabet of terminal symbols."""

    terminals: Alphabet
    nonterminals: tuple[str, ...]
    start: str
    productions: tuple[Production, ...]

    def __post_init__(self):
        object.__setattr__(self, "nonterminals", tuple(self.nonterminals))
        object.__setattr__(
            self, "productions", tuple((lhs, tuple(body)) for lhs, body in self.productions)
        )
        declared = set(self.nonterminals)
        if self.start not in declared:
            raise ValueError(f"start symbol {self.start!r} is not a declared nonterminal")
        n = len(self.terminals)
        for lhs, body in self.productions:
            if lhs not in declared:
                raise ValueError(f"production head {lhs!r} is not a declared nonterminal")
            for item in body:
                if isinstance(item, int):
                    if not 0 <= item < n:
                        raise ValueError(f"terminal index {item} outside alphabet of size {n}")
                elif item not in declared:
                    raise ValueError(f"undeclared nonterminal {item!r} in a production body")


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    suffix = 0
    while name in taken:
        suffix += 1
        name = f"{base}{suffix}"
    taken.add(name)
    return name


def wp_grammar(system: SpecialSystem) -> Grammar:
    """Grammar of {w : w rewrites to the empty word}.

    Productions: S -> empty; S -> S S; and for each relator a1..ak the
    production S -> a1 S a2 S .. S ak.  Equals the word problem exactly
    when the system is confluent.
    """
    taken = set(system.alphabet.symbols)
    start = _fresh("S", taken)
    productions: list[Production] = [(start, ()), (start, (start, start))]
    for relator in system.relators:
        body: list[int | str] = []
        for i, letter in enumerate(relator):
            if i:
                body.append(start)
            body.append(letter)
        productions.append((start, tuple(body)))
    return Grammar(system.alphabet, (start,), start, tuple(productions))


def erasable_oracle(system: SpecialSystem, word: Word, budget: int = DEFAULT_WORD_BUDGET) -> bool:
    """Exhaustive memoized search for word ->* empty.

    Independent of the grammar machinery; serves as its ground truth.
    The memo is shared across calls for the same system.
    """
    memo = _erasable_memo(system)
    matcher = _matcher(system)
    relators = system.relators

    def search(current: Word) -> bool:
        cached = memo.get(current)
        if cached is not None:
            return cached
        if len(memo) >= budget:
            raise BudgetExceeded(f"erasability memo exceeded {budget} words")
        children = {
            current[:pos] + current[pos + len(relators[rule]):]
            for pos, rule in matcher.occurrences(current)
        }
        result = any(search(child) for child in children)
        memo[current] = result
        return result

    return search(word)


@lru_cache(maxsize=64)
def _erasable_memo(system: SpecialSystem) -> dict[Word, bool]:
    return {(): True}


# ---------------------------------------------------------------------------
# Chomsky normal form and CYK membership


def _is_cnf(grammar: Grammar) -> bool:
    for lhs, body in grammar.productions:
        if len(body) == 0:
            if lhs != grammar.start:
                return False
        elif len(body) == 1:
            if not isinstance(body[0], int):
                return False
        elif len(body) == 2:
            if not all(isinstance(item, str) for item in body):
                return False
            if grammar.start in body:
                return False
        else:
            return False
    return True


def _body_key(body: Body) -> tuple:
    return tuple((0, item) if isinstance(item, int) else (1, item) for item in body)


def to_cnf(grammar: Grammar) -> Grammar:
    """Chomsky normal form generating the same language.

    The fresh start symbol keeps an explicit empty production when the
    language contains the empty word; productions are emitted in a
    canonical sorted order so equal inputs give identical grammars.
    """
    taken = set(grammar.nonterminals) | set(grammar.terminals.symbols)
    start = _fresh(grammar.start + "0", taken)
    nonterminals = [start, *grammar.nonterminals]
    prods: list[Production] = [(start, (grammar.start,))]
    prods.extend(grammar.productions)

    # TERM: in bodies of length >= 2, replace terminals by wrappers
    term_wrapper: dict[int, str] = {}
    termed: list[Production] = []
    for lhs, body in prods:
        if len(body) >= 2:
            new_body: list[int | str] = []
            for item in body:
                if isinstance(item, int):
                    wrapper = term_wrapper.get(item)
                    if wrapper is None:
                        wrapper = _fresh(f"T_{grammar.terminals.symbols[item]}", taken)
                        term_wrapper[item] = wrapper
                        nonterminals.append(wrapper)
                        termed.append((wrapper, (item,)))
                    new_body.append(wrapper)
                else:
                    new_body.append(item)
            termed.append((lhs, tuple(new_body)))
        else:
            termed.append((lhs, body))

    # BIN: break bodies of length > 2 into chains
    binned: list[Production] = []
    chain = 0
    for lhs, body in termed:
        while len(body) > 2:
            head = _fresh(f"B{chain}", taken)
            chain += 1
            nonterminals.append(head)
            binned.append((lhs, (body[0], head)))
            lhs, body = head, body[1:]
        binned.append((lhs, body))

    # DEL: eliminate empty productions (bodies now have length <= 2)
    nullable: set[str] = set()
    changed = True
    while changed:
        changed = False
        for lhs, body in binned:
            if lhs not in nullable and all(
                isinstance(item, str) and item in nullable for item in body
            ):
                nullable.add(lhs)
                changed = True
    deleted: dict[Production, None] = {}
    for lhs, body in binned:
        if len(body) == 0:
            continue
        deleted[(lhs, body)] = None
        if len(body) == 2:
            first, second = body
            if isinstance(first, str) and first in nullable:
                deleted[(lhs, (second,))] = None
            if isinstance(second, str) and second in nullable:
                deleted[(lhs, (first,))] = None
    if start in nullable:
        deleted[(start, ())] = None

    # UNIT: close chains A -> B and inline B's non-unit bodies
    by_head: dict[str, list[Body]] = {}
    for lhs, body in deleted:
        by_head.setdefault(lhs, []).append(body)
    final: dict[Production, None] = {}
    for name in nonterminals:
        closure = {name}
        frontier = [name]
        while frontier:
            current = frontier.pop()
            for body in by_head.get(current, ()):
                if len(body) == 1 and isinstance(body[0], str) and body[0] not in closure:
                    closure.add(body[0])
                    frontier.append(body[0])
        for member_nt in closure:
            for body in by_head.get(member_nt, ()):
                if len(body) == 1 and isinstance(body[0], str):
                    continue
                final[(name, body)] = None

    productions = sorted(
        final, key=lambda p: (p[0] != start, p[0], len(p[1]), _body_key(p[1]))
    )
    used = {start}
    for lhs, body in productions:
        used.add(lhs)
        used.update(item for item in body if isinstance(item, str))
    names = (start, *sorted(used - {start}))
    return Grammar(grammar.terminals, names, start, tuple(productions))


class _CnfTables:
    """Bitmask lookup tables for CYK over a CNF grammar."""

    def __init__(self, grammar: Grammar):
        ids = {name: i for i, name in enumerate(grammar.nonterminals)}
        self.start_mask = 1 << ids[grammar.start]
        self.accepts_empty = (grammar.start, ()) in grammar.productions
        self.term_masks: dict[int, int] = {}
        self.by_left: dict[int, dict[int, int]] = {}
        for lhs, body in grammar.productions:
            if len(body) == 1:
                self.term_masks[body[0]] = self.term_masks.get(body[0], 0) | 1 << ids[lhs]
            elif len(body) == 2:
                left, right = ids[body[0]], ids[body[1]]
                row = self.by_left.setdefault(left, {})
                row[right] = row.get(right, 0) | 1 << ids[lhs]

    def combine(self, left_mask: int, right_mask: int) -> int:
        acc = 0
        by_left = self.by_left
        remaining = left_mask
        while remaining:
            low = remaining & -remaining
            remaining ^= low
            row = by_left.get(low.bit_length() - 1)
            if row:
                rest = right_mask
                while rest:
                    low2 = rest & -rest
                    rest ^= low2
                    acc |= row.get(low2.bit_length() - 1, 0)
        return acc


@lru_cache(maxsize=512)
def _tables(grammar: Grammar) -> _CnfTables:
    return _CnfTables(grammar if _is_cnf(grammar) else to_cnf(grammar))


def member(grammar: Grammar, word: Word) -> bool:
    """CYK membership; the grammar is converted to CNF once and cached."""
    tables = _tables(grammar)
    n = len(word)
    if n == 0:
        return tables.accepts_empty
    # table[length][i] = mask of nonterminals deriving word[i:i+length]
    table: list[list[int]] = [[], [tables.term_masks.get(letter, 0) for letter in word]]
    for length in range(2, n + 1):
        row: list[int] = []
        for i in range(n - length + 1):
            acc = 0
            for k in range(1, length):
                left = table[k][i]
                right = table[length - k][i + k]
                if left and right:
                    acc |= tables.combine(left, right)
            row.append(acc)
        table.append(row)
    return bool(table[n][0] & tables.start_mask)


# ---------------------------------------------------------------------------
# Prefix and suffix closures


def prefix_closure(grammar: Grammar) -> Grammar:
    """Grammar for {p : some p x lies in L(grammar)}.

    Nonterminal doubling: a primed copy of A derives every prefix of
    every word A derives.  A production A -> X1..Xn contributes, for
    each position i, the body X1..X(i-1) followed by the prefix variant
    of Xi (both "a" and nothing, for a terminal; the primed copy, for a
    nonterminal).
    """
    taken = set(grammar.nonterminals) | set(grammar.terminals.symbols)
    primed = {name: _fresh(name + "'", taken) for name in grammar.nonterminals}
    productions: dict[Production, None] = dict.fromkeys(grammar.productions)
    for lhs, body in grammar.productions:
        head = primed[lhs]
        if not body:
            productions[(head, ())] = None
            continue
        for i, item in enumerate(body):
            kept = body[:i]
            if isinstance(item, int):
                productions[(head, kept + (item,))] = None
                productions[(head, kept)] = None
            else:
                productions[(head, kept + (primed[item],))] = None
    names = grammar.nonterminals + tuple(primed[n] for n in grammar.nonterminals)
    return Grammar(grammar.terminals, names, primed[grammar.start], tuple(productions))


def suffix_closure(grammar: Grammar) -> Grammar:
    """Grammar for {s : some x s lies in L(grammar)}; mirror image of
    prefix_closure."""
    taken = set(grammar.nonterminals) | set(grammar.terminals.symbols)
    primed = {name: _fresh(name + "'", taken) for name in grammar.nonterminals}
    productions: dict[Production, None] = dict.fromkeys(grammar.productions)
    for lhs, body in grammar.productions:
        head = primed[lhs]
        if not body:
            productions[(head, ())] = None
            continue
        for i, item in enumerate(body):
            kept = body[i + 1:]
            if isinstance(item, int):
                productions[(head, (item,) + kept)] = None
                productions[(head, kept)] = None
            else:
                productions[(head, (primed[item],) + kept)] = None
    names = grammar.nonterminals + tuple(primed[n] for n in grammar.nonterminals)
    return Grammar(grammar.terminals, names, primed[grammar.start], tuple(productions))


@lru_cache(maxsize=256)
def _prefix_cnf(system: SpecialSystem) -> Grammar:
    return to_cnf(prefix_closure(wp_grammar(system)))


@lru_cache(maxsize=256)
def _suffix_cnf(system: SpecialSystem) -> Grammar:
    return to_cnf(suffix_closure(wp_grammar(system)))


# ---------------------------------------------------------------------------
# Enumeration and rendering


def enumerate_words(grammar: Grammar, maxlen: int, budget: int = DEFAULT_WORD_BUDGET) -> list[Word]:
    """All generated words of length <= maxlen, in shortlex order.

    Bottom-up over the CNF: length-n words of A -> B C split into
    strictly shorter halves, so a single pass per length suffices.
    """
    cnf = grammar if _is_cnf(grammar) else to_cnf(grammar)
    per: dict[str, list[set[Word]]] = {
        name: [set() for _ in range(maxlen + 1)] for name in cnf.nonterminals
    }
    terminal_prods = [(lhs, body[0]) for lhs, body in cnf.productions if len(body) == 1]
    binary_prods = [(lhs, body) for lhs, body in cnf.productions if len(body) == 2]
    stored = 0
    if maxlen >= 1:
        for lhs, letter in terminal_prods:
            per[lhs][1].add((letter,))
            stored += 1
    for length in range(2, maxlen + 1):
        for lhs, (first, second) in binary_prods:
            bucket = per[lhs][length]
            for k in range(1, length):
                lefts = per[first][k]
                rights = per[second][length - k]
                if not lefts or not rights:
                    continue
                for u in lefts:
                    for v in rights:
                        if u + v not in bucket:
                            bucket.add(u + v)
                            stored += 1
                            if stored > budget:
                                raise BudgetExceeded(f"enumeration exceeded {budget} words")
    result: set[Word] = set()
    if (cnf.start, ()) in cnf.productions:
        result.add(())
    for length in range(1, maxlen + 1):
        result |= per[cnf.start][length]
    return sorted(result, key=length_lex_key)


def render_grammar(grammar: Grammar) -> str:
    """One production per line, ``S -> a S b``; empty body renders as ``.``."""
    names = grammar.terminals.symbols
    lines = []
    for lhs, body in grammar.productions:
        if body:
            rhs = " ".join(names[item] if isinstance(item, int) else item for item in body)
        else:
            rhs = "."
        lines.append(f"{lhs} -> {rhs}")
    return "\n".join(lines) + "\n"


def grammar_json(grammar: Grammar) -> dict:
    names = grammar.terminals.symbols
    return {
        "terminals": list(names),
        "nonterminals": list(grammar.nonterminals),
        "start": grammar.start,
        "productions": [
            [lhs, [names[item] if isinstance(item, int) else item for item in body]]
            for lhs, body in grammar.productions
        ],
    }
