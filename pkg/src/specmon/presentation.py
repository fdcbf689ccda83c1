"""Special monoid presentations: alphabets, words, and the input formats.

A special presentation lists an alphabet and a sequence of nonempty
relator words, each read as a defining relation ``u = 1``.  Words are
plain tuples of alphabet indices; the empty tuple is the identity.

Presentation file format::

    # bicyclic monoid
    alphabet: a b
    relator: a b

``#`` starts a comment, one ``alphabet:`` line declares the symbol
names, and each ``relator:`` line holds one relator in ``parse_word``
syntax: symbol names separated by whitespace, ``.`` for the empty word,
or an unspaced string when every symbol name is a single character.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    AmbiguousCompactForm,
    DuplicateRelator,
    EmptyRelator,
    ParseError,
    UnknownSymbol,
)

Word = tuple[int, ...]

EMPTY_WORD: Word = ()

# "." is the empty word, "=" separates equation sides, "#" starts comments.
_RESERVED = {".", "="}


def length_lex_key(word: Word) -> tuple[int, Word]:
    """Sort key for the length-lexicographic (shortlex) order."""
    return len(word), word


@dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free tuple of symbol names.

    The declaration order is fixed at construction and defines the
    length-lexicographic order used everywhere downstream.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        seen: set[str] = set()
        for name in self.symbols:
            if not name or not name.isprintable() or any(c.isspace() for c in name):
                raise ParseError(f"invalid symbol name {name!r}")
            if name in _RESERVED or "#" in name:
                raise ParseError(f"reserved symbol name {name!r}")
            if name in seen:
                raise ParseError(f"duplicate symbol {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.symbols)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.symbols)}

    @cached_property
    def compact(self) -> bool:
        """True when every symbol name is a single character."""
        return all(len(name) == 1 for name in self.symbols)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownSymbol(f"unknown symbol {name!r}") from None


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse a word over the given alphabet.

    Tokens are separated by whitespace and must be symbol names; the
    token ``.`` contributes the empty word.  When every symbol name is a
    single character, a token may also be an unspaced run of symbols.
    """
    letters: list[int] = []
    index = alphabet._index
    for token in text.split():
        if token == ".":
            continue
        if token in index:
            letters.append(index[token])
        elif alphabet.compact:
            for ch in token:
                if ch not in index:
                    raise UnknownSymbol(f"unknown symbol {ch!r} in {token!r}")
                letters.append(index[ch])
        else:
            raise AmbiguousCompactForm(
                f"{token!r} is not a symbol name; unspaced words are only"
                " accepted when every symbol name is a single character"
            )
    return tuple(letters)


def render_word(alphabet: Alphabet, word: Word) -> str:
    """Inverse of parse_word; the empty word renders as ``.``."""
    if not word:
        return "."
    names = [alphabet.symbols[i] for i in word]
    return "".join(names) if alphabet.compact else " ".join(names)


@dataclass(frozen=True)
class SpecialSystem:
    """A special presentation Mon< A | u_i = 1 > with nonempty relators.

    Relator order is preserved from the input; it only matters for
    deterministic tie-breaking, the presented monoid does not depend
    on it.  Instances are immutable and safe to share across threads.
    """

    alphabet: Alphabet
    relators: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        n = len(self.alphabet)
        seen: set[Word] = set()
        for relator in self.relators:
            if not relator:
                raise EmptyRelator("relators must be nonempty")
            for letter in relator:
                if not 0 <= letter < n:
                    raise UnknownSymbol(f"letter index {letter} outside alphabet of size {n}")
            if relator in seen:
                raise DuplicateRelator(
                    f"duplicate relator {render_word(self.alphabet, relator)!r}"
                )
            seen.add(relator)

    @classmethod
    def from_words(cls, symbols: Sequence[str], relators: Iterable[str]) -> SpecialSystem:
        """Convenience constructor from symbol names and word texts."""
        alphabet = Alphabet(tuple(symbols))
        return cls(alphabet, tuple(parse_word(alphabet, text) for text in relators))

    @cached_property
    def max_relator_len(self) -> int:
        return max((len(r) for r in self.relators), default=0)

    def word(self, text: str) -> Word:
        return parse_word(self.alphabet, text)

    def render(self, word: Word) -> str:
        return render_word(self.alphabet, word)


def parse_presentation(text: str) -> SpecialSystem:
    """Parse the presentation file format into a validated system."""
    alphabet: Alphabet | None = None
    relators: list[Word] = []
    seen: set[Word] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError("expected 'alphabet:' or 'relator:'", line=lineno)
        if key == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate alphabet line", line=lineno)
            names = tuple(rest.split())
            if not names:
                raise ParseError("alphabet line declares no symbols", line=lineno)
            try:
                alphabet = Alphabet(names)
            except ParseError as exc:
                raise ParseError(exc.message, line=lineno) from None
        elif key == "relator":
            if alphabet is None:
                raise ParseError("relator line before the alphabet line", line=lineno)
            try:
                word = parse_word(alphabet, rest)
            except ParseError as exc:
                raise type(exc)(exc.message, line=lineno) from None
            if not word:
                raise EmptyRelator("relator line holds an empty word", line=lineno)
            if word in seen:
                raise DuplicateRelator(
                    f"duplicate relator {render_word(alphabet, word)!r}", line=lineno
                )
            seen.add(word)
            relators.append(word)
        else:
            raise ParseError(f"unknown directive {key!r}", line=lineno)
    if alphabet is None:
        raise ParseError("missing alphabet line")
    return SpecialSystem(alphabet, tuple(relators))


def render_presentation(system: SpecialSystem) -> str:
    """Inverse of parse_presentation (up to comments and spacing)."""
    lines = ["alphabet: " + " ".join(system.alphabet.symbols)]
    lines.extend(f"relator: {render_word(system.alphabet, r)}" for r in system.relators)
    return "\n".join(lines) + "\n"


def to_json_dict(system: SpecialSystem) -> dict:
    """Canonical JSON form: symbol names plus relators as index lists."""
    return {
        "alphabet": list(system.alphabet.symbols),
        "relators": [list(r) for r in system.relators],
    }


def from_json_dict(data: dict) -> SpecialSystem:
    return SpecialSystem(
        Alphabet(tuple(data["alphabet"])),
        tuple(tuple(r) for r in data["relators"]),
    )
