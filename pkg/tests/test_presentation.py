import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specmon import (
    Alphabet,
    AmbiguousCompactForm,
    DuplicateRelator,
    EmptyRelator,
    ParseError,
    SpecialSystem,
    UnknownSymbol,
    parse_presentation,
    parse_word,
    render_presentation,
    render_word,
)
from specmon.presentation import from_json_dict, to_json_dict


def test_parse_presentation_two_symbols():
    system = parse_presentation("alphabet: a b\nrelator: a b")
    assert system.alphabet.symbols == ("a", "b")
    assert system.relators == ((0, 1),)


def test_parse_presentation_single_symbol():
    system = parse_presentation("alphabet: a\nrelator: a a")
    assert system.alphabet.symbols == ("a",)
    assert system.relators == ((0, 0),)


def test_parse_presentation_empty_relator():
    with pytest.raises(EmptyRelator):
        parse_presentation("alphabet: a\nrelator:")


def test_parse_presentation_comments_and_blank_lines():
    text = "# a comment\n\nalphabet: a b  # trailing\nrelator: ab\n"
    system = parse_presentation(text)
    assert system.relators == ((0, 1),)


def test_parse_presentation_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_presentation("alphabet: a\nbogus: x")
    assert info.value.line == 2
    with pytest.raises(UnknownSymbol) as info:
        parse_presentation("alphabet: a\nrelator: q")
    assert info.value.line == 2


def test_parse_presentation_duplicate_relator_rejected():
    with pytest.raises(DuplicateRelator):
        parse_presentation("alphabet: a b\nrelator: a b\nrelator: ab")


def test_parse_presentation_requires_alphabet_first():
    with pytest.raises(ParseError):
        parse_presentation("relator: a\nalphabet: a")
    with pytest.raises(ParseError):
        parse_presentation("# nothing here")


def test_parse_word_spaced_and_empty():
    alphabet = Alphabet(("a", "b"))
    assert parse_word(alphabet, "a b") == (0, 1)
    assert parse_word(alphabet, ".") == ()


def test_parse_word_compact_single_char_alphabet():
    alphabet = Alphabet(("a", "b"))
    assert parse_word(alphabet, "ab") == (0, 1)
    assert parse_word(alphabet, "aabb") == (0, 0, 1, 1)


def test_parse_word_compact_rejected_for_multichar_names():
    alphabet = Alphabet(("ab", "cd"))
    with pytest.raises(AmbiguousCompactForm):
        parse_word(alphabet, "abcd")
    assert parse_word(alphabet, "ab cd") == (0, 1)


def test_parse_word_unknown_symbol():
    alphabet = Alphabet(("a", "b"))
    with pytest.raises(UnknownSymbol):
        parse_word(alphabet, "a x")
    with pytest.raises(UnknownSymbol):
        parse_word(alphabet, "ax")


def test_alphabet_validation():
    with pytest.raises(ParseError):
        Alphabet(("a", "a"))
    with pytest.raises(ParseError):
        Alphabet(("",))
    with pytest.raises(ParseError):
        Alphabet((".",))
    with pytest.raises(ParseError):
        Alphabet(("a b",))


def test_system_validation():
    alphabet = Alphabet(("a",))
    with pytest.raises(EmptyRelator):
        SpecialSystem(alphabet, ((),))
    with pytest.raises(UnknownSymbol):
        SpecialSystem(alphabet, ((3,),))
    with pytest.raises(DuplicateRelator):
        SpecialSystem(alphabet, ((0,), (0,)))
    # no relators presents the free monoid and is fine
    assert SpecialSystem(alphabet, ()).max_relator_len == 0


_NAME_POOLS = [("a", "b"), ("a", "b", "c"), ("x", "y"), ("ab", "cd", "e"), ("s1", "s2")]


@st.composite
def presentations(draw):
    names = draw(st.sampled_from(_NAME_POOLS))
    alphabet = Alphabet(names)
    count = draw(st.integers(1, 4))
    relators = draw(
        st.lists(
            st.lists(st.integers(0, len(names) - 1), min_size=1, max_size=6).map(tuple),
            min_size=count,
            max_size=count,
            unique=True,
        )
    )
    return SpecialSystem(alphabet, tuple(relators))


@settings(max_examples=60, deadline=None)
@given(presentations())
def test_presentation_round_trip(system):
    assert parse_presentation(render_presentation(system)) == system
    assert from_json_dict(to_json_dict(system)) == system


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(_NAME_POOLS),
    st.lists(st.integers(0, 1), max_size=10).map(tuple),
)
def test_word_round_trip(names, word):
    alphabet = Alphabet(names)
    assert parse_word(alphabet, render_word(alphabet, word)) == word


def test_render_word_compact_vs_spaced():
    assert render_word(Alphabet(("a", "b")), (0, 1)) == "ab"
    assert render_word(Alphabet(("ab", "cd")), (0, 1)) == "ab cd"
    assert render_word(Alphabet(("a",)), ()) == "."
