import pytest

from specmon import SpecialSystem


@pytest.fixture
def bicyclic() -> SpecialSystem:
    return SpecialSystem.from_words(["a", "b"], ["ab"])


@pytest.fixture
def z2() -> SpecialSystem:
    return SpecialSystem.from_words(["a"], ["aa"])


@pytest.fixture
def zint() -> SpecialSystem:
    return SpecialSystem.from_words(["a", "b"], ["ab", "ba"])


@pytest.fixture
def nonconfluent() -> SpecialSystem:
    # "a" equals the identity in the monoid but is irreducible:
    # erasability is a proper subset of the word problem here
    return SpecialSystem.from_words(["a", "b", "c"], ["abc", "bc"])
