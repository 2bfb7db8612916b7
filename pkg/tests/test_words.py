import numpy as np
import pytest
from hypothesis import given

from config import Config
from errors import RankMismatchError, WordParseError
from presentations.words import (
    EPS,
    TAU,
    Word,
    alphabet,
    concat,
    eps,
    free_reduce,
    random_word,
    sigma,
    word,
)

from .strategies import words


def test_parse_and_print():
    w = Word.parse("t s1 e2 S1")
    assert w.rank == 2
    assert str(w) == "t s1 e2 S1"
    assert w.letters[0] == TAU
    assert w.letters[2] == eps(2)
    assert Word.parse("t*s1*e") == Word.parse("t s1 e")


def test_empty_word():
    assert Word.parse("1", 3) == Word.empty(3)
    assert str(Word.empty(3)) == "1"
    assert len(Word.parse("", 2)) == 0


def test_eps_and_first_eps_are_distinct_tokens():
    w = Word.parse("e e1")
    assert w.letters == (EPS, eps(1))
    assert str(w) == "e e1"
    assert EPS.strand == eps(1).strand == 1


@pytest.mark.parametrize("text", ["x1", "s", "t2", "s0", "e0", "s1 q"])
def test_bad_tokens(text):
    with pytest.raises(WordParseError):
        Word.parse(text, 3)


def test_letter_out_of_range():
    with pytest.raises(WordParseError):
        word(3, "s3")
    with pytest.raises(WordParseError):
        word(2, "e3")


def test_inverse():
    assert str(word(2, "t s1 e2").inverse()) == "e2 S1 T"
    assert word(3, "S2 T").inverse() == word(3, "t s2")


@given(words())
def test_inverse_is_an_involution(w):
    assert w.inverse().inverse() == w


def test_free_reduce():
    assert free_reduce(word(2, "s1 S1 t T e e")) == word(2, "e e")
    assert free_reduce(word(3, "s1 s2 S2 S1 t")) == word(3, "t")
    assert free_reduce(word(2, "e2 e2")) == word(2, "e2 e2")


def test_concat_and_powers():
    a = word(3, "s1")
    b = word(3, "t")
    assert concat([a, b, a], 3) == word(3, "s1 t s1")
    assert a * b == word(3, "s1 t")
    assert (a * b) ** 2 == word(3, "s1 t s1 t")
    assert (a * b) ** -1 == word(3, "T S1")
    with pytest.raises(RankMismatchError):
        a * word(2, "t")
    with pytest.raises(RankMismatchError):
        concat([a, word(2, "s1")], 3)


def test_alphabet():
    assert len(alphabet(2)) == 7
    assert alphabet(2, signed=False, epsilon=False, inverses=False) == (sigma(1),)
    assert alphabet(1, signed=False, epsilon=False) == ()


def test_random_word_is_seeded(rng):
    first = random_word(4, 12, rng)
    again = random_word(4, 12, np.random.default_rng(Config.RANDOM_SEED))
    assert first == again
    assert len(first) == 12
    assert first.rank == 4


def test_free_reduce_examples():
    assert free_reduce(word(2, "s1 S1")) == Word.empty(2)
    assert free_reduce(word(2, "e2")) == word(2, "e2")
    assert free_reduce(word(3, "t s2 S2 T")) == Word.empty(3)


@given(words())
def test_free_reduce_is_idempotent(w):
    assert free_reduce(free_reduce(w)) == free_reduce(w)
