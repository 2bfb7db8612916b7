import pytest

from errors import PreconditionError
from homomorphisms.action import EvalContext, eval_word
from homomorphisms.lifts import normal_form_images
from monoids.enumeration import cardinality_formula
from monoids.partial_perm import SignedPartialPerm
from presentations.normal_form import (
    EpsilonVariant,
    ascending_run,
    descending_run,
    epsilon_block,
    normal_form_word,
)
from presentations.words import Word, eps, word


def test_runs():
    assert descending_run(3, 1, 4) == word(4, "s3 s2 s1")
    assert ascending_run(1, 3, 4) == word(4, "s1 s2 s3")
    assert descending_run(0, 1, 4) == Word.empty(4)
    assert ascending_run(2, 1, 4) == Word.empty(4)


def test_epsilon_block_words():
    assert epsilon_block(1, 3) == word(3, "e2 e3")
    assert epsilon_block(3, 3) == Word.empty(3)
    assert epsilon_block(0, 2, EpsilonVariant.CONJUGATED) == word(2, "e s1 e s1")
    assert epsilon_block(1, 2, "conjugated") == word(2, "s1 e s1")


@pytest.mark.parametrize("n", range(1, 6))
def test_epsilon_block_variants_agree(n):
    for k in range(n + 1):
        expected = SignedPartialPerm.partial_identity(n, range(1, k + 1))
        assert eval_word(epsilon_block(k, n, EpsilonVariant.PRODUCT)) == expected
        assert eval_word(epsilon_block(k, n, EpsilonVariant.CONJUGATED)) == expected


def test_normal_form_word_moves_strings():
    # string 3 to position 1, kept with a sign flip, then out to string 2
    w = normal_form_word(1, [2], [1], word(1, "t"), 3)
    assert w == word(3, "s2 s1 e2 e3 t e2 e3 s1")
    assert eval_word(w) == SignedPartialPerm(3, (None, None, (2, -1)))


def test_normal_form_word_preconditions():
    with pytest.raises(PreconditionError):
        normal_form_word(1, [1, 2], [0], Word.empty(1), 3)
    with pytest.raises(PreconditionError):
        normal_form_word(2, [1, 1], [0, 1], Word.empty(2), 3)
    with pytest.raises(PreconditionError):
        normal_form_word(1, [3], [0], Word.empty(1), 3)
    with pytest.raises(PreconditionError):
        normal_form_word(1, [0], [0], word(1, "e"), 3)
    with pytest.raises(PreconditionError):
        epsilon_block(4, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("variant", list(EpsilonVariant))
def test_normal_forms_cover_the_monoid_once(n, variant):
    images = normal_form_images(n, variant=variant)
    assert len(images) == cardinality_formula(n)
    assert len(set(images)) == cardinality_formula(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unsigned_normal_forms(n):
    images = normal_form_images(n, signed=False)
    assert len(set(images)) == len(images) == cardinality_formula(n, signed=False)
    assert all(a.is_unsigned() for a in images)
    ctx = EvalContext(n, False)
    assert eval_word(epsilon_block(0, n), ctx) == SignedPartialPerm.empty(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_last_block_is_a_single_epsilon(n):
    assert epsilon_block(n - 1, n) == Word((eps(n),), n)
    assert normal_form_word(n, list(range(n)), list(range(n)), Word.empty(n), n) == Word.empty(n)
