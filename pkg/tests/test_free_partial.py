import pytest
from hypothesis import given

from errors import ConjugatorShapeError, ElementParseError, PreconditionError, RankMismatchError, WordParseError
from free_partial.free_word import FreeWord, kill_generators, reduce_free
from free_partial.partial_iso import (
    PartialFreeIso,
    canonical_conjugator,
    compose_efn,
    include_In,
    project_EFn,
    split_conjugate,
)
from monoids.partial_perm import SignedPartialPerm

from .strategies import ACCEPTANCE, efn_elements, efn_tuples, free_words, signed_partial_perms


def fw(text):
    return FreeWord.parse(text)


def test_free_word_text():
    w = fw("x2^-1 x1 x2")
    assert w.letters == ((2, -1), (1, 1), (2, 1))
    assert str(w) == "x2^-1 x1 x2"
    assert str(FreeWord()) == "1"
    assert fw("1") == FreeWord()
    assert fw("x1^1") == fw("x1")
    with pytest.raises(WordParseError):
        fw("y1")
    with pytest.raises(WordParseError):
        FreeWord(((0, 1),))


def test_reduction_and_killing():
    assert reduce_free(FreeWord(((1, 1), (2, 1), (2, -1), (1, -1), (3, 1)))) == fw("x3")
    assert not FreeWord(((1, 1), (1, -1))).is_reduced
    assert fw("x1 x2") * fw("x2^-1 x1^-1") == FreeWord()
    assert kill_generators(fw("x1 x2 x1^-1"), [1]) == FreeWord()
    assert kill_generators(fw("x1 x2 x3"), [1, 3]) == fw("x1 x3")


def test_canonical_conjugator():
    assert canonical_conjugator(fw("x1 x1 x2"), 1) == fw("x2")
    assert canonical_conjugator(fw("x2 x1"), 1) == fw("x2 x1")
    assert canonical_conjugator(fw("x1^-1 x2"), 1) == fw("x2")


def test_split_conjugate():
    assert split_conjugate(fw("x2^-1 x1 x2")) == (1, fw("x2"))
    assert split_conjugate(fw("x3")) == (3, FreeWord())
    with pytest.raises(ConjugatorShapeError):
        split_conjugate(fw("x1 x2"))
    with pytest.raises(ConjugatorShapeError):
        split_conjugate(fw("x2 x1 x2"))
    with pytest.raises(ConjugatorShapeError):
        split_conjugate(fw("x1^-1"))


def test_text_form():
    f = PartialFreeIso.parse("x1 -> x2^-1 x1 x2 ; x2 -> x2", 2)
    assert f.to_text() == "x1 -> x2^-1 x1 x2 ; x2 -> x2"
    assert f.conj == (fw("x2"), FreeWord())
    assert PartialFreeIso.parse("empty", 2).perm == SignedPartialPerm.empty(2)
    assert f.to_dict() == {"n": 2, "map": [[1, [[2, 1]]], [2, []]]}
    assert PartialFreeIso.from_dict(f.to_dict()) == f
    with pytest.raises(WordParseError):
        PartialFreeIso.parse("x1 x2 -> x1", 2)
    with pytest.raises(ElementParseError):
        PartialFreeIso.parse("x1 -> x1 ; x2 -> x1", 2)
    with pytest.raises(ElementParseError):
        PartialFreeIso.from_dict({"n": 2})


def test_conjugators_must_live_on_the_image():
    perm = SignedPartialPerm.partial_identity(2, [1])
    with pytest.raises(PreconditionError):
        PartialFreeIso(perm, (fw("x2"), None))
    with pytest.raises(PreconditionError):
        PartialFreeIso(perm, (FreeWord(), FreeWord()))
    with pytest.raises(PreconditionError):
        PartialFreeIso(SignedPartialPerm(1, ((1, -1),)), (FreeWord(),))


def test_apply():
    f = PartialFreeIso.parse("x1 -> x2^-1 x1 x2 ; x2 -> x2", 2)
    assert f.apply(fw("x1 x2")) == fw("x2^-1 x1 x2 x2")
    g = PartialFreeIso.parse("x1 -> x1", 2)
    assert g.apply(fw("x2 x1 x2^-1")) == fw("x1")


def test_composition_kills_deleted_generators():
    f = PartialFreeIso.parse("x1 -> x2^-1 x1 x2 ; x2 -> x2", 2)
    g = PartialFreeIso.parse("x1 -> x1", 2)
    assert (f * g).to_text() == "x1 -> x1"
    assert (f * PartialFreeIso.identity(2)) == f
    assert (PartialFreeIso.identity(2) * f) == f


def test_composition_rank_mismatch():
    with pytest.raises(RankMismatchError):
        compose_efn(PartialFreeIso.identity(2), PartialFreeIso.identity(3))


@ACCEPTANCE
@given(efn_tuples(size=3))
def test_composition_is_associative(triple):
    f, g, h = triple
    assert (f * g) * h == f * (g * h)


@ACCEPTANCE
@given(efn_tuples(size=2))
def test_projection_is_a_homomorphism(pair):
    f, g = pair
    assert project_EFn(f * g) == project_EFn(f) * project_EFn(g)


@given(efn_elements())
def test_images_have_conjugating_shape(f):
    for i in f.perm.domain():
        target, conjugator = split_conjugate(f.image_of(i))
        assert (target, 1) == f.perm.image[i - 1]
        assert conjugator == f.conj[i - 1]


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_inclusion_is_a_homomorphism(n, unsigned_elements):
    elements = unsigned_elements[n]
    for a in elements:
        for b in elements:
            assert include_In(a * b) == include_In(a) * include_In(b)


@pytest.mark.parametrize("n", range(5))
def test_splitting(n, unsigned_elements):
    for a in unsigned_elements[n]:
        assert project_EFn(include_In(a)) == a


@given(signed_partial_perms(signed=False))
def test_splitting_random(a):
    assert project_EFn(include_In(a)) == a


def test_inclusion_rejects_signed_elements():
    with pytest.raises(PreconditionError):
        include_In(SignedPartialPerm(1, ((1, -1),)))


def test_reduction_and_killing_examples():
    assert reduce_free(fw("x2 x1 x1^-1 x2")) == fw("x2 x2")
    assert kill_generators(fw("x2^-1 x1 x2"), {1}) == fw("x1")
    assert kill_generators(fw("x2"), set()) == FreeWord()
    assert kill_generators(fw("x1 x2 x1^-1"), {2}) == fw("x2")


@given(free_words(range(1, 4), max_length=10))
def test_reduce_free_is_idempotent(w):
    assert reduce_free(reduce_free(w)) == reduce_free(w)
    assert reduce_free(w).is_reduced


def test_identity_and_empty_maps():
    assert project_EFn(PartialFreeIso.identity(3)) == SignedPartialPerm.identity(3)
    empty = include_In(SignedPartialPerm.empty(2))
    assert empty.to_text() == "empty"
    assert empty * PartialFreeIso.identity(2) == empty


def test_json_rejects_non_integer_fields():
    with pytest.raises(ElementParseError):
        PartialFreeIso.from_dict({"n": 2, "map": [[1.5, []], None]})
    with pytest.raises(ElementParseError):
        PartialFreeIso.from_dict({"n": 2, "map": [[1, [[2, 1.0]]], [2, []]]})
