import pytest

from errors import PreconditionError, RankMismatchError, UnknownPresentationError
from homomorphisms.action import EvalContext, eval_word
from monoids.partial_perm import SignedPartialPerm
from presentations.derivation import derives, find_derivation
from presentations.registry import PRESENTATIONS, PresentationId, get_presentation, relations_for
from presentations.words import word


def test_registry_lookup():
    assert get_presentation("ibb") is PRESENTATIONS[PresentationId.IBB]
    assert get_presentation(PresentationId.IN).name == "IN"
    with pytest.raises(UnknownPresentationError):
        get_presentation("IBX")
    with pytest.raises(PreconditionError):
        relations_for("IBB", 0)


def test_presentation_info():
    info = get_presentation("IBB_QUOT").get_presentation_info()
    assert info["name"] == "IBB_QUOT"
    assert info["signed"] is True
    assert "I(B_n)" in info["description"]
    assert get_presentation("IN").signed is False


def test_table_sizes():
    assert len(relations_for("BR", 3)) == 5
    assert len(relations_for("BR", 4)) == 9
    assert len(relations_for("IBB", 3)) == 17


def test_families():
    assert relations_for("IBB", 3).families() == [
        "braid",
        "epsilon-absorbs-sigma-square",
        "epsilon-absorbs-tau",
        "epsilon-commutation",
        "epsilon-idempotent",
        "epsilon-sigma",
        "sigma-invertibility",
        "tau-commutation",
        "tau-invertibility",
        "type-b-braid",
    ]
    assert "epsilon-absorbs-sigma-square" not in relations_for("IN", 3).families()
    assert "epsilon-absorbs-sigma-square" not in relations_for("IBB_QUOT", 3).families()


def test_rank_one_tables_have_no_sigma():
    table = relations_for("IBB", 1)
    assert all(not letter.is_sigma for r in table for letter in r.lhs.letters + r.rhs.letters)
    assert [str(r) for r in table] == ["t T = 1", "T t = 1", "e = e e", "e t = e", "t e = e"]


def test_type_b_relation_is_stated_at_rank_two():
    pairs = [(str(r.lhs), str(r.rhs)) for r in relations_for("BRB", 2)]
    assert ("t s1 t s1", "s1 t s1 t") in pairs


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("presentation_id", list(PresentationId))
def test_relations_hold_in_the_image(presentation_id, n):
    table = relations_for(presentation_id, n)
    ctx = EvalContext(n, table.signed)
    for relation in table:
        assert eval_word(relation.lhs, ctx) == eval_word(relation.rhs, ctx), str(relation)


@pytest.mark.parametrize("presentation_id", ["IN", "IBB_QUOT"])
def test_superfluous_epsilon_relations_are_derivable(presentation_id):
    table = relations_for(presentation_id, 2)
    chain = find_derivation(word(2, "e s1 s1"), word(2, "e"), table)
    assert chain == [word(2, "e s1 s1"), word(2, "e")]
    assert derives(word(2, "s1 s1 e"), word(2, "e"), table)


def test_reduced_table_follows_from_redundant_table():
    redundant = relations_for("IBN_QUOT", 3)
    for relation in relations_for("IN", 3):
        assert derives(relation.lhs, relation.rhs, redundant), str(relation)
    redundant = relations_for("IBB_QUOT_FULL", 3)
    for relation in relations_for("IBB_QUOT", 3):
        assert derives(relation.lhs, relation.rhs, redundant), str(relation)


def test_derivation_is_bounded():
    table = relations_for("IN", 2)
    assert find_derivation(word(2, "s1"), word(2, "e"), table, max_nodes=50) is None
    assert find_derivation(word(2, "e"), word(2, "e"), table) == [word(2, "e")]
    with pytest.raises(RankMismatchError):
        find_derivation(word(3, "e"), word(3, "e"), table)


def test_derivation_chain_is_valid():
    table = relations_for("IBB", 3)
    chain = find_derivation(word(3, "e t s2"), word(3, "s2 e"), table)
    assert chain is not None
    assert chain[0] == word(3, "e t s2")
    assert chain[-1] == word(3, "s2 e")
    images = {eval_word(w) for w in chain}
    assert len(images) == 1


def test_eps_definition_matches_the_balanced_generators():
    ctx = EvalContext(3, False)
    for i in range(1, 4):
        expected = SignedPartialPerm.partial_identity(3, [j for j in range(1, 4) if j != i])
        assert eval_word(word(3, f"e{i}"), ctx) == expected


@pytest.mark.parametrize("presentation_id", ["BR", "IBN", "IBN_BAL", "IN", "IBN_QUOT", "EPS_DEF"])
def test_unsigned_tables_verify_at_rank_five(presentation_id):
    table = relations_for(presentation_id, 5)
    assert not table.signed
    ctx = EvalContext(5, False)
    for relation in table:
        assert eval_word(relation.lhs, ctx) == eval_word(relation.rhs, ctx), str(relation)


def test_small_tables():
    assert len(relations_for("BR", 1)) == 0
    pairs = relations_for("IBB", 2).pairs
    assert (word(2, "e t"), word(2, "e")) in pairs
    assert (word(2, "t e"), word(2, "e")) in pairs
    braid = [r for r in relations_for("BR", 3) if r.family == "braid"]
    assert [str(r) for r in braid] == ["s1 s2 s1 = s2 s1 s2"]
