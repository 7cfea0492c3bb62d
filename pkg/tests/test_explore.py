"""Class search, equivalence queries, enumeration, and the twist family."""

import pytest

from flatknots.embedding import is_realizable
from flatknots.explore import (
    ClassSearchResult,
    EquivalenceResult,
    SearchConfig,
    WitnessPath,
    enumerate_realizable,
    enumerate_words,
    equivalence_query,
    search_class,
    strong_class_test,
    strong_trivial_test,
    twist_family,
    verify_path,
)
from flatknots.invariants import (
    cross_chord_number,
    r1_normal_form,
    trivializing_number,
)
from flatknots.moves import MoveKind, apply_move, move_set
from flatknots.words import canonical, connected_sum, is_prime

from sample_words import CURL, FIGURE8, TREFOIL

THREE_CURLS = ("a", "a", "b", "b", "c", "c")


def test_search_class_contains_start():
    result = search_class(TREFOIL, move_set("r1"))
    assert canonical(TREFOIL) in result.words
    assert TREFOIL in result
    # Curl insertion never stops, so any finite window truncates.
    assert result.truncated


def test_delete_only_search_is_finite_and_complete():
    result = search_class(("a", "a", "b", "b"), (MoveKind.CURL_DELETE,))
    assert result.words == {canonical(("a", "a", "b", "b")), canonical(CURL), ()}
    assert not result.truncated


def test_search_class_r1_only_reaches_curled_forms():
    result = search_class(TREFOIL, move_set("r1"), SearchConfig(max_chords=4))
    # One extra chord of room: the trefoil plus every single curl insertion.
    assert all(r1_normal_form(w) == canonical(TREFOIL) for w in result.words)
    assert all(is_realizable(w) for w in result.words)
    assert any(len(w) == 8 for w in result.words)
    assert result.truncated  # five chord words exist but fall outside


def test_search_class_add_only_at_cap_stays_put():
    result = search_class(
        TREFOIL, (MoveKind.CURL_ADD,), SearchConfig(max_chords=3)
    )
    assert result.words == {canonical(TREFOIL)}
    assert result.truncated


def test_search_class_state_cap_truncates():
    result = search_class((), move_set("r1"), SearchConfig(max_chords=3, max_states=3))
    assert len(result.words) <= 3
    assert result.truncated


def test_search_tree_edges_replay():
    result = search_class(TREFOIL, move_set("strong"), SearchConfig(max_chords=4))
    assert len(result.parents) == len(result.words) - 1
    for parent, site, child in result.edges():
        assert canonical(apply_move(parent, site)) == child


def test_path_to_start_is_empty():
    result = search_class(TREFOIL, move_set("strong"), SearchConfig(max_chords=4))
    path = result.path_to(TREFOIL)
    assert path is not None
    assert len(path) == 0
    assert verify_path(path)


def test_path_to_unreached_word_is_none():
    result = search_class(TREFOIL, (MoveKind.CURL_ADD,), SearchConfig(max_chords=3))
    assert result.path_to(FIGURE8) is None


def test_trefoil_contracts_to_three_curls_in_one_move():
    result = equivalence_query(TREFOIL, THREE_CURLS, moves_name="strong")
    assert result.verdict == "equivalent"
    assert result.path is not None
    assert len(result.path) == 1
    assert result.path.moves[0].kind is MoveKind.STRONG_CONTRACT
    assert verify_path(result.path)


def test_trefoil_is_strongly_trivial_via_path():
    result = equivalence_query(TREFOIL, (), moves_name="strong")
    assert result.verdict == "equivalent"
    assert result.path is not None
    assert len(result.path) == 4  # one contraction, three curl deletions
    assert verify_path(result.path)


def test_figure_eight_is_not_strongly_trivial():
    result = equivalence_query(FIGURE8, (), moves_name="strong")
    assert result.verdict == "not-equivalent"
    assert "mod 3" in result.reason
    assert result.path is None


def test_weak_moves_cannot_untie_the_trefoil():
    result = equivalence_query(TREFOIL, (), moves_name="weak")
    assert result.verdict == "not-equivalent"
    assert "trivializing" in result.reason


def test_r1_verdicts_follow_the_normal_form():
    refuted = equivalence_query(TREFOIL, (), moves_name="r1")
    assert refuted.verdict == "not-equivalent"
    assert "normal forms differ" in refuted.reason
    settled = equivalence_query(CURL, (), moves_name="r1")
    assert settled.verdict == "equivalent"
    assert settled.path is not None
    assert verify_path(settled.path)


def test_r1_equivalence_survives_a_tiny_window():
    result = equivalence_query(
        ("a", "a", "b", "b"),
        (),
        moves_name="r1",
        config=SearchConfig(max_chords=4, max_states=1),
    )
    assert result.verdict == "equivalent"
    assert result.path is None
    assert "normal forms match" in result.reason


def test_exhausted_window_reports_unknown():
    granny = connected_sum(TREFOIL, TREFOIL)
    result = equivalence_query(
        TREFOIL,
        granny,
        moves_name="strong",
        config=SearchConfig(max_chords=6, max_states=5),
    )
    assert result.verdict == "unknown"
    assert "no path within" in result.reason


def test_trefoil_summand_is_absorbed_in_the_strong_class():
    bigger = connected_sum(FIGURE8, TREFOIL)
    # The witness path contracts the extra summand and deletes its
    # curls, never growing the word, so a tight window keeps this fast.
    result = equivalence_query(
        bigger, FIGURE8, moves_name="strong", config=SearchConfig(max_chords=7)
    )
    assert result.verdict == "equivalent"
    assert result.path is not None
    assert verify_path(result.path)


def test_to_dict_round_trip_fields():
    result = equivalence_query(TREFOIL, THREE_CURLS, moves_name="strong")
    payload = result.to_dict()
    assert payload["verdict"] == "equivalent"
    assert payload["path"][0] == list(canonical(TREFOIL))
    assert payload["path"][-1] == list(THREE_CURLS)
    assert len(payload["moves"]) == 1
    refuted = equivalence_query(TREFOIL, (), moves_name="weak").to_dict()
    assert "path" not in refuted


def test_verify_path_rejects_tampering():
    result = equivalence_query(TREFOIL, THREE_CURLS, moves_name="strong")
    path = result.path
    broken = WitnessPath(words=(path.words[0], FIGURE8), moves=path.moves)
    assert not verify_path(broken)
    short = WitnessPath(words=path.words[:1], moves=path.moves)
    assert not verify_path(short)


def test_enumerate_words_counts():
    assert enumerate_words(0) == ((),)
    assert len(enumerate_words(1)) == 1
    assert len(enumerate_words(2)) == 2
    assert len(enumerate_words(3)) == 5
    assert len(enumerate_words(4)) == 17
    assert len(enumerate_words(5)) == 79


def test_enumerate_words_are_sorted_canonical_forms():
    shapes = enumerate_words(3)
    assert shapes == tuple(sorted(shapes))
    assert all(canonical(w) == w for w in shapes)


def test_enumerate_realizable_counts():
    assert len(enumerate_realizable(1)) == 1
    assert len(enumerate_realizable(2)) == 1
    assert len(enumerate_realizable(3)) == 3
    assert len(enumerate_realizable(4)) == 5
    assert len(enumerate_realizable(5)) == 15


def test_enumerate_words_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_words(-1)


def test_strong_trivial_test_examples():
    assert strong_trivial_test(())
    assert strong_trivial_test(CURL)
    assert strong_trivial_test(TREFOIL)
    assert strong_trivial_test(connected_sum(TREFOIL, TREFOIL))
    assert strong_trivial_test(connected_sum(TREFOIL, CURL, slot=2))
    assert not strong_trivial_test(FIGURE8)
    assert not strong_trivial_test(connected_sum(FIGURE8, TREFOIL))


def test_strong_class_membership_with_figure_eight_base():
    assert strong_class_test(FIGURE8, FIGURE8)
    assert strong_class_test(connected_sum(FIGURE8, TREFOIL), FIGURE8)
    assert strong_class_test(connected_sum(CURL, FIGURE8, slot=1), FIGURE8)
    assert not strong_class_test(TREFOIL, FIGURE8)
    assert not strong_class_test((), FIGURE8)
    assert not strong_class_test(connected_sum(FIGURE8, FIGURE8), FIGURE8)


def test_strong_class_rejects_inadmissible_bases():
    with pytest.raises(ValueError, match="coherent"):
        strong_class_test(TREFOIL, TREFOIL)
    with pytest.raises(ValueError, match="monogon"):
        strong_class_test(CURL, CURL)


def test_twist_family_small_members_are_familiar_shadows():
    assert canonical(twist_family(1)) == canonical(TREFOIL)
    assert canonical(twist_family(2)) == canonical(FIGURE8)


def test_twist_family_cross_chord_numbers():
    # Odd members gain one extra crossing over the even rule.
    assert [cross_chord_number(twist_family(n)) for n in range(1, 7)] == [
        3, 4, 7, 8, 11, 12,
    ]


def test_twist_family_members_are_prime_realizable_and_tr_two():
    for n in range(1, 7):
        word = twist_family(n)
        assert is_realizable(word)
        assert is_prime(word)
        assert trivializing_number(word) == 2


def test_twist_family_rejects_nonpositive():
    with pytest.raises(ValueError):
        twist_family(0)
