import itertools

import pytest

import oracles
from sample_words import CURL, FIGURE8, TREFOIL
from flatknots.words import (
    WordError,
    all_slots,
    canonical,
    chord_count,
    connected_sum,
    format_word,
    fresh_label,
    is_prime,
    label_for_rank,
    letters,
    parse_word,
    positions,
    prime_decompose,
    rank_sequence,
    rank_word,
    validate_word,
    words_equal,
)


def test_parse_basic():
    assert parse_word("a b a b") == ("a", "b", "a", "b")
    assert parse_word("x1 x2 x1 x2") == ("x1", "x2", "x1", "x2")


def test_parse_compact_run():
    assert parse_word("abcabc") == TREFOIL
    assert parse_word("aa") == CURL


def test_parse_comment_and_empty():
    assert parse_word("a a  # a curl") == CURL
    assert parse_word("") == ()
    assert parse_word("-") == ()
    assert parse_word("# nothing here") == ()


def test_parse_rejects_odd_occurrences():
    with pytest.raises(WordError, match="occurs once"):
        parse_word("a b a")
    with pytest.raises(WordError, match="3 times"):
        parse_word("a a a b b")


def test_validate_accepts_empty():
    validate_word(())


def test_format_word():
    assert format_word(TREFOIL) == "a b c a b c"
    assert format_word(()) == "-"


def test_chord_count():
    assert chord_count(()) == 0
    assert chord_count(TREFOIL) == 3


def test_letters_and_positions():
    assert letters(FIGURE8) == ("a", "b", "c", "d")
    assert positions(TREFOIL) == {"a": (0, 3), "b": (1, 4), "c": (2, 5)}


def test_rank_sequence():
    assert rank_sequence(("b", "c", "b", "c")) == (0, 1, 0, 1)
    assert rank_word(("q", "p", "q", "p")) == ("a", "b", "a", "b")


def test_label_for_rank():
    assert label_for_rank(0) == "a"
    assert label_for_rank(25) == "z"
    assert label_for_rank(26) == "x26"
    with pytest.raises(ValueError):
        label_for_rank(-1)


def test_canonical_frozen_values():
    assert canonical(()) == ()
    assert canonical(("b", "b")) == ("a", "a")
    assert canonical(("b", "c", "b", "c")) == ("a", "b", "a", "b")
    assert canonical(("c", "a", "b", "c", "a", "b")) == TREFOIL
    assert canonical(("b", "b", "a", "a")) == ("a", "a", "b", "b")


def test_canonical_is_least_variant():
    # The canonical rank sequence must be the minimum over every
    # rotation of the word and of its reverse.
    for n in (2, 3):
        for word in oracles.enumerate_matchings(n):
            expected = min(oracles.all_canonical_variants(word))
            assert rank_sequence(canonical(word)) == expected


def test_canonical_idempotent_and_invariant():
    for n in (2, 3):
        for word in oracles.enumerate_matchings(n):
            c = canonical(word)
            assert canonical(c) == c
            rotated = word[2:] + word[:2]
            assert canonical(rotated) == c
            assert canonical(word[::-1]) == c
            relabeled = tuple(label.upper() for label in word)
            assert canonical(relabeled) == c


def test_words_equal():
    assert words_equal(TREFOIL, ("c", "a", "b", "c", "a", "b"))
    assert not words_equal(TREFOIL, FIGURE8)


def test_fresh_label():
    assert fresh_label(()) == "a"
    assert fresh_label(CURL) == "b"
    assert fresh_label(("b", "b")) == "a"


def test_all_slots():
    assert list(all_slots(())) == [0]
    assert list(all_slots(CURL)) == [0, 1]


def test_connected_sum_relabels_and_splices():
    joined = connected_sum(CURL, CURL, slot=1)
    assert joined == ("a", "b", "b", "a")
    assert sorted(prime_decompose(joined)) == [("a", "a"), ("a", "a")]


def test_connected_sum_slot_range():
    with pytest.raises(ValueError):
        connected_sum(CURL, CURL, slot=3)
    assert connected_sum((), TREFOIL) == TREFOIL


def test_prime_examples():
    assert is_prime(CURL)
    assert is_prime(TREFOIL)
    assert is_prime(FIGURE8)
    assert not is_prime(())
    assert not is_prime(("a", "a", "b", "b"))


def test_prime_decompose_frozen():
    assert prime_decompose(()) == ()
    assert prime_decompose(TREFOIL) == (TREFOIL,)
    assert prime_decompose(("a", "a", "b", "b")) == (("a", "a"), ("a", "a"))
    assert prime_decompose(("x", "y", "y", "z", "z", "x")) == (
        ("a", "a"),
        ("a", "a"),
        ("a", "a"),
    )


def test_prime_decompose_recovers_random_sums(rng):
    primes = [CURL, TREFOIL, FIGURE8, ("a", "b", "a", "b")]
    for _ in range(200):
        parts = [rng.choice(primes) for _ in range(rng.randint(1, 3))]
        word = ()
        for part in parts:
            word = connected_sum(word, part, slot=rng.randrange(max(1, len(word))))
        expected = sorted(canonical(p) for p in parts)
        assert sorted(prime_decompose(word)) == expected


def test_prime_decompose_factors_are_prime():
    for n in (2, 3):
        for word in oracles.enumerate_matchings(n):
            factors = prime_decompose(word)
            assert sum(chord_count(f) for f in factors) == n
            for factor in factors:
                assert is_prime(factor)
                assert canonical(factor) == factor


def test_prime_decompose_seam_pairs():
    # Removing an inner factor can create a new adjacency at the seam;
    # the remainder must still decompose fully.
    word = ("a", "x", "x", "a", "b", "b")
    assert prime_decompose(word) == (("a", "a"), ("a", "a"), ("a", "a"))


def test_connected_sum_slot_positions_cover_cyclic_choices():
    base = TREFOIL
    results = {canonical(connected_sum(base, CURL, slot=s)) for s in all_slots(base)}
    # Every splice of a curl into the trefoil is one of these words.
    for candidate in results:
        assert chord_count(candidate) == 4
    assert len(results) >= 1
