"""Laurent arithmetic, crossing resolutions, state sums, and determinants."""

import itertools

import pytest

from flatknots.embedding import NotRealizableError, realize
from flatknots.explore import enumerate_realizable, twist_family
from flatknots.knots import (
    Diagram,
    DiagramError,
    alternating_determinant,
    alternating_diagram,
    determinant,
    jones_normalized,
    kauffman_bracket,
    mirror_diagram,
    oriented_loop_count,
    positive_resolution,
    resolve,
    seifert_state,
    smoothing_loops,
    state_loop_counts,
)
from flatknots.laurent import (
    laurent_add,
    laurent_equal,
    laurent_format,
    laurent_from_pairs,
    laurent_mirror,
    laurent_mul,
    laurent_neg,
    laurent_one,
    laurent_pow,
    laurent_zero,
    monomial,
)
from flatknots.moves import MoveKind, apply_move, find_sites
from flatknots.words import connected_sum

from oracles import goeritz_determinant, seifert_circles
from sample_words import CURL, FIGURE8, NONREALIZABLE_2, TREFOIL


def test_laurent_basic_arithmetic():
    a = laurent_from_pairs([(0, 1), (2, 3)])
    b = laurent_from_pairs([(2, -3), (5, 1)])
    assert laurent_add(a, b) == {0: 1, 5: 1}
    assert laurent_mul(monomial(1, 2), monomial(-1, 3)) == {0: 6}
    assert laurent_mul(a, laurent_zero()) == {}
    assert laurent_neg(a) == {0: -1, 2: -3}
    assert laurent_pow(monomial(2, -1), 3) == {6: -1}
    assert laurent_equal(laurent_add(a, laurent_neg(a)), laurent_zero())


def test_laurent_pow_rejects_negative():
    with pytest.raises(ValueError):
        laurent_pow(laurent_one(), -1)


def test_laurent_format_and_mirror():
    poly = laurent_from_pairs([(3, -1), (-7, 2)])
    assert laurent_format(poly) == "-7:2 3:-1"
    assert laurent_format(laurent_zero()) == "0"
    assert laurent_mirror(poly) == {-3: -1, 7: 2}


def test_empty_word_diagram():
    diagram = positive_resolution(())
    assert diagram.crossings == 0
    assert diagram.writhe == 0
    assert kauffman_bracket(diagram) == {0: 1}
    assert jones_normalized(diagram) == {0: 1}
    assert determinant(diagram) == 1
    assert state_loop_counts(diagram) == (1,)


def test_positive_curl_bracket():
    diagram = positive_resolution(CURL)
    assert diagram.signs == (1,)
    assert kauffman_bracket(diagram) == {3: -1}
    assert jones_normalized(diagram) == {0: 1}
    assert determinant(diagram) == 1


def test_positive_trefoil_values():
    diagram = positive_resolution(TREFOIL)
    assert diagram.signs == (1, 1, 1)
    assert diagram.writhe == 3
    assert kauffman_bracket(diagram) == {-7: 1, -3: -1, 5: -1}
    assert jones_normalized(diagram) == {-4: 1, -12: 1, -16: -1}
    assert determinant(diagram) == 3


def test_alternating_trefoil_matches_positive_one():
    # The all positive resolution of this word happens to alternate.
    assert alternating_diagram(TREFOIL).signs == (1, 1, 1)
    assert alternating_determinant(TREFOIL) == 3


def test_alternating_figure_eight_values():
    diagram = alternating_diagram(FIGURE8)
    assert diagram.signs == (1, 1, -1, -1)
    assert diagram.writhe == 0
    assert jones_normalized(diagram) == {-8: 1, -4: -1, 0: 1, 4: -1, 8: 1}
    assert alternating_determinant(FIGURE8) == 5


def test_trefoil_resolutions_split_by_alternation():
    dets = []
    for marks in itertools.product((False, True), repeat=3):
        dets.append(determinant(resolve(TREFOIL, marks)))
    # Only the two alternating mark patterns knot; all others untie.
    assert dets == [1, 1, 3, 1, 1, 3, 1, 1]


def test_mirror_reverses_bracket_exponents():
    for word in (CURL, TREFOIL, FIGURE8, twist_family(3)):
        diagram = alternating_diagram(word)
        mirrored = mirror_diagram(diagram)
        assert laurent_equal(
            kauffman_bracket(mirrored), laurent_mirror(kauffman_bracket(diagram))
        )
        assert mirrored.writhe == -diagram.writhe
        assert determinant(mirrored) == determinant(diagram)


def test_twist_family_determinants_step_by_two():
    assert [alternating_determinant(twist_family(n)) for n in range(1, 6)] == [
        3, 5, 7, 9, 11,
    ]


def test_determinant_is_odd_and_matches_spanning_count():
    for n in range(1, 5):
        for word in enumerate_realizable(n):
            det = alternating_determinant(word)
            assert det % 2 == 1
            assert det == goeritz_determinant(word, realize(word).bits)


def test_state_loops_never_exceed_chords_plus_one():
    for n in range(1, 5):
        for word in enumerate_realizable(n):
            diagram = alternating_diagram(word)
            counts = state_loop_counts(diagram)
            assert len(counts) == 2 ** n
            assert max(counts) <= n + 1
            assert min(counts) >= 1


def test_oriented_split_counts_match_arc_merge_oracle():
    for n in range(1, 5):
        for word in enumerate_realizable(n):
            diagram = positive_resolution(word)
            assert seifert_state(diagram) == (0,) * n
            assert oriented_loop_count(diagram) == seifert_circles(word)
    assert oriented_loop_count(positive_resolution(CURL)) == 2
    assert oriented_loop_count(positive_resolution(TREFOIL)) == 2
    assert oriented_loop_count(positive_resolution(FIGURE8)) == 3


def test_determinant_multiplies_over_connected_sums():
    assert alternating_determinant(connected_sum(TREFOIL, FIGURE8)) == 15
    assert alternating_determinant(connected_sum(TREFOIL, TREFOIL)) == 9
    assert alternating_determinant(connected_sum(FIGURE8, CURL, slot=3)) == 5


def test_curl_insertion_preserves_the_determinant():
    for word in (TREFOIL, FIGURE8):
        base = alternating_determinant(word)
        for site in find_sites(word, (MoveKind.CURL_ADD,)):
            curled = apply_move(word, site)
            assert alternating_determinant(curled) == base


def test_curl_insertion_preserves_jones_up_to_mirror():
    word = TREFOIL
    reference = jones_normalized(alternating_diagram(word))
    site = find_sites(word, (MoveKind.CURL_ADD,))[0]
    curled = jones_normalized(alternating_diagram(apply_move(word, site)))
    assert curled in (reference, laurent_mirror(reference))


def test_resolve_validates_mark_count():
    with pytest.raises(DiagramError, match="one over-strand mark per chord"):
        resolve(TREFOIL, (True,))


def test_nonrealizable_words_cannot_resolve():
    with pytest.raises(NotRealizableError):
        positive_resolution(NONREALIZABLE_2)
    with pytest.raises(NotRealizableError):
        alternating_diagram(NONREALIZABLE_2)


def test_smoothing_loops_validates_state_length():
    diagram = positive_resolution(TREFOIL)
    with pytest.raises(DiagramError):
        smoothing_loops(diagram, (0,))
    assert smoothing_loops(diagram, (0, 0, 0)) == 2


def test_sign_depends_on_over_strand_choice():
    diagram = positive_resolution(TREFOIL)
    flipped = Diagram(
        word=diagram.word,
        bits=diagram.bits,
        over_first=tuple(not m for m in diagram.over_first),
    )
    assert flipped.signs == (-1, -1, -1)
    assert flipped.writhe == -3


def test_bracket_of_fully_flipped_resolution_mirrors():
    diagram = positive_resolution(TREFOIL)
    flipped = Diagram(
        word=diagram.word,
        bits=diagram.bits,
        over_first=tuple(not m for m in diagram.over_first),
    )
    assert laurent_equal(
        kauffman_bracket(flipped), laurent_mirror(kauffman_bracket(diagram))
    )
