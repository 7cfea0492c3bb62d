"""Crossing resolutions of realized words and their state sums.

A realized word becomes a knot diagram once every passage point is
resolved: each chord names one of its two passages as the over strand.
The bracket polynomial is then the usual state sum.  At a crossing the
two over-strand dart ends either join their counterclockwise
predecessors (an A split) or their counterclockwise successors (a B
split); a state picks one split per crossing, closes the arcs into
loops, and contributes A^(a - b) * (-A^2 - A^(-2))^(loops - 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

from .embedding import realize, vertex_rotations
from .laurent import (
    Laurent,
    laurent_add,
    laurent_mul,
    laurent_one,
    laurent_pow,
    monomial,
)
from .words import Word, chord_count, letters, positions, validate_word


class DiagramError(ValueError):
    """The over-strand assignment does not fit the word."""


@dataclass(frozen=True)
class Diagram:
    """A realized word with an over strand chosen at every chord.

    ``bits`` is the rotation assignment of the underlying realization
    and ``over_first`` marks, per chord in first occurrence order,
    whether the over strand is the chord's first passage.
    """

    word: Word
    bits: Tuple[int, ...]
    over_first: Tuple[bool, ...]

    @property
    def crossings(self) -> int:
        return chord_count(self.word)

    def sign(self, index: int) -> int:
        # With both strands oriented by the traversal, the crossing is
        # positive exactly when the under strand leaves to the left of
        # the over strand; in the stored rotation data that happens when
        # the over strand and the rotation bit agree.
        return 1 if self.over_first[index] == (self.bits[index] == 0) else -1

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(self.sign(i) for i in range(self.crossings))

    @property
    def writhe(self) -> int:
        return sum(self.signs)


def resolve(word: Sequence[str], over_first: Sequence[bool]) -> Diagram:
    """Build a diagram from a word and an over-strand choice per chord."""
    w = tuple(word)
    validate_word(w)
    marks = tuple(bool(b) for b in over_first)
    if len(marks) != chord_count(w):
        raise DiagramError(
            f"need one over-strand mark per chord, got {len(marks)} for {chord_count(w)}"
        )
    return Diagram(word=w, bits=realize(w).bits, over_first=marks)


def positive_resolution(word: Sequence[str]) -> Diagram:
    """The resolution in which every crossing is positive."""
    w = tuple(word)
    validate_word(w)
    bits = realize(w).bits
    return Diagram(word=w, bits=bits, over_first=tuple(b == 0 for b in bits))


def alternating_diagram(word: Sequence[str]) -> Diagram:
    """The resolution that goes over at even and under at odd passages.

    The two passages of any chord of a realizable word sit at positions
    of opposite parity (each chord meets every other one an even number
    of times in between), so marking the even positions as over strands
    alternates over and under along the whole traversal.
    """
    w = tuple(word)
    validate_word(w)
    bits = realize(w).bits
    pos = positions(w)
    marks = []
    for label in letters(w):
        p, q = pos[label]
        if (p + q) % 2 == 0:
            raise DiagramError(f"passages of chord {label!r} share parity")
        marks.append(p % 2 == 0)
    return Diagram(word=w, bits=bits, over_first=tuple(marks))


def mirror_diagram(diagram: Diagram) -> Diagram:
    """Reflect the realization while keeping every over strand."""
    flipped = tuple(1 - b for b in diagram.bits)
    return Diagram(word=diagram.word, bits=flipped, over_first=diagram.over_first)


def _split_pairs(diagram: Diagram) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Per chord: the two A-split dart joins then the two B-split joins."""
    w = diagram.word
    total = len(w)
    rotations = vertex_rotations(w, diagram.bits)
    pos = positions(w)
    out = []
    for index, label in enumerate(letters(w)):
        p, q = pos[label]
        over = p if diagram.over_first[index] else q
        over_darts = {2 * over, 2 * ((over - 1) % total) + 1}
        cycle = rotations[index]
        a_joins = []
        b_joins = []
        for k, dart in enumerate(cycle):
            if dart in over_darts:
                a_joins.append((cycle[(k - 1) % 4], dart))
                b_joins.append((dart, cycle[(k + 1) % 4]))
        out.append((a_joins[0], a_joins[1], b_joins[0], b_joins[1]))
    return tuple(out)


class _DartUnion:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)


def _loops_for_state(
    total: int,
    splits: Sequence[Tuple[Tuple[int, int], ...]],
    state: Sequence[int],
) -> int:
    uf = _DartUnion(2 * total)
    for arc in range(total):
        uf.union(2 * arc, 2 * arc + 1)
    for joins, choice in zip(splits, state):
        first, second = (joins[0], joins[1]) if choice == 0 else (joins[2], joins[3])
        uf.union(first[0], first[1])
        uf.union(second[0], second[1])
    return len({uf.find(d) for d in range(2 * total)})


def smoothing_loops(diagram: Diagram, state: Sequence[int]) -> int:
    """Loop count after splitting each crossing per the 0/1 state."""
    if len(state) != diagram.crossings:
        raise DiagramError("state length must match the crossing count")
    if not diagram.word:
        return 1
    return _loops_for_state(len(diagram.word), _split_pairs(diagram), state)


def state_loop_counts(diagram: Diagram) -> Tuple[int, ...]:
    """Loop counts over all states, in binary counting order (0 = A)."""
    n = diagram.crossings
    if n == 0:
        return (1,)
    splits = _split_pairs(diagram)
    total = len(diagram.word)
    return tuple(
        _loops_for_state(total, splits, state)
        for state in itertools.product((0, 1), repeat=n)
    )


def kauffman_bracket(diagram: Diagram) -> Laurent:
    """State sum over all splits, normalized to 1 on the empty word."""
    n = diagram.crossings
    if n == 0:
        return laurent_one()
    splits = _split_pairs(diagram)
    total = len(diagram.word)
    delta = {2: -1, -2: -1}
    bracket: Laurent = {}
    for state in itertools.product((0, 1), repeat=n):
        b_count = sum(state)
        loops = _loops_for_state(total, splits, state)
        term = laurent_mul(
            monomial(n - 2 * b_count),
            laurent_pow(delta, loops - 1),
        )
        bracket = laurent_add(bracket, term)
    return bracket


def jones_normalized(diagram: Diagram) -> Laurent:
    """The bracket rescaled by the writhe so untwisted curls drop out."""
    w = diagram.writhe
    factor = monomial(-3 * w, 1 if w % 2 == 0 else -1)
    return laurent_mul(factor, kauffman_bracket(diagram))


def determinant(diagram: Diagram) -> int:
    """Absolute value of the normalized bracket at a fourth root sign.

    The normalized bracket of a single closed curve only carries
    exponents divisible by four; substituting -1 for the fourth power
    of the variable gives an integer whose absolute value does not
    depend on the over-strand choices' handedness.
    """
    poly = jones_normalized(diagram)
    value = 0
    for exponent, coefficient in poly.items():
        if exponent % 4 != 0:
            raise RuntimeError(
                f"normalized bracket exponent {exponent} not divisible by 4"
            )
        value += coefficient * (-1 if (exponent // 4) % 2 else 1)
    return abs(value)


@lru_cache(maxsize=4096)
def _alternating_determinant_cached(w: Word) -> int:
    return determinant(alternating_diagram(w))


def alternating_determinant(word: Sequence[str]) -> int:
    """Determinant of the alternating resolution of the word."""
    w = tuple(word)
    validate_word(w)
    return _alternating_determinant_cached(w)


def seifert_state(diagram: Diagram) -> Tuple[int, ...]:
    """The state whose splits follow the traversal orientation."""
    return tuple(0 if s > 0 else 1 for s in diagram.signs)


def oriented_loop_count(diagram: Diagram) -> int:
    """Loops of the orientation-respecting split at every crossing."""
    return smoothing_loops(diagram, seifert_state(diagram))
