"""Equivalence class search, word enumeration, and structured families.

Classes under move sets that include curl insertion are infinite, so
searches run inside a window: a chord count cap and a state cap.  A
completed path certifies equivalence; exhausting the window certifies
nothing, and the result says so.  Some move sets carry complete or
partial invariants that decide inequivalence outright: the curl reduced
normal form for curl moves alone, the cross chord residue mod 3 and the
clique union flag for the strong set, and the trivializing number for
the weak set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .embedding import faces, is_realizable
from .invariants import (
    CURL_SHAPE,
    TREFOIL_SHAPE,
    cross_chord_number,
    h_invariant,
    r1_normal_form,
    reduce_r1,
    trivializing_number,
)
from .moves import MoveKind, MoveSite, apply_move, move_set, neighbors
from .words import (
    Word,
    canonical,
    chord_count,
    label_for_rank,
    prime_decompose,
    validate_word,
)


@dataclass(frozen=True)
class SearchConfig:
    """Window for bounded class search."""

    max_chords: int = 6
    max_states: int = 200000


@dataclass(frozen=True)
class WitnessPath:
    """A replayable move sequence: moves[i] applies to words[i]."""

    words: Tuple[Word, ...]
    moves: Tuple[MoveSite, ...]

    def __len__(self) -> int:
        return len(self.moves)


def verify_path(path: WitnessPath) -> bool:
    """Replay every move; words are compared as projections."""
    if len(path.words) != len(path.moves) + 1:
        return False
    for i, site in enumerate(path.moves):
        if canonical(apply_move(path.words[i], site)) != canonical(path.words[i + 1]):
            return False
    return True


@dataclass
class ClassSearchResult:
    start: Word
    kinds: FrozenSet[MoveKind]
    config: SearchConfig
    words: FrozenSet[Word]
    truncated: bool
    parents: Dict[Word, Tuple[Word, MoveSite]] = field(repr=False)

    def __contains__(self, word: Sequence[str]) -> bool:
        return canonical(word) in self.words

    def edges(self) -> Iterator[Tuple[Word, MoveSite, Word]]:
        """The search tree: one discovering edge per reached word."""
        for child, (parent, site) in self.parents.items():
            yield parent, site, child

    def path_to(self, target: Sequence[str]) -> Optional[WitnessPath]:
        goal = canonical(target)
        if goal not in self.words:
            return None
        words = [goal]
        moves: List[MoveSite] = []
        while words[-1] != self.start:
            parent, site = self.parents[words[-1]]
            moves.append(site)
            words.append(parent)
        return WitnessPath(tuple(reversed(words)), tuple(reversed(moves)))


def search_class(
    word: Sequence[str],
    kinds: Sequence[MoveKind],
    config: SearchConfig = SearchConfig(),
    stop_at: "Sequence[str] | None" = None,
) -> ClassSearchResult:
    """Breadth first closure of a word under the given moves, windowed.

    States are canonical forms.  With ``stop_at`` the search returns as
    soon as that word is reached.
    """
    start = canonical(word)
    goal = canonical(stop_at) if stop_at is not None else None
    kind_set = frozenset(kinds)
    visited = {start}
    parents: Dict[Word, Tuple[Word, MoveSite]] = {}
    queue = deque([start])
    truncated = chord_count(start) > config.max_chords
    while queue:
        if goal is not None and goal in visited:
            break
        current = queue.popleft()
        for site, result in neighbors(current, kind_set):
            if chord_count(result) > config.max_chords:
                truncated = True
                continue
            shape = canonical(result)
            if shape in visited:
                continue
            if len(visited) >= config.max_states:
                truncated = True
                continue
            visited.add(shape)
            parents[shape] = (current, site)
            queue.append(shape)
    return ClassSearchResult(
        start=start,
        kinds=kind_set,
        config=config,
        words=frozenset(visited),
        truncated=truncated,
        parents=parents,
    )


@dataclass(frozen=True)
class EquivalenceResult:
    verdict: str  # "equivalent" | "not-equivalent" | "unknown"
    reason: str
    path: Optional[WitnessPath]

    def to_dict(self) -> dict:
        payload: dict = {"verdict": self.verdict, "reason": self.reason}
        if self.path is not None:
            payload["path"] = [list(w) for w in self.path.words]
            payload["moves"] = [site.describe() for site in self.path.moves]
        return payload


def equivalence_query(
    first: Sequence[str],
    second: Sequence[str],
    moves_name: str = "both",
    config: "SearchConfig | None" = None,
) -> EquivalenceResult:
    """Decide, refute, or give up on equivalence under a named move set.

    Inequivalence verdicts come from invariants and are certain.
    Equivalence verdicts come with a replayable path.  "unknown" only
    reports that the window was exhausted.
    """
    a = canonical(first)
    b = canonical(second)
    kinds = move_set(moves_name)
    if config is None:
        config = SearchConfig(
            max_chords=max(chord_count(a), chord_count(b)) + 2
        )

    if moves_name == "r1":
        # The curl reduced normal form decides this move set completely.
        na, nb = r1_normal_form(a), r1_normal_form(b)
        if na != nb:
            return EquivalenceResult(
                "not-equivalent",
                f"curl reduced normal forms differ: {' '.join(na) or '-'} vs {' '.join(nb) or '-'}",
                None,
            )
    elif moves_name == "strong":
        xa, xb = cross_chord_number(a) % 3, cross_chord_number(b) % 3
        if xa != xb:
            return EquivalenceResult(
                "not-equivalent",
                f"cross chord residues mod 3 differ: {xa} vs {xb}",
                None,
            )
        ha, hb = h_invariant(a), h_invariant(b)
        if ha != hb:
            return EquivalenceResult(
                "not-equivalent",
                f"clique union flags differ: H={ha} vs H={hb}",
                None,
            )
    elif moves_name == "weak":
        ta, tb = trivializing_number(a), trivializing_number(b)
        if ta != tb:
            return EquivalenceResult(
                "not-equivalent",
                f"trivializing numbers differ: {ta} vs {tb}",
                None,
            )

    result = search_class(a, kinds, config, stop_at=b)
    path = result.path_to(b)
    if path is not None:
        return EquivalenceResult(
            "equivalent", f"path of {len(path)} moves found", path
        )
    if moves_name == "r1":
        # Normal forms matched, so a path exists; the window was just
        # too small to exhibit it.
        return EquivalenceResult(
            "equivalent",
            "curl reduced normal forms match (no path within the window)",
            None,
        )
    return EquivalenceResult(
        "unknown",
        f"no path within chords <= {config.max_chords}, states <= {config.max_states}",
        None,
    )


@lru_cache(maxsize=None)
def enumerate_words(n: int) -> Tuple[Word, ...]:
    """All canonical double occurrence words with n chords, sorted."""
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    if n == 0:
        return ((),)
    shapes = set()

    def pair_up(free: Tuple[int, ...], word: List[str], next_rank: int) -> None:
        if not free:
            shapes.add(canonical(tuple(word)))
            return
        first = free[0]
        label = label_for_rank(next_rank)
        for other in free[1:]:
            word[first] = word[other] = label
            pair_up(tuple(p for p in free[1:] if p != other), word, next_rank + 1)
            word[first] = word[other] = ""

    pair_up(tuple(range(2 * n)), [""] * (2 * n), 0)
    return tuple(sorted(shapes))


def enumerate_realizable(n: int) -> Tuple[Word, ...]:
    return tuple(w for w in enumerate_words(n) if is_realizable(w))


def strong_trivial_test(word: Sequence[str]) -> bool:
    """True when every prime factor is a curl or a trefoil shape.

    Curl factors are filtered from the raw decomposition rather than
    removed by curl deletion first: a curl wrapped around another
    summand has no adjacent pair to delete, but it is still a curl
    factor of the word.
    """
    w = tuple(word)
    validate_word(w)
    return all(
        factor in (TREFOIL_SHAPE, CURL_SHAPE) for factor in prime_decompose(w)
    )


def strong_class_test(word: Sequence[str], base: Sequence[str]) -> bool:
    """Membership in the strong class of a small face free base.

    The base must realize with no monogons, no coherent bigons, and no
    coherent trigons (ValueError otherwise).  Membership holds when the
    word's prime factors, curls aside, are the base's prime factors
    plus any number of trefoils.
    """
    b = tuple(base)
    inventory = faces(b)
    problems = []
    if inventory.monogons:
        problems.append(f"{inventory.monogons} monogon(s)")
    if inventory.coherent_bigons:
        problems.append(f"{inventory.coherent_bigons} coherent bigon(s)")
    if inventory.coherent_trigons:
        problems.append(f"{inventory.coherent_trigons} coherent trigon(s)")
    if problems:
        raise ValueError(
            "base word is not admissible, it has " + " and ".join(problems)
        )
    remaining = [
        factor for factor in prime_decompose(tuple(word)) if factor != CURL_SHAPE
    ]
    for factor in prime_decompose(b):
        if factor not in remaining:
            return False
        remaining.remove(factor)
    return all(factor == TREFOIL_SHAPE for factor in remaining)


def twist_family(n: int) -> Word:
    """The n twist standard projection: two clasp chords and n twists.

    Small members coincide with familiar knot shadows (1 gives the
    trefoil shadow, 2 the figure eight shadow); every member is prime
    with trivializing number 2.
    """
    if n < 1:
        raise ValueError("twist families start at 1")
    clasp_p = label_for_rank(0)
    clasp_q = label_for_rank(1)
    twists = [label_for_rank(i + 2) for i in range(n)]
    if n % 2 == 1:
        word = (
            [clasp_p, clasp_q]
            + twists
            + [clasp_p, clasp_q]
            + list(reversed(twists))
        )
    else:
        word = (
            twists
            + [clasp_p, clasp_q]
            + list(reversed(twists))
            + [clasp_q, clasp_p]
        )
    return tuple(word)
