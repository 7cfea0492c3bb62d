"""Local rewrites of double occurrence words: curls and triangles.

A curl move inserts or deletes a fresh adjacent equal pair.  A triangle
site is three pairwise disjoint cyclic factors of length two whose
endpoint pairs are the three two element subsets of three chords; the
move swaps the two labels inside each factor.  The swap toggles exactly
the three interleavings among the site chords and nothing else, so the
cross chord count changes by +3 or -3 when the three sides bound a
coherently oriented triangle (0 or 3 internal interleavings) and by +1
or -1 otherwise.  The first kind preserves both the residue of the
cross chord count mod 3 and the clique union flag; the second kind
preserves the trivializing number.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .embedding import is_realizable
from .invariants import cross_chord_number, interlacement
from .words import Word, all_slots, fresh_label, validate_word


class MoveError(ValueError):
    """The site does not apply to the word, or the move broke a law."""


class MoveKind(enum.Enum):
    CURL_ADD = "curl-add"
    CURL_DELETE = "curl-delete"
    STRONG_EXPAND = "strong-expand"
    STRONG_CONTRACT = "strong-contract"
    WEAK_SLIDE = "weak-slide"

    @property
    def is_triangle(self) -> bool:
        return self in (
            MoveKind.STRONG_EXPAND,
            MoveKind.STRONG_CONTRACT,
            MoveKind.WEAK_SLIDE,
        )

    @property
    def is_strong_triangle(self) -> bool:
        return self in (MoveKind.STRONG_EXPAND, MoveKind.STRONG_CONTRACT)


_KIND_ORDER = {
    MoveKind.CURL_ADD: 0,
    MoveKind.CURL_DELETE: 1,
    MoveKind.STRONG_CONTRACT: 2,
    MoveKind.STRONG_EXPAND: 3,
    MoveKind.WEAK_SLIDE: 4,
}

MOVE_SETS = {
    "r1": frozenset({MoveKind.CURL_ADD, MoveKind.CURL_DELETE}),
    "strong": frozenset(
        {
            MoveKind.CURL_ADD,
            MoveKind.CURL_DELETE,
            MoveKind.STRONG_EXPAND,
            MoveKind.STRONG_CONTRACT,
        }
    ),
    "weak": frozenset(
        {MoveKind.CURL_ADD, MoveKind.CURL_DELETE, MoveKind.WEAK_SLIDE}
    ),
    "both": frozenset(MoveKind),
}


def move_set(name: str) -> "frozenset[MoveKind]":
    try:
        return MOVE_SETS[name]
    except KeyError:
        raise MoveError(
            f"unknown move set {name!r}; choose from {sorted(MOVE_SETS)}"
        ) from None


def expected_cross_change(kind: MoveKind) -> "Tuple[int, ...]":
    """Admissible changes of the cross chord count for one move kind."""
    return {
        MoveKind.CURL_ADD: (0,),
        MoveKind.CURL_DELETE: (0,),
        MoveKind.STRONG_EXPAND: (3,),
        MoveKind.STRONG_CONTRACT: (-3,),
        MoveKind.WEAK_SLIDE: (-1, 1),
    }[kind]


@dataclass(frozen=True, order=True)
class MoveSite:
    """A place where one move applies.

    ``positions`` holds the insertion slot for CURL_ADD, the first pair
    position for CURL_DELETE, and the three sorted factor start
    positions for triangle kinds (factor i covers positions i and i+1,
    cyclically).  ``chords`` names the labels involved.
    """

    kind: MoveKind
    positions: Tuple[int, ...]
    chords: Tuple[str, ...]

    def describe(self) -> str:
        spots = ",".join(str(p) for p in self.positions)
        names = " ".join(self.chords) if self.chords else "-"
        return f"{self.kind.value} at [{spots}] on {names}"


# dataclass(order=True) would compare MoveKind members, which are not
# orderable; sort sites with this key instead.
def site_sort_key(site: MoveSite) -> Tuple[int, Tuple[int, ...]]:
    return (_KIND_ORDER[site.kind], site.positions)


def find_curl_add_sites(word: Sequence[str]) -> List[MoveSite]:
    w = tuple(word)
    validate_word(w)
    return [MoveSite(MoveKind.CURL_ADD, (slot,), ()) for slot in all_slots(w)]


def find_curl_delete_sites(word: Sequence[str]) -> List[MoveSite]:
    w = tuple(word)
    validate_word(w)
    total = len(w)
    return [
        MoveSite(MoveKind.CURL_DELETE, (i,), (w[i],))
        for i in range(total)
        if w[i] == w[(i + 1) % total]
    ]


def _triangle_kind(adjacency, chords: Tuple[str, str, str]) -> Tuple[MoveKind, int]:
    a, b, c = chords
    internal = (
        (b in adjacency[a]) + (c in adjacency[a]) + (c in adjacency[b])
    )
    if internal == 3:
        return MoveKind.STRONG_CONTRACT, internal
    if internal == 0:
        return MoveKind.STRONG_EXPAND, internal
    return MoveKind.WEAK_SLIDE, internal


def find_triangle_sites(word: Sequence[str]) -> List[MoveSite]:
    """All triangle sites, keyed by their factor start positions.

    Distinct sites may involve the same three chords.
    """
    w = tuple(word)
    validate_word(w)
    total = len(w)
    if total < 6:
        return []
    adjacency = interlacement(w)
    # Only factors with two distinct labels can be triangle sides.
    candidates = [
        (s, frozenset((w[s], w[(s + 1) % total])))
        for s in range(total)
        if w[s] != w[(s + 1) % total]
    ]
    sites: List[MoveSite] = []
    for a in range(len(candidates)):
        i, pair_i = candidates[a]
        span_i = {i, (i + 1) % total}
        for b in range(a + 1, len(candidates)):
            j, pair_j = candidates[b]
            span_j = {j, (j + 1) % total}
            if span_i & span_j:
                continue
            for c in range(b + 1, len(candidates)):
                k, pair_k = candidates[c]
                span_k = {k, (k + 1) % total}
                if (span_i | span_j) & span_k:
                    continue
                involved = pair_i | pair_j | pair_k
                if len(involved) != 3 or len({pair_i, pair_j, pair_k}) != 3:
                    continue
                chords = tuple(sorted(involved))
                kind, _ = _triangle_kind(adjacency, chords)  # type: ignore[arg-type]
                sites.append(MoveSite(kind, (i, j, k), chords))
    return sites


def find_sites(word: Sequence[str], kinds: Iterable[MoveKind]) -> List[MoveSite]:
    """Every site of the requested kinds, deterministically ordered."""
    wanted = frozenset(kinds)
    sites: List[MoveSite] = []
    if MoveKind.CURL_ADD in wanted:
        sites.extend(find_curl_add_sites(word))
    if MoveKind.CURL_DELETE in wanted:
        sites.extend(find_curl_delete_sites(word))
    if wanted & {MoveKind.STRONG_EXPAND, MoveKind.STRONG_CONTRACT, MoveKind.WEAK_SLIDE}:
        sites.extend(
            site for site in find_triangle_sites(word) if site.kind in wanted
        )
    return sorted(sites, key=site_sort_key)


def apply_move(word: Sequence[str], site: MoveSite) -> Word:
    """Apply one move and enforce its laws.

    The cross chord change must match the move kind, and a realizable
    word must stay realizable; violations raise MoveError.
    """
    w = tuple(word)
    validate_word(w)
    total = len(w)

    if site.kind == MoveKind.CURL_ADD:
        (slot,) = site.positions
        if slot not in all_slots(w):
            raise MoveError(f"slot {slot} out of range")
        label = fresh_label(w)
        result = w[:slot] + (label, label) + w[slot:]
    elif site.kind == MoveKind.CURL_DELETE:
        (i,) = site.positions
        if total == 0 or w[i] != w[(i + 1) % total]:
            raise MoveError(f"no adjacent equal pair at position {i}")
        if i + 1 < total:
            result = w[:i] + w[i + 2 :]
        else:
            result = w[1:i]
    elif site.kind.is_triangle:
        if len(site.positions) != 3 or total < 6:
            raise MoveError("triangle sites need three factors")
        if any(not 0 <= p < total for p in site.positions):
            raise MoveError(f"factor positions {site.positions} out of range")
        result_list = list(w)
        seen_positions: set = set()
        for start in site.positions:
            nxt = (start + 1) % total
            if start in seen_positions or nxt in seen_positions:
                raise MoveError("triangle factors overlap")
            seen_positions.update((start, nxt))
            result_list[start], result_list[nxt] = w[nxt], w[start]
        pairs = {
            frozenset((w[s], w[(s + 1) % total])) for s in site.positions
        }
        if len(pairs) != 3 or any(len(p) != 2 for p in pairs):
            raise MoveError("factors are not three distinct two chord sides")
        involved = frozenset(w[p] for p in seen_positions)
        if involved != frozenset(site.chords) or len(involved) != 3:
            raise MoveError("site chords do not match the word")
        actual_kind, _ = _triangle_kind(
            interlacement(w), tuple(sorted(involved))  # type: ignore[arg-type]
        )
        if actual_kind != site.kind:
            raise MoveError(
                f"site is {actual_kind.value} on this word, not {site.kind.value}"
            )
        result = tuple(result_list)
    else:  # pragma: no cover - enum is closed
        raise MoveError(f"unknown move kind {site.kind}")

    change = cross_chord_number(result) - cross_chord_number(w)
    if change not in expected_cross_change(site.kind):
        raise MoveError(
            f"{site.kind.value} changed the cross chord count by {change}"
        )
    if is_realizable(w) and not is_realizable(result):
        raise MoveError(
            f"{site.describe()} broke realizability on {' '.join(w)}"
        )
    return result


def neighbors(word: Sequence[str], kinds: Iterable[MoveKind]) -> List[Tuple[MoveSite, Word]]:
    """(site, result) for every applicable site; law breaking sites are skipped."""
    out: List[Tuple[MoveSite, Word]] = []
    for site in find_sites(word, kinds):
        try:
            out.append((site, apply_move(word, site)))
        except MoveError:
            continue
    return out
