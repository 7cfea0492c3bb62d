"""Cyclic double occurrence words and their canonical forms.

A word is a tuple of string labels in which every label occurs exactly
twice.  Words are read cyclically: rotations, reversal, and relabeling
all describe the same closed curve, so two words denote the same
projection exactly when their canonical forms are equal.  The empty
word denotes the simple closed curve.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, Sequence, Tuple

Word = Tuple[str, ...]

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


class WordError(ValueError):
    """Input text or label sequence is not a double occurrence word."""


def label_for_rank(rank: int) -> str:
    """Standard label for chord number ``rank``: a..z, then x26, x27, ..."""
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    if rank < len(_ALPHABET):
        return _ALPHABET[rank]
    return f"x{rank}"


def parse_word(text: str) -> Word:
    """Parse a word from text.

    Labels are whitespace separated and anything after ``#`` is a
    comment.  As a convenience, a single unbroken run of lowercase
    letters ("abcabc") is unpacked into one-letter labels.  A lone "-"
    is the empty word.  Raises WordError unless every label occurs
    exactly twice.
    """
    body = text.split("#", 1)[0]
    tokens = body.split()
    if tokens == ["-"]:
        tokens = []
    if len(tokens) == 1 and len(tokens[0]) > 1 and all(c in _ALPHABET for c in tokens[0]):
        tokens = list(tokens[0])
    word = tuple(tokens)
    validate_word(word)
    return word


def validate_word(word: Sequence[str]) -> None:
    """Raise WordError unless every label occurs exactly twice."""
    counts: Dict[str, int] = {}
    for label in word:
        counts[label] = counts.get(label, 0) + 1
    bad = {label: k for label, k in counts.items() if k != 2}
    if bad:
        parts = ", ".join(
            f"label {label!r} occurs {'once' if k == 1 else '%d times' % k}"
            for label, k in sorted(bad.items())
        )
        raise WordError(f"not a double occurrence word: {parts}")


def format_word(word: Sequence[str]) -> str:
    """Space separated rendering; the empty word renders as '-'."""
    return " ".join(word) if word else "-"


def chord_count(word: Sequence[str]) -> int:
    return len(word) // 2


def letters(word: Sequence[str]) -> Tuple[str, ...]:
    """Labels in order of first occurrence."""
    seen: Dict[str, None] = {}
    for label in word:
        if label not in seen:
            seen[label] = None
    return tuple(seen)


def positions(word: Sequence[str]) -> Dict[str, Tuple[int, int]]:
    """Map each label to its pair of positions (p, q) with p < q."""
    first: Dict[str, int] = {}
    out: Dict[str, Tuple[int, int]] = {}
    for i, label in enumerate(word):
        if label in first:
            out[label] = (first[label], i)
        else:
            first[label] = i
    return out


def rank_sequence(seq: Sequence[str]) -> Tuple[int, ...]:
    """Relabel by order of first occurrence: ranks 0, 1, 2, ..."""
    seen: Dict[str, int] = {}
    out = []
    for label in seq:
        if label not in seen:
            seen[label] = len(seen)
        out.append(seen[label])
    return tuple(out)


def rotations(word: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    w = tuple(word)
    for s in range(max(1, len(w))):
        yield w[s:] + w[:s]


@lru_cache(maxsize=None)
def _canonical_cached(word: Word) -> Word:
    if not word:
        return ()
    best = None
    for view in (word, word[::-1]):
        for rotated in rotations(view):
            ranks = rank_sequence(rotated)
            if best is None or ranks < best:
                best = ranks
    assert best is not None
    return tuple(label_for_rank(r) for r in best)


def canonical(word: Sequence[str]) -> Word:
    """Least relabeled representative over all rotations and reversal."""
    w = tuple(word)
    validate_word(w)
    return _canonical_cached(w)


def words_equal(a: Sequence[str], b: Sequence[str]) -> bool:
    """True when the two words denote the same projection."""
    return canonical(a) == canonical(b)


def fresh_label(word: Sequence[str]) -> str:
    """Smallest standard label not already used in the word."""
    used = set(word)
    rank = 0
    while label_for_rank(rank) in used:
        rank += 1
    return label_for_rank(rank)


def all_slots(word: Sequence[str]) -> range:
    """Insertion slots: before position i; the empty word has one slot."""
    return range(max(1, len(word)))


def connected_sum(first: Sequence[str], second: Sequence[str], slot: int = 0) -> Word:
    """Splice ``second`` into ``first`` at the given slot.

    Labels of ``second`` are renamed to avoid those of ``first``.  Slot i
    inserts before position i of ``first``; slots differing by the length
    of ``first`` coincide cyclically.
    """
    a = tuple(first)
    b = tuple(second)
    validate_word(a)
    validate_word(b)
    if not 0 <= slot <= len(a):
        raise ValueError(f"slot {slot} out of range for a word of length {len(a)}")
    used = set(a)
    renames: Dict[str, str] = {}
    rank = 0
    for label in letters(b):
        while label_for_rank(rank) in used:
            rank += 1
        renames[label] = label_for_rank(rank)
        rank += 1
    inserted = tuple(renames[label] for label in b)
    return a[:slot] + inserted + a[slot:]


def _partners(word: Sequence[str]) -> list:
    partner = [0] * len(word)
    for p, q in positions(word).values():
        partner[p] = q
        partner[q] = p
    return partner


def _self_contained_interval(word: Word) -> "tuple[int, int] | None":
    """Shortest proper cyclic interval closed under chord partners.

    Scans lengths in increasing order, so a hit is a prime factor.
    """
    length_total = len(word)
    partner = _partners(word)
    for length in range(2, length_total, 2):
        for start in range(length_total):
            for offset in range(length):
                p = (start + offset) % length_total
                if (partner[p] - start) % length_total >= length:
                    break
            else:
                return start, length
    return None


def is_prime(word: Sequence[str]) -> bool:
    """True when the word is nonempty and not a nontrivial splice."""
    w = tuple(word)
    validate_word(w)
    return bool(w) and _self_contained_interval(w) is None


def prime_decompose(word: Sequence[str]) -> Tuple[Word, ...]:
    """Canonical prime factors, sorted by (size, word); () for the empty word."""
    w = tuple(word)
    validate_word(w)
    return _prime_decompose_cached(w)


@lru_cache(maxsize=None)
def _prime_decompose_cached(w: Word) -> Tuple[Word, ...]:
    if not w:
        return ()
    found = _self_contained_interval(w)
    if found is None:
        return (canonical(w),)
    start, length = found
    total = len(w)
    inside = tuple(w[(start + k) % total] for k in range(length))
    outside = tuple(w[(start + length + k) % total] for k in range(total - length))
    factors = _prime_decompose_cached(rank_word(inside)) + _prime_decompose_cached(rank_word(outside))
    return tuple(sorted(factors, key=lambda f: (len(f), f)))


def rank_word(seq: Sequence[str]) -> Word:
    """The word relabeled with standard labels by first occurrence."""
    return tuple(label_for_rank(r) for r in rank_sequence(seq))
