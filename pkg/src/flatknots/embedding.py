"""Sphere realizations of double occurrence words.

A word with n chords is traced as a closed curve through 2n passage
points; arc i runs from passage i to passage i + 1 (mod 2n) and carries
two dart ends, 2i at its tail and 2i + 1 at its head.  A realization
assigns each chord one of the two admissible counterclockwise orders of
its four incident dart ends (the strand runs straight through, so the
two ends of one passage sit opposite each other).  Faces are the orbits
of the map d -> next(other_end(d)); the word embeds in the sphere
exactly when some assignment produces n + 2 faces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .words import Word, canonical, letters, positions, validate_word


class NotRealizableError(ValueError):
    """The word admits no embedding in the sphere."""


@dataclass(frozen=True)
class Face:
    """One face of a realization.

    ``darts`` lists the dart ends met while walking the boundary, one
    per arc side, so ``length`` counts the sides.  ``corners`` gives the
    chord label at each step and ``parities`` the dart parity (0 when
    the boundary walk runs along the arc, 1 when against it).
    """

    darts: Tuple[int, ...]
    corners: Tuple[str, ...]
    parities: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def is_monogon(self) -> bool:
        return self.length == 1

    @property
    def is_coherent_bigon(self) -> bool:
        # Parallel strands traverse a bigon in opposite boundary walk
        # directions, hence mixed parities.  Equal corners happen only
        # for the single-chord word, which has no true bigon strands.
        return (
            self.length == 2
            and self.parities[0] != self.parities[1]
            and self.corners[0] != self.corners[1]
        )

    @property
    def is_coherent_trigon(self) -> bool:
        # Cyclically oriented sides traverse all three arcs the same
        # way, hence uniform parities.
        return self.length == 3 and len(set(self.parities)) == 1


@dataclass(frozen=True)
class FaceInventory:
    faces: Tuple[Face, ...]

    def lengths(self) -> Tuple[int, ...]:
        return tuple(sorted(face.length for face in self.faces))

    @property
    def monogons(self) -> int:
        return sum(1 for face in self.faces if face.is_monogon)

    @property
    def bigons(self) -> int:
        return sum(1 for face in self.faces if face.length == 2)

    @property
    def coherent_bigons(self) -> int:
        return sum(1 for face in self.faces if face.is_coherent_bigon)

    @property
    def trigons(self) -> int:
        return sum(1 for face in self.faces if face.length == 3)

    @property
    def coherent_trigons(self) -> int:
        return sum(1 for face in self.faces if face.is_coherent_trigon)


@dataclass(frozen=True)
class Embedding:
    """A realization: one rotation bit per chord, in first occurrence order."""

    word: Word
    bits: Tuple[int, ...]
    inventory: FaceInventory


def vertex_rotations(word: Sequence[str], bits: Sequence[int]) -> Dict[int, Tuple[int, int, int, int]]:
    """Counterclockwise dart order at each chord, keyed by chord index."""
    w = tuple(word)
    total = len(w)
    out: Dict[int, Tuple[int, int, int, int]] = {}
    pos = positions(w)
    for index, label in enumerate(letters(w)):
        p, q = pos[label]
        in_p = 2 * ((p - 1) % total) + 1
        out_p = 2 * p
        in_q = 2 * ((q - 1) % total) + 1
        out_q = 2 * q
        if bits[index] == 0:
            out[index] = (in_p, in_q, out_p, out_q)
        else:
            out[index] = (in_p, out_q, out_p, in_q)
    return out


def _next_dart(word: Word, bits: Sequence[int]) -> list:
    """The rotation permutation on dart ends (next counterclockwise)."""
    sigma = [0] * (2 * len(word))
    for cycle in vertex_rotations(word, bits).values():
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            sigma[a] = b
    return sigma


def _face_orbits(sigma: Sequence[int]) -> list:
    """Orbits of d -> sigma[d ^ 1]; dart d ^ 1 is the other arc end."""
    seen = [False] * len(sigma)
    orbits = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = sigma[d ^ 1]
        orbits.append(orbit)
    return orbits


def _dart_position(d: int, total: int) -> int:
    if d % 2 == 0:
        return d // 2
    return (d // 2 + 1) % total


def _build_faces(word: Word, orbits: Sequence[Sequence[int]]) -> FaceInventory:
    total = len(word)
    faces = []
    for orbit in orbits:
        corners = tuple(word[_dart_position(d, total)] for d in orbit)
        parities = tuple(d % 2 for d in orbit)
        faces.append(Face(darts=tuple(orbit), corners=corners, parities=parities))
    return FaceInventory(faces=tuple(faces))


_EMPTY_INVENTORY = FaceInventory(
    faces=(Face((), (), ()), Face((), (), ()))
)


@lru_cache(maxsize=65536)
def _realize_cached(w: Word) -> "Embedding | None":
    n = len(w) // 2
    if n == 0:
        # The simple closed curve splits the sphere into two faces with
        # no crossings on their boundary.
        return Embedding(word=(), bits=(), inventory=_EMPTY_INVENTORY)
    for bits in itertools.product((0, 1), repeat=n):
        sigma = _next_dart(w, bits)
        orbits = _face_orbits(sigma)
        if len(orbits) == n + 2:
            return Embedding(word=w, bits=bits, inventory=_build_faces(w, orbits))
    return None


def realize(word: Sequence[str]) -> Embedding:
    """A sphere embedding of the word; raises NotRealizableError if none."""
    w = tuple(word)
    validate_word(w)
    found = _realize_cached(w)
    if found is None:
        raise NotRealizableError(f"word is not realizable in the sphere: {' '.join(w)}")
    return found


@lru_cache(maxsize=None)
def _realizable_by_shape(shape: Word) -> bool:
    return _realize_cached(shape) is not None


def is_realizable(word: Sequence[str]) -> bool:
    w = tuple(word)
    validate_word(w)
    return _realizable_by_shape(canonical(w))


def faces(word: Sequence[str]) -> FaceInventory:
    """Face inventory of the first realization found (deterministic)."""
    return realize(word).inventory


def face_count_for_bits(word: Sequence[str], bits: Sequence[int]) -> int:
    """Number of faces produced by an explicit rotation assignment."""
    w = tuple(word)
    validate_word(w)
    if not w:
        return 2
    return len(_face_orbits(_next_dart(w, tuple(bits))))
