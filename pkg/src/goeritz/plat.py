"""Cheap exact invariants of plat closures: components and |linking|.

A plat diagram is a top row of caps, the braid, and a bottom row of cups.
Pairings are fixed-point-free involutions on the 2n endpoints; the
standard one joins 2j-1 with 2j.  Components come from the permutation
walk; for a 2-component link, |lk| is half the signed count of crossings
between strands of distinct components, with orientations induced by an
arbitrary traversal of each component.
"""

from __future__ import annotations

import dataclasses
from typing import Optional

from .words import BraidWord, Permutation, permutation_of


@dataclasses.dataclass(frozen=True)
class Pairing:
    """A fixed-point-free involution on {1..2n}, stored as the image array."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        size = len(self.images)
        if size % 2 != 0:
            raise ValueError("pairings need an even number of points")
        for i, img in enumerate(self.images, start=1):
            if img == i or not 1 <= img <= size or self.images[img - 1] != i:
                raise ValueError(f"not a fixed-point-free involution: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]


def standard_pairing(n: int) -> Pairing:
    """(1 2)(3 4)...(2n-1 2n)."""
    images = []
    for j in range(1, n + 1):
        images.extend([2 * j, 2 * j - 1])
    return Pairing(tuple(images))


def conjugated_pairing(pairing: Pairing, perm: Permutation) -> Pairing:
    """The pairing pushed through a permutation."""
    if pairing.size != perm.size:
        raise ValueError("size mismatch")
    inv = perm.inverse()
    images = [perm(pairing(inv(k))) for k in range(1, pairing.size + 1)]
    return Pairing(tuple(images))


def _walk_labels(top: Pairing, braid: BraidWord, bottom: Pairing) -> list[int]:
    """Component id of each top endpoint."""
    pushed = conjugated_pairing(bottom, permutation_of(braid))
    label = [0] * top.size
    comp = 0
    for start in range(1, top.size + 1):
        if label[start - 1]:
            continue
        comp += 1
        point = start
        while not label[point - 1]:
            label[point - 1] = comp
            point = pushed(point)
            label[point - 1] = comp
            point = top(point)
    return label


def component_count(top: Pairing, braid: BraidWord, bottom: Pairing) -> int:
    """Number of link components of the plat closure."""
    if top.size != braid.strands or bottom.size != braid.strands:
        raise ValueError("pairing sizes must match the strand count")
    return max(_walk_labels(top, braid, bottom))


@dataclasses.dataclass(frozen=True)
class PlatInvariants:
    components: int
    linking: Optional[int]  # |lk|, present exactly when components == 2
    crossings: int


def plat_linking(top: Pairing, braid: BraidWord, bottom: Pairing) -> Optional[int]:
    """|lk| for a 2-component plat, else None.

    Strand passages through a crossing are keyed by the position above the
    crossing, so each crossing collects exactly two (component, direction)
    records regardless of traversal directions.
    """
    labels = _walk_labels(top, braid, bottom)
    if max(labels) != 2:
        return None
    letters = braid.letters
    depth = len(letters)
    visits: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def descend(p: int, comp: int) -> int:
        x = p
        for t, letter in enumerate(letters):
            k = abs(letter)
            if x == k:
                visits.setdefault((t, k), []).append((comp, +1))
                x = k + 1
            elif x == k + 1:
                visits.setdefault((t, k + 1), []).append((comp, +1))
                x = k
        return x

    def ascend(p: int, comp: int) -> int:
        x = p
        for t in range(depth - 1, -1, -1):
            k = abs(letters[t])
            if x == k:  # above the crossing this strand sits at k+1
                visits.setdefault((t, k + 1), []).append((comp, -1))
                x = k + 1
            elif x == k + 1:
                visits.setdefault((t, k), []).append((comp, -1))
                x = k
        return x

    started: set[int] = set()
    for start in range(1, top.size + 1):
        if start in started:
            continue
        comp = labels[start - 1]
        point = start
        while point not in started:
            started.add(point)
            bottom_pos = descend(point, comp)
            up_top = ascend(bottom(bottom_pos), comp)
            started.add(up_top)
            point = top(up_top)

    total = 0
    for t, letter in enumerate(letters):
        k = abs(letter)
        left = visits.get((t, k), [])
        right = visits.get((t, k + 1), [])
        assert len(left) == 1 and len(right) == 1, "each crossing is passed twice"
        (c1, d1), (c2, d2) = left[0], right[0]
        if c1 != c2:
            total += (1 if letter > 0 else -1) * d1 * d2
    return abs(total) // 2


def plat_invariants_of(top: Pairing, braid: BraidWord, bottom: Pairing) -> PlatInvariants:
    components = component_count(top, braid, bottom)
    linking = plat_linking(top, braid, bottom) if components == 2 else None
    return PlatInvariants(components=components, linking=linking, crossings=len(braid))
