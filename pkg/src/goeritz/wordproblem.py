"""Exact word problem in the braid group and the spherical mapping class group.

The decision procedure is handle reduction: repeatedly rewrite the leftmost
handle (a subword e v -e where e is a letter, -e its inverse, and v contains
only letters of strictly larger index) until none remains.  The procedure
always terminates; the result is empty exactly when the braid is trivial,
because a handle-free nonempty word is sigma-positive or sigma-negative in
its lowest index.
"""

from __future__ import annotations

import os

from .freegroup import FreeEndo, FreeWord, artin_action, eliminate_last_generator, is_inner
from .words import BraidWord, SphericalBraid, compose, inverse, permutation_of

DEFAULT_MAX_STEPS = 10_000_000


class ResourceExhausted(RuntimeError):
    """Raised when a reduction exceeds its step cap; never a wrong answer."""


def max_steps_from_env(default: int = DEFAULT_MAX_STEPS) -> int:
    value = os.environ.get("GOERITZ_MAX_STEPS")
    if value is None:
        return default
    return int(value)


def _find_handle(letters: list[int]) -> tuple[int, int] | None:
    """Position pair (q, p) of the leftmost-closing handle, or None.

    last[i] holds the most recent occurrence of index i that could still
    open a handle; seeing a smaller index in between invalidates it.
    """
    last: dict[int, tuple[int, int]] = {}
    for p, letter in enumerate(letters):
        i = abs(letter)
        opened = last.get(i)
        if opened is not None and opened[1] == -letter:
            return opened[0], p
        for j in list(last):
            if j > i:
                del last[j]
        last[i] = (p, letter)
    return None


def handle_reduce(word: BraidWord, max_steps: int | None = None) -> BraidWord:
    """An equivalent handle-free word; empty iff the input is trivial."""
    cap = max_steps_from_env() if max_steps is None else max_steps
    letters = list(word.letters)
    steps = 0
    while True:
        found = _find_handle(letters)
        if found is None:
            return BraidWord(word.strands, tuple(letters))
        steps += 1
        if steps > cap:
            raise ResourceExhausted(
                f"handle reduction exceeded {cap} steps on a word of length {len(word)}"
            )
        q, p = found
        i = abs(letters[q])
        e = 1 if letters[q] > 0 else -1
        replacement: list[int] = []
        for letter in letters[q + 1 : p]:
            if abs(letter) == i + 1:
                d = 1 if letter > 0 else -1
                replacement.extend((-e * (i + 1), d * i, e * (i + 1)))
            else:
                replacement.append(letter)
        # Splice and free-cancel around the replacement region.
        merged = letters[:q] + replacement + letters[p + 1 :]
        stack: list[int] = []
        for letter in merged:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        letters = stack


def is_trivial(word: BraidWord, max_steps: int | None = None) -> bool:
    return len(handle_reduce(word, max_steps)) == 0


def braid_equal(a: BraidWord, b: BraidWord, max_steps: int | None = None) -> bool:
    """Equality in the braid group, decided by handle reduction of a b^-1."""
    if a.strands != b.strands:
        raise ValueError(f"strand count mismatch: {a.strands} != {b.strands}")
    return is_trivial(compose(a, inverse(b)), max_steps)


def braid_equal_via_artin(a: BraidWord, b: BraidWord) -> bool:
    """Independent oracle: the Artin representation is faithful."""
    if a.strands != b.strands:
        raise ValueError(f"strand count mismatch: {a.strands} != {b.strands}")
    return artin_action(a) == artin_action(b)


def sphere_endo(word: BraidWord) -> FreeEndo:
    """The action induced on the fundamental group of the punctured sphere.

    The sphere group is the free group on the first strands-1 meridians; the
    last meridian is eliminated against the relation x_1 ... x_m = 1.
    """
    endo = artin_action(word)
    rank = word.strands
    images = tuple(eliminate_last_generator(endo.images[i]) for i in range(rank - 1))
    return FreeEndo(rank - 1, images)


def mcg_equal(a: SphericalBraid, b: SphericalBraid) -> bool:
    """Equality of the induced mapping classes of the punctured sphere.

    Permutations must agree; the remaining pure automorphism of the sphere
    group is trivial in the mapping class group exactly when it is inner.
    """
    if a.strands != b.strands:
        raise ValueError(f"strand count mismatch: {a.strands} != {b.strands}")
    if a.strands < 3:
        raise ValueError("mapping class comparison needs at least 3 strands")
    if permutation_of(a.word) != permutation_of(b.word):
        return False
    difference = compose(a.word, inverse(b.word))
    return is_inner(sphere_endo(difference)) is not None


def mcg_trivial(a: SphericalBraid) -> bool:
    word = a.word
    return permutation_of(word).is_identity() and is_inner(sphere_endo(word)) is not None
