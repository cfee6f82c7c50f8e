"""Reduced free-group words, endomorphisms, and the Artin action.

Free words use the same signed-integer letter encoding as braid words:
``k > 0`` is the generator with index k, ``k < 0`` its inverse.  Words are
always stored freely reduced, so equality is plain sequence comparison.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Optional

from .words import BraidWord


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in the free group of the given rank."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        reduced = reduce_letters(self.letters)
        object.__setattr__(self, "letters", reduced)
        for letter in reduced:
            if letter == 0 or abs(letter) > self.rank:
                raise ValueError(f"letter {letter} out of range for rank {self.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-l for l in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def cyclic_reduce(self) -> tuple["FreeWord", "FreeWord"]:
        """Split self = u * core * u^-1 with core cyclically reduced."""
        letters = list(self.letters)
        left = 0
        right = len(letters)
        while right - left >= 2 and letters[left] == -letters[right - 1]:
            left += 1
            right -= 1
        conjugator = FreeWord(self.rank, tuple(letters[:left]))
        core = FreeWord(self.rank, tuple(letters[left:right]))
        return conjugator, core


def generator(rank: int, index: int) -> FreeWord:
    return FreeWord(rank, (index,))


def conjugate(u: FreeWord, w: FreeWord) -> FreeWord:
    """u w u^-1."""
    return u * w * u.inverse()


@dataclasses.dataclass(frozen=True)
class FreeEndo:
    """An endomorphism of the free group, given by the generator images."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError(f"need {self.rank} images, got {len(self.images)}")

    def __call__(self, word: FreeWord) -> FreeWord:
        letters: list[int] = []
        for letter in word.letters:
            image = self.images[abs(letter) - 1]
            if letter > 0:
                letters.extend(image.letters)
            else:
                letters.extend(-l for l in reversed(image.letters))
        return FreeWord(self.rank, tuple(letters))

    def compose(self, other: "FreeEndo") -> "FreeEndo":
        """self after other: (self.compose(other))(w) = self(other(w))."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeEndo(self.rank, tuple(self(img) for img in other.images))

    @staticmethod
    def identity(rank: int) -> "FreeEndo":
        return FreeEndo(rank, tuple(FreeWord(rank, (i,)) for i in range(1, rank + 1)))


def artin_action(word: BraidWord) -> FreeEndo:
    """The Artin automorphism of the free group of rank = strand count.

    The generator with index i maps x_i -> x_i x_{i+1} x_i^-1 and
    x_{i+1} -> x_i; letters compose rightmost-first, so the whole word's
    automorphism is built by post-composing letter automorphisms left to
    right on the stored images.  The product x_1 x_2 ... x_n is fixed.
    """
    rank = word.strands
    images = [FreeWord(rank, (i,)) for i in range(1, rank + 1)]
    for letter in word.letters:
        i = abs(letter) - 1
        a, b = images[i], images[i + 1]
        if letter > 0:
            images[i] = a * b * a.inverse()
            images[i + 1] = a
        else:
            images[i] = b
            images[i + 1] = b.inverse() * a * b
    return FreeEndo(rank, tuple(images))


def is_inner(endo: FreeEndo) -> Optional[FreeWord]:
    """Return u with endo(x_i) = u x_i u^-1 for all i, if one exists.

    The image of x_1 must cyclically reduce to the letter x_1 itself; that
    pins the conjugator up to a power of x_1, which the image of x_2 then
    determines.  The candidate is verified on every generator, so a wrong
    guess can only produce a (correct) negative answer.
    """
    rank = endo.rank
    if rank == 0:
        return FreeWord(0)
    first = endo.images[0]
    prefix, core = first.cyclic_reduce()
    if core.letters != (1,):
        return None
    if rank == 1:
        return FreeWord(1)
    # endo(x_1) = v x_1 v^-1, so any conjugator is v * x_1^k for some k,
    # which the leading x_1-run of v^-1 endo(x_2) v determines.
    v = prefix
    target = v.inverse() * endo.images[1] * v
    k = 0
    for letter in target.letters:
        if abs(letter) != 1:
            break
        k += 1 if letter > 0 else -1
    u = v * FreeWord(rank, (1,) * k if k >= 0 else (-1,) * (-k))
    u_inv = u.inverse()
    for i in range(1, rank + 1):
        if endo.images[i - 1] != u * FreeWord(rank, (i,)) * u_inv:
            return None
    return u


def eliminate_last_generator(word: FreeWord) -> FreeWord:
    """Push a word to the quotient where x_rank = (x_1 ... x_{rank-1})^-1.

    This realizes the rank-(rank-1) free group as the fundamental group of
    the sphere with rank punctures.
    """
    rank = word.rank
    if rank < 2:
        raise ValueError("need rank at least 2 to eliminate a generator")
    last_inverse = tuple(range(-(rank - 1), 0))  # (x_1 ... x_{rank-1})^-1
    last = tuple(range(1, rank))
    letters: list[int] = []
    for letter in word.letters:
        if letter == rank:
            letters.extend(last_inverse)
        elif letter == -rank:
            letters.extend(last)
        else:
            letters.append(letter)
    return FreeWord(rank - 1, tuple(letters))
