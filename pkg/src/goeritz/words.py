"""Braid words over the signed-integer letter encoding.

A word is a finite sequence of nonzero integers: the letter ``k > 0`` is the
generator with index ``k`` (strand ``k`` crossing over strand ``k+1``), and
``k < 0`` is its inverse.  The word ``l1 l2 ... lm`` denotes the product of
its letters in that order, and in every left action implemented here the
rightmost factor acts first.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., size}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (self * other)(x) = self(other(x))."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, img in enumerate(self.images, start=1):
            images[img - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    @staticmethod
    def identity(size: int) -> "Permutation":
        return Permutation(tuple(range(1, size + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points included."""
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            point = self(start)
            while point != start:
                seen[point - 1] = True
                cycle.append(point)
                point = self(point)
            out.append(tuple(cycle))
        return out


def _free_cancel(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the generators of the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError(f"strand count must be at least 2, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise ValueError(
                    f"letter {letter} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __pow__(self, exponent: int) -> "BraidWord":
        base = self if exponent >= 0 else inverse(self)
        letters: tuple[int, ...] = ()
        for _ in range(abs(exponent)):
            letters = _free_cancel(letters + base.letters)
        return BraidWord(self.strands, letters)


def braid(strands: int, letters: Sequence[int] = ()) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Product ab, with free cancellation applied to the concatenation."""
    if a.strands != b.strands:
        raise ValueError(f"strand count mismatch: {a.strands} != {b.strands}")
    return BraidWord(a.strands, _free_cancel(a.letters + b.letters))


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-letter for letter in reversed(a.letters)))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in a.letters)


def permutation_of(a: BraidWord) -> Permutation:
    """The induced permutation of endpoint labels.

    The generator with index i maps to the transposition (i, i+1), and
    permutation_of(compose(a, b)) = permutation_of(a) * permutation_of(b)
    under the rightmost-acts-first composition convention.
    """
    images = list(range(1, a.strands + 1))
    for letter in a.letters:
        i = abs(letter) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def delta_j(strands: int, j: int) -> BraidWord:
    """The ascending run with top index j - 1, defined for 2 <= j <= strands."""
    if not 2 <= j <= strands:
        raise ValueError(f"j must be in 2..{strands}, got {j}")
    return BraidWord(strands, tuple(range(1, j)))


def half_twist(strands: int) -> BraidWord:
    """Concatenation of the descending sequence of ascending runs.

    Its exponent sum is strands*(strands-1)/2 and its permutation is the
    order reversal i -> strands + 1 - i.
    """
    letters: list[int] = []
    for j in range(strands, 1, -1):
        letters.extend(range(1, j))
    return BraidWord(strands, tuple(letters))


def full_twist(strands: int) -> BraidWord:
    h = half_twist(strands)
    return compose(h, h)


def sphere_relator(strands: int) -> BraidWord:
    """The word 1 2 ... (m-1) (m-1) ... 2 1, trivial in the spherical group."""
    up = list(range(1, strands))
    return BraidWord(strands, tuple(up + up[::-1]))


@dataclasses.dataclass(frozen=True)
class SphericalBraid:
    """A planar representative of a spherical braid.

    Structural equality compares the planar words; equality of the
    underlying mapping classes is decided by wordproblem.mcg_equal.
    """

    word: BraidWord

    @property
    def strands(self) -> int:
        return self.word.strands


def s_map(a: BraidWord) -> SphericalBraid:
    """Read the word in the spherical group on the same strand count."""
    return SphericalBraid(a)


def s_plus(a: BraidWord) -> SphericalBraid:
    """Read the word in the spherical group with one extra straight strand.

    The dilatation is unchanged by this stabilization, which is what makes
    the disk computations in lamination.py meaningful for spherical braids.
    """
    return SphericalBraid(BraidWord(a.strands + 1, a.letters))


def family_word(which: str, strands: int) -> BraidWord:
    """The three generator words used throughout the entropy families.

    X needs strands >= 5, Y an even strand count >= 6, Z an odd strand
    count >= 5.  The letters do not depend on the strand count beyond the
    range they must fit in.
    """
    if which == "X":
        if strands < 5:
            raise ValueError("X needs at least 5 strands")
        return BraidWord(strands, (3, 3, 2, 3, 3, 2))
    if which == "Y":
        if strands < 6 or strands % 2 != 0:
            raise ValueError("Y needs an even strand count of at least 6")
        # sigma_1^2 sigma_2 ... sigma_{2n-1} sigma_1 ... sigma_{2n-2)
        letters = [1] + list(range(1, strands)) + list(range(1, strands - 1))
        return BraidWord(strands, tuple(letters))
    if which == "Z":
        if strands < 5 or strands % 2 != 1:
            raise ValueError("Z needs an odd strand count of at least 5")
        # sigma_1^2 sigma_2 ... sigma_{2n-2} sigma_1 ... sigma_{2n-3} sigma_{2n-3} sigma_{2n-2}
        letters = (
            [1]
            + list(range(1, strands))
            + list(range(1, strands - 1))
            + [strands - 2, strands - 1]
        )
        return BraidWord(strands, tuple(letters))
    raise ValueError(f"unknown family word {which!r}")


def entropy_family_word(which: str, n: int, squared: bool = False) -> BraidWord:
    """The braid whose growth rate is swept at index n >= 1.

    unknot family: X Y^(2n+1) on 4n+6 strands (X Y X Y^(2n+1) on 4n+8 when
    squared); hopf family: X Z^(2n+1) on 4n+7 strands (X Z X Z^(2n+1) on
    4n+9 when squared).
    """
    if n < 1:
        raise ValueError(f"family index must be at least 1, got {n}")
    if which == "unknot":
        strands = 4 * n + (8 if squared else 6)
        second = family_word("Y", strands)
    elif which == "hopf":
        strands = 4 * n + (9 if squared else 7)
        second = family_word("Z", strands)
    else:
        raise ValueError(f"unknown entropy family {which!r}")
    x = family_word("X", strands)
    word = compose(x, second ** (2 * n + 1))
    if squared:
        word = compose(compose(x, second), word)
    return word


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed letter indices."""
    parts = text.split()
    try:
        letters = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad braid word {text!r}") from exc
    return BraidWord(strands, letters)


def format_word(a: BraidWord) -> str:
    return " ".join(str(letter) for letter in a.letters)
