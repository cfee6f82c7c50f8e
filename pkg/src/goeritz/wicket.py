"""Wicket-group membership and Goeritz-element certification.

A trivial n-tangle is presented by a conjugator braid acting on the
standard tangle; the wicket group of the standard tangle consists of the
spherical braids whose Artin automorphism sends each wicket meridian
x_{2i-1} x_{2i} to a word that dies in the quotient identifying x_{2j-1}
with g_j and x_{2j} with g_j^-1.  The quotient kills the sphere relator,
so the predicate is well defined on spherical braids, and conjugation
moves it to arbitrary trivial tangles.  A bridge decomposition with top
conjugator d and bottom conjugator b has Goeritz group carried by the
intersection of the wicket groups of the tangles with conjugators d^-1
and b; the full twist is always certified.
"""

from __future__ import annotations

import dataclasses
from typing import Optional

from .freegroup import FreeEndo, FreeWord, artin_action
from .plat import Pairing, PlatInvariants, conjugated_pairing, plat_invariants_of, standard_pairing
from .words import BraidWord, compose, inverse, permutation_of


@dataclasses.dataclass(frozen=True)
class TrivialTangle:
    """A trivial n-tangle presented as a conjugator acting on the standard one."""

    arcs: int
    conjugator: BraidWord

    def __post_init__(self) -> None:
        if self.conjugator.strands != 2 * self.arcs:
            raise ValueError(
                f"conjugator must have {2 * self.arcs} strands, "
                f"got {self.conjugator.strands}"
            )

    def pairing(self) -> Pairing:
        """Endpoint pairing: the standard pairing pushed through the conjugator."""
        return conjugated_pairing(
            standard_pairing(self.arcs), permutation_of(self.conjugator)
        )


def standard_tangle(n: int) -> TrivialTangle:
    return TrivialTangle(n, BraidWord(2 * n))


@dataclasses.dataclass(frozen=True)
class BridgeDecomposition:
    """A plat pair: top conjugator d, bottom conjugator b, both in 2n strands."""

    bridges: int
    top: BraidWord
    bottom: BraidWord

    def __post_init__(self) -> None:
        if self.top.strands != 2 * self.bridges or self.bottom.strands != 2 * self.bridges:
            raise ValueError("conjugators must have 2n strands")

    def plat_braid(self) -> BraidWord:
        """The braid between the standard caps and cups."""
        return compose(self.top, self.bottom)


@dataclasses.dataclass(frozen=True)
class MembershipReport:
    verdict: bool
    witness_index: Optional[int] = None
    witness: Optional[FreeWord] = None
    checked: int = 0

    def __post_init__(self) -> None:
        if not self.verdict and (self.witness is None or self.witness.is_identity()):
            raise ValueError("negative verdicts carry a non-trivial witness")

    def __bool__(self) -> bool:
        return self.verdict


def _wicket_quotient(word: FreeWord) -> FreeWord:
    """x_{2j-1} -> g_j, x_{2j} -> g_j^-1; the target has half the rank."""
    half = word.rank // 2
    letters = []
    for letter in word.letters:
        k = abs(letter)
        j = (k + 1) // 2
        out = j if k % 2 == 1 else -j
        letters.append(out if letter > 0 else -out)
    return FreeWord(half, tuple(letters))


def member_sw_standard(word: BraidWord, arcs: int) -> MembershipReport:
    """Membership in the wicket group of the standard tangle.

    All arcs are checked even though one is redundant modulo the sphere
    relation; the redundancy doubles as a consistency check.
    """
    if word.strands != 2 * arcs:
        raise ValueError(f"word must have {2 * arcs} strands, got {word.strands}")
    endo = artin_action(word)
    rank = word.strands
    for i in range(1, arcs + 1):
        meridian = FreeWord(rank, (2 * i - 1, 2 * i))
        image = endo(meridian)
        reduced = _wicket_quotient(image)
        if not reduced.is_identity():
            return MembershipReport(
                verdict=False, witness_index=i, witness=reduced, checked=i
            )
    return MembershipReport(verdict=True, checked=arcs)


def member_sw(word: BraidWord, tangle: TrivialTangle) -> MembershipReport:
    """Membership in the wicket group of an arbitrary trivial tangle."""
    if word.strands != 2 * tangle.arcs:
        raise ValueError("strand count mismatch")
    conjugated = compose(inverse(tangle.conjugator), compose(word, tangle.conjugator))
    return member_sw_standard(conjugated, tangle.arcs)


def member_sw_pair(
    word: BraidWord, tangle: TrivialTangle, other: TrivialTangle
) -> MembershipReport:
    """Membership in the intersection of two wicket groups."""
    if tangle.arcs != other.arcs:
        raise ValueError("tangle sizes differ")
    first = member_sw(word, tangle)
    if not first:
        return first
    second = member_sw(word, other)
    if not second:
        return second
    return MembershipReport(verdict=True, checked=first.checked + second.checked)


def is_goeritz_element(dec: BridgeDecomposition, word: BraidWord) -> MembershipReport:
    """Certify the mapping class of the word as a Goeritz element.

    The certified object is the class modulo the full twist, which itself
    is always certified and acts trivially.
    """
    if word.strands != 2 * dec.bridges:
        raise ValueError("strand count mismatch")
    upper = TrivialTangle(dec.bridges, inverse(dec.top))
    lower = TrivialTangle(dec.bridges, dec.bottom)
    return member_sw_pair(word, upper, lower)


def plat_invariants(dec: BridgeDecomposition) -> PlatInvariants:
    """Component count and |linking| of the plat closure of the decomposition."""
    std = standard_pairing(dec.bridges)
    return plat_invariants_of(std, dec.plat_braid(), std)


# Validated conjugator presentations of the stabilized tangle families.
# The unknot-family tangle pairs into the shifted pattern; the Hopf-family
# tangle carries one clasp.  Both words were pinned by the validation
# suite in tests/test_wicket.py: plat invariants for n = 2..6 and the
# membership lemmas at n = 3, 4, 5.
def tangle_B(n: int) -> TrivialTangle:
    """The stabilized unknot tangle on n arcs: plat against the mirror
    standard tangle is the trivial knot."""
    if n < 2:
        raise ValueError("the unknot family starts at 2 arcs")
    word = BraidWord(2 * n, tuple(range(1, 2 * n)))
    return TrivialTangle(n, word)


def tangle_C(n: int) -> TrivialTangle:
    """The stabilized Hopf tangle on n arcs: plat against the mirror
    standard tangle is the Hopf link."""
    if n < 2:
        raise ValueError("the Hopf family starts at 2 arcs")
    word = BraidWord(
        2 * n, tuple(range(1, 2 * n - 3)) + (-(2 * n - 2), -(2 * n - 2))
    )
    return TrivialTangle(n, word)
