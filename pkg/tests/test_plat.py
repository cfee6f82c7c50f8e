import random

import pytest

from goeritz.plat import (
    Pairing,
    component_count,
    plat_invariants_of,
    plat_linking,
    standard_pairing,
)
from goeritz.wicket import BridgeDecomposition, plat_invariants, tangle_B, tangle_C
from goeritz.wordproblem import braid_equal
from goeritz.words import BraidWord, braid, compose, family_word, full_twist


def random_word(rng, strands, length):
    letters = [rng.choice([i for i in range(-(strands - 1), strands) if i != 0])
               for _ in range(length)]
    return braid(strands, letters)


def test_pairing_validation():
    with pytest.raises(ValueError):
        Pairing((1, 2))
    with pytest.raises(ValueError):
        Pairing((2, 1, 3))


def test_trivial_link_components():
    for n in (2, 3, 4):
        std = standard_pairing(n)
        assert component_count(std, BraidWord(2 * n), std) == n


def test_square_walk():
    top = Pairing((2, 1, 4, 3))
    bottom = Pairing((4, 3, 2, 1))
    assert component_count(top, BraidWord(4), bottom) == 1


def test_clasp_components():
    std = standard_pairing(2)
    assert component_count(std, braid(4, [2, 2]), std) == 2


def test_known_links():
    std = standard_pairing(2)
    trefoil = plat_invariants_of(std, braid(4, [2, 2, 2]), std)
    assert (trefoil.components, trefoil.linking, trefoil.crossings) == (1, None, 3)
    hopf = plat_invariants_of(std, braid(4, [2, 2]), std)
    assert (hopf.components, hopf.linking) == (2, 1)
    hopf_neg = plat_invariants_of(std, braid(4, [-2, -2]), std)
    assert (hopf_neg.components, hopf_neg.linking) == (2, 1)
    solomon = plat_invariants_of(std, braid(4, [2, 2, 2, 2]), std)
    assert (solomon.components, solomon.linking) == (2, 2)
    unlink = plat_invariants_of(std, BraidWord(4), std)
    assert (unlink.components, unlink.linking) == (2, 0)


def test_linking_none_unless_two_components():
    std = standard_pairing(3)
    assert plat_linking(std, BraidWord(6), std) is None


def test_relator_insertion_invariance():
    rng = random.Random(31)
    for _ in range(100):
        n = rng.randint(2, 4)
        std = standard_pairing(n)
        w = random_word(rng, 2 * n, rng.randint(0, 8))
        base = component_count(std, w, std)
        i = rng.randint(1, 2 * n - 2)
        relator = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
        pos = rng.randint(0, len(w.letters))
        w2 = braid(2 * n, list(w.letters[:pos]) + relator + list(w.letters[pos:]))
        assert component_count(std, w2, std) == base


def test_wicket_members_fix_the_plat():
    rng = random.Random(32)
    std = standard_pairing(3)
    members = [
        braid(6, family_word("X", 5).letters),
        braid(6, family_word("Y", 6).letters),
        braid(6, family_word("Z", 5).letters),
        braid(6, [1]),
        full_twist(6),
    ]
    for _ in range(60):
        w = random_word(rng, 6, rng.randint(0, 8))
        base = component_count(std, w, std)
        g = rng.choice(members)
        assert component_count(std, compose(w, g), std) == base


def test_hopf_linking_stable_under_index():
    for n in range(2, 7):
        dec = BridgeDecomposition(n, BraidWord(2 * n), tangle_C(n).conjugator)
        assert plat_invariants(dec).linking == 1


def test_unknot_family_is_knotted_trivially():
    # the B family closes to a single unknotted component; its plat braid is
    # planar-equivalent to a shift word, which the word problem confirms
    for n in range(2, 5):
        dec = BridgeDecomposition(n, BraidWord(2 * n), tangle_B(n).conjugator)
        assert plat_invariants(dec).components == 1
        assert braid_equal(dec.plat_braid(), tangle_B(n).conjugator)
