import itertools

import pytest
from hypothesis import given, settings

from conftest import S, small_matroids
from rotunda import catalog as cat
from rotunda.bitset import popcount
from rotunda.classification import (
    chords,
    classify,
    is_c_chordal,
    is_saturated,
    is_supersolvable,
    modular_chains,
    strong_chord_witness,
)
from rotunda.errors import NotCircuitError
from rotunda.matroid import LinearMatroid, UniformMatroid
from rotunda.modularity import is_modular_flat

FIX = {M.name: M for M in cat.named_fixtures()}


@pytest.mark.parametrize("name,profile", [
    ("U36", (False, True, False)),
    ("F7", (True, True, True)),
    ("M*(K33)", (False, True, True)),
    ("PABX", (True, False, True)),
])
def test_fixture_profiles(name, profile):
    assert classify(FIX[name]).as_tuple() == profile


def test_supersolvable_examples():
    assert not is_supersolvable(FIX["U36"])[0]
    ok, chain = is_supersolvable(FIX["F7"])
    assert ok and [F.rank for F in chain] == [0, 1, 2, 3]
    assert all(is_modular_flat(FIX["F7"], F) for F in chain)
    assert is_supersolvable(FIX["PABX"])[0]
    assert not is_supersolvable(FIX["M*(K33)"])[0]
    assert is_supersolvable(UniformMatroid(0, 3))[0]


def test_saturation_examples(pabx):
    ok, witness = is_saturated(pabx)
    assert not ok and witness.bits == S(pabx, "adx")
    assert is_saturated(FIX["U36"])[0]
    assert not is_saturated(FIX["W4"])[0]
    for G in cat.graph_catalog(5):
        assert is_saturated(cat.matroid_of(G))[0]


def test_chords(k4_m, u36):
    for C in u36.circuits():
        assert chords(u36, C) == []
        assert strong_chord_witness(u36, C) is None
    square = S(k4_m, ["12", "23", "34", "14"])
    assert {k4_m.labels[ch.chord] for ch in chords(k4_m, square)} == {"13", "24"}
    x, y, z = strong_chord_witness(k4_m, square)
    pair = {k4_m.labels[x], k4_m.labels[y]}
    assert k4_m.labels[z] in {"13", "24"}
    assert len(set("".join(pair))) == 3  # two adjacent cycle edges
    with pytest.raises(NotCircuitError):
        chords(k4_m, S(k4_m, ["12", "34"]))


def test_c_chordal_examples():
    assert not is_c_chordal(FIX["U36"])[0]
    assert is_c_chordal(FIX["M*(K33)"])[0]
    assert is_c_chordal(FIX["PABX"])[0]
    F7 = FIX["F7"]
    for C in F7.circuits():
        if popcount(C) == 4:
            assert strong_chord_witness(F7, C) is not None


def test_whirl_has_chordless_four_circuits():
    """The rank-3 whirl: three 4-circuits through d, e, f have no chord."""
    W = FIX["W4"]
    free = {C for C in W.circuits() if popcount(C) >= 4 and not chords(W, C)}
    assert free == {S(W, q) for q in ("adef", "bdef", "cdef")}
    assert any(chords(W, C) for C in W.circuits() if popcount(C) == 4)
    assert classify(W).as_tuple() == (False, False, False)


def test_whirl_over_gf3_matches_fixture():
    cols = {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1),
            "d": (1, 1, 0), "e": (0, 1, 1), "f": (1, 0, 1)}
    labels = "abcdef"
    matrix = [[cols[x][k] for x in labels] for k in range(3)]
    W3 = LinearMatroid(matrix, field=3, labels=labels)
    W = FIX["W4"]
    assert W3.circuits() == W.circuits()
    assert classify(W3).as_tuple() == classify(W).as_tuple()
    # over GF(2) d, e, f become collinear and the matroid is M(K4)
    W2 = LinearMatroid(matrix, field=2, labels=labels)
    assert W2.r(S(W2, "def")) == 2 and classify(W2).as_tuple() == (True, True, True)


def test_modular_chains_are_chains(pabx):
    chains = list(modular_chains(pabx))
    assert chains
    for ch in chains:
        assert [F.rank for F in ch] == list(range(pabx.full_rank + 1))
        assert all(a.bits & ~b.bits == 0 for a, b in itertools.pairwise(ch.flats))


@settings(max_examples=50, deadline=None)
@given(small_matroids(max_elements=6))
def test_supersolvable_saturated_implies_c_chordal(M):
    if is_supersolvable(M)[0] and is_saturated(M)[0]:
        assert is_c_chordal(M)[0]
