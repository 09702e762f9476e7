"""Supersolvability, saturation, chords and C-chordality."""
from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from .bitset import ids, lowest, popcount, submasks
from .errors import NotCircuitError
from .matroid import Flat, Matroid, check_bound
from .modularity import _modular_bits, modular_hyperplanes_of
from .roundness import round_flats


@dataclass(frozen=True)
class ModularChain:
    """Modular flats F_0 ⊆ F_1 ⊆ ... ⊆ F_r with r(F_i) = i."""

    flats: tuple[Flat, ...]

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def __getitem__(self, i: int) -> Flat:
        return self.flats[i]


def _top(M: Matroid) -> Flat:
    return Flat(M.full_rank, M.ground)


def _chain_table(M: Matroid) -> dict[int, tuple[Flat, ...] | None]:
    table = M._memo.get("ss_chain")
    if table is None:
        table = M._memo["ss_chain"] = {}
    return table


def _chain_below(M: Matroid, F: Flat) -> tuple[Flat, ...] | None:
    """A modular chain of M|F ending at F, or None.  Memoized on F."""
    table = _chain_table(M)
    if F.bits in table:
        return table[F.bits]
    if F.rank == 0:
        result: tuple[Flat, ...] | None = (F,)
    else:
        result = None
        # every modular hyperplane is tried: one failing branch proves nothing
        for H in modular_hyperplanes_of(M, F):
            sub = _chain_below(M, H)
            if sub is not None:
                result = sub + (F,)
                break
    table[F.bits] = result
    return result


def is_supersolvable(M: Matroid) -> tuple[bool, ModularChain | None]:
    check_bound(M, "supersolvability")
    M.flats()
    chain = _chain_below(M, _top(M))
    return (chain is not None, ModularChain(chain) if chain is not None else None)


def modular_chains(M: Matroid) -> Iterator[ModularChain]:
    """Every maximal chain of modular flats, built top-down through modular hyperplanes."""
    check_bound(M, "modular chains")

    def rec(F: Flat) -> Iterator[tuple[Flat, ...]]:
        if F.rank == 0:
            yield (F,)
            return
        for H in modular_hyperplanes_of(M, F):
            if _chain_below(M, H) is None:
                continue
            for sub in rec(H):
                yield sub + (F,)

    if _chain_below(M, _top(M)) is not None:
        for c in rec(_top(M)):
            yield ModularChain(c)


def is_saturated(M: Matroid) -> tuple[bool, Flat | None]:
    """Every round flat modular; on failure the first round non-modular flat."""
    check_bound(M, "saturation")
    for F in round_flats(M):
        if not _modular_bits(M, F.bits):
            return False, F
    return True, None


@dataclass(frozen=True)
class Chord:
    circuit: int
    chord: int
    partA: int
    partB: int


def _require_circuit(M: Matroid, C) -> int:
    c = M.subset(C)
    if not M.is_circuit(c):
        raise NotCircuitError(f"{M.fmt(c)} is not a circuit")
    return c


def _chords(M: Matroid, c: int) -> Iterator[Chord]:
    rest = c & ~(1 << lowest(c))
    for z in ids(M.ground & ~c):
        zb = 1 << z
        for sub in submasks(rest):
            a = c & ~sub  # always holds the lowest element
            b = sub
            if not b:
                continue
            if M.is_circuit(a | zb) and M.is_circuit(b | zb):
                yield Chord(c, z, a, b)


def chords(M: Matroid, C) -> list[Chord]:
    """All (z, A, B) with A ∪ z and B ∪ z circuits; A holds the least element of C."""
    c = _require_circuit(M, C)
    return sorted(_chords(M, c), key=lambda ch: (ch.chord, ch.partA))


def is_c_chordal(M: Matroid) -> tuple[bool, int | None]:
    check_bound(M, "C-chordality")
    for c in M.circuits():
        if popcount(c) >= 4 and next(_chords(M, c), None) is None:
            return False, c
    return True, None


def strong_chord_witness(M: Matroid, C) -> tuple[int, int, int] | None:
    """Distinct x, y in C and z outside with {x,y,z} and (C - {x,y}) ∪ z circuits."""
    c = _require_circuit(M, C)
    for x, y in itertools.combinations(ids(c), 2):
        pair = 1 << x | 1 << y
        for z in ids(M.ground & ~c):
            zb = 1 << z
            if M.is_circuit(pair | zb) and M.is_circuit((c & ~pair) | zb):
                return x, y, z
    return None


@dataclass
class ChordalityProfile:
    supersolvable: bool
    saturated: bool
    c_chordal: bool
    chain: ModularChain | None = None
    unsaturated_witness: Flat | None = None
    chordless_circuit: int | None = None

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.supersolvable, self.saturated, self.c_chordal)


def classify(M: Matroid) -> ChordalityProfile:
    ss, chain = is_supersolvable(M)
    sat, bad = is_saturated(M)
    cc, free = is_c_chordal(M)
    return ChordalityProfile(ss, sat, cc, chain, bad, free)


def is_sss(M: Matroid) -> bool:
    """Supersolvable and saturated."""
    return is_supersolvable(M)[0] and is_saturated(M)[0]
