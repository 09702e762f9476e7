"""Vertical covers, round flats and rotunda (maximal round flats)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bitset import ids, submasks
from .matroid import Flat, Matroid, check_bound


@dataclass(frozen=True, order=True)
class VerticalCover:
    """Two proper flats of the ambient matroid whose union is its ground set."""

    first: Flat
    second: Flat


def is_round(M: Matroid, X=None) -> bool:
    """Whether M|X has no vertical cover.

    Uses the hyperplane test: X is round iff for every hyperplane H of M|X the
    complement X - H spans X.  A vertical cover (F, F') extends F to such a
    hyperplane with X - H inside F', and conversely (H, cl(X - H)) is a cover.
    """
    x = M.ground if X is None else M.subset(X)
    rx = M.r(x)
    if rx <= 1:
        return True
    N = M.restrict(x)
    return all(M.r(x & ~H.bits) == rx for H in N.flats(rx - 1))


def is_round_by_partition(M: Matroid, X=None) -> bool:
    """Brute force over bipartitions (U, U') of X: round iff one side always spans."""
    x = M.ground if X is None else M.subset(X)
    check_bound(M, "round (partition test)")
    rx = M.r(x)
    return all(M.r(u) == rx or M.r(x & ~u) == rx for u in submasks(x))


def vertical_covers(M: Matroid) -> list[VerticalCover]:
    """Unordered pairs of proper flats with union E, canonical order."""
    proper = [F for F in M.flats() if F.bits != M.ground]
    out = []
    for F, G in itertools.combinations(proper, 2):
        if F.bits | G.bits == M.ground:
            out.append(VerticalCover(F, G))
    return out


vertical_separations = vertical_covers


def _round_table(M: Matroid) -> dict[int, bool]:
    table = M._memo.get("round")
    if table is None:
        table = M._memo["round"] = {}
        by_rank = M.flats_by_rank()
        for F in M.flats():
            if F.rank <= 1:
                table[F.bits] = True
                continue
            table[F.bits] = all(
                M.r(F.bits & ~H.bits) == F.rank
                for H in by_rank[F.rank - 1] if H.bits & ~F.bits == 0
            )
    return table


def round_flats(M: Matroid) -> list[Flat]:
    table = _round_table(M)
    return [F for F in M.flats() if table[F.bits]]


def is_round_flat(M: Matroid, F) -> bool:
    bits = M.subset(F)
    table = _round_table(M)
    return table.get(bits, False)


def rotunda(M: Matroid) -> list[Flat]:
    """Inclusion-maximal round flats in canonical (rank, bitset) order."""
    got = M._memo.get("rotunda")
    if got is None:
        rf = round_flats(M)
        got = [F for F in rf
               if not any(G.bits != F.bits and F.bits & ~G.bits == 0 for G in rf)]
        M._memo["rotunda"] = got
    return got


def covering_rotunda(M: Matroid) -> dict[int, list[Flat]]:
    """For each element, the rotunda containing it."""
    rot = rotunda(M)
    return {e: [R for R in rot if R.bits >> e & 1] for e in ids(M.ground)}
