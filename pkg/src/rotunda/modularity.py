"""Modular flats, projections onto modular hyperplanes, and modular covers."""
from __future__ import annotations

from dataclasses import dataclass

from .bitset import ids
from .errors import (
    ElementInHyperplaneError,
    NotModularHyperplaneError,
    ParallelElementsError,
    RotundaError,
)
from .matroid import Flat, Matroid


@dataclass(frozen=True, order=True)
class ModularCover:
    """Two proper modular flats whose union is the ground set."""

    first: Flat
    second: Flat

    @property
    def intersection(self) -> int:
        return self.first.bits & self.second.bits


@dataclass(frozen=True)
class Projection:
    hyperplane: Flat
    x: Flat
    y: Flat
    image: Flat


def _as_flat(M: Matroid, F) -> Flat:
    bits = M.subset(F)
    if M.cl(bits) != bits:
        raise RotundaError(f"{M.fmt(bits)} is not a flat")
    return Flat(M.r(bits), bits)


def _modular_table(M: Matroid) -> dict[int, bool]:
    table = M._memo.get("modular")
    if table is None:
        table = M._memo["modular"] = {}
    return table


def _modular_bits(M: Matroid, F: int) -> bool:
    table = _modular_table(M)
    v = table.get(F)
    if v is None:
        # Loops lie in every flat, so "disjoint" is read modulo cl(empty).
        loops = M.loops
        rF = M.r(F)
        v = all(rF + G.rank == M.r(F | G.bits)
                for G in M.flats() if F & G.bits == loops)
        table[F] = v
    return v


def is_modular_flat(M: Matroid, F) -> bool:
    """F is modular iff r(F) + r(G) = r(F | G) for every flat G meeting F only in loops."""
    return _modular_bits(M, _as_flat(M, F).bits)


def is_modular_by_definition(M: Matroid, F) -> bool:
    """The lattice definition over all flats; slower, kept as an independent check."""
    Fb = _as_flat(M, F).bits
    rF = M.r(Fb)
    return all(rF + G.rank == M.r(Fb | G.bits) + M.r(Fb & G.bits) for G in M.flats())


def modular_flats(M: Matroid) -> list[Flat]:
    got = M._memo.get("modular_flats")
    if got is None:
        got = M._memo["modular_flats"] = [F for F in M.flats() if _modular_bits(M, F.bits)]
    return got


def hyperplane_is_modular(M: Matroid, H: Flat | int) -> bool:
    """A hyperplane is modular iff it meets every line outside it in a point."""
    h = H.bits if isinstance(H, Flat) else H
    return all(M.r(h & L.bits) == 1 for L in M.flats(2) if L.bits & ~h)


def modular_hyperplanes(M: Matroid) -> list[Flat]:
    return [H for H in M.hyperplanes() if hyperplane_is_modular(M, H)]


def modular_hyperplanes_of(M: Matroid, F: Flat) -> list[Flat]:
    """Modular hyperplanes of the restriction to the flat ``F``, read off M's own flats."""
    if F.rank == 0:
        return []
    by_rank = M.flats_by_rank()
    lines = [L.bits for L in by_rank[2] if L.bits & ~F.bits == 0] if F.rank >= 2 else []
    out = []
    for H in by_rank[F.rank - 1]:
        if H.bits & ~F.bits:
            continue
        if all(M.r(H.bits & L) == 1 for L in lines if L & ~H.bits):
            out.append(H)
    return out


def projection(M: Matroid, H, x, y) -> Flat:
    """The rank-one flat H ∩ cl({x, y}) for a modular hyperplane H and x, y outside it."""
    h = M.subset(H)
    if M.cl(h) != h or M.r(h) != M.full_rank - 1 or not hyperplane_is_modular(M, h):
        raise NotModularHyperplaneError(f"{M.fmt(h)} is not a modular hyperplane")
    xi, yi = M.element(x), M.element(y)
    for e in (xi, yi):
        if h >> e & 1:
            raise ElementInHyperplaneError(f"element {M.labels[e]} lies in the hyperplane")
    pair = 1 << xi | 1 << yi
    if M.r(pair) != 2:
        raise ParallelElementsError(f"{M.labels[xi]} and {M.labels[yi]} are parallel")
    img = M.cl(pair) & h
    return Flat(M.r(img), img)


def projection_record(M: Matroid, H, x, y) -> Projection:
    img = projection(M, H, x, y)
    h = M.subset(H)
    return Projection(Flat(M.r(h), h), M.flat([M.element(x)]), M.flat([M.element(y)]), img)


def projection_union(M: Matroid, H, X) -> int:
    """Union of P_H(x, y) over non-parallel pairs x, y in X (X avoids H)."""
    h = M.subset(H)
    elems = ids(M.subset(X))
    out = 0
    for k, a in enumerate(elems):
        for b in elems[k + 1:]:
            pair = 1 << a | 1 << b
            if M.r(pair) == 2:
                out |= M.cl(pair) & h
    return out


def modular_covers(M: Matroid) -> list[ModularCover]:
    """Unordered pairs of proper modular flats covering E, each once, canonical order."""
    proper = [F for F in modular_flats(M) if F.bits != M.ground]
    out = []
    for i, F in enumerate(proper):
        for G in proper[i:]:
            if F.bits | G.bits == M.ground and F != G:
                out.append(ModularCover(F, G))
    return out


def rank_of_intersection_is_additive(M: Matroid, F: int, G: int) -> bool:
    return M.r(F) + M.r(G) == M.r(F | G) + M.r(F & G)

