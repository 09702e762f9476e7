"""Matroid tree-decompositions, node-width, and tree-width.

Node-width of t with components T_1..T_d of T - t and F_i the union of the
bags in T_i::

    sum_i r(tau(t) ∪ ⋃_{k != i} F_k) - (d - 1) r(M)

An isolated node (d = 0) therefore has width r(M).
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from .bitset import ids
from .errors import (
    DisconnectedError,
    EnumerationBoundError,
    InvalidDecompositionError,
    RotundaError,
    TheoremViolation,
)
from .matroid import Matroid
from .rotunda_graph import RANK, LegitimateWeighting, max_weight_rotunda_tree, require_sss
from .roundness import round_flats, rotunda
from .trees import Edge, components_without, is_tree, labelled_trees, norm_edge

BRUTE_FORCE_ELEMENTS = 6


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree on nodes 0..k-1 with an element bitset per node."""

    edges: tuple[Edge, ...]
    bags: tuple[int, ...]

    @classmethod
    def build(cls, M: Matroid, edges: Sequence[Sequence[int]], bags: Sequence) -> TreeDecomposition:
        return cls(tuple(sorted(norm_edge(u, v) for u, v in edges)),
                   tuple(M.subset(b) for b in bags))

    @property
    def size(self) -> int:
        return len(self.bags)

    def is_strict(self) -> bool:
        seen = 0
        for b in self.bags:
            if seen & b:
                return False
            seen |= b
        return True

    def validate(self, M: Matroid) -> None:
        if not self.bags:
            raise InvalidDecompositionError("a tree-decomposition needs at least one node")
        if not is_tree(self.size, self.edges):
            raise InvalidDecompositionError("decomposition edges do not form a tree on its nodes")
        covered = 0
        for b in self.bags:
            if b & ~M.ground:
                raise InvalidDecompositionError("a bag holds elements outside the ground set")
            covered |= b
        if covered != M.ground:
            missing = M.fmt(M.ground & ~covered)
            raise InvalidDecompositionError(f"elements {missing} lie in no bag")


@dataclass
class WidthReport:
    node_widths: dict[int, int]
    width: int


def _branch_unions(td: TreeDecomposition, t: int) -> list[int]:
    out = []
    for comp in components_without(td.size, td.edges, t):
        F = 0
        for s in comp:
            F |= td.bags[s]
        out.append(F)
    return out


def node_width(M: Matroid, td: TreeDecomposition, t: int) -> int:
    if not 0 <= t < td.size:
        raise RotundaError(f"node {t} is not in the tree")
    F = _branch_unions(td, t)
    d = len(F)
    total = 0
    for i in range(d):
        x = td.bags[t]
        for k, Fk in enumerate(F):
            if k != i:
                x |= Fk
        total += M.r(x)
    return total - (d - 1) * M.full_rank


def width(M: Matroid, td: TreeDecomposition) -> WidthReport:
    td.validate(M)
    nw = {t: node_width(M, td, t) for t in range(td.size)}
    return WidthReport(nw, max(nw.values()))


def strictify(td: TreeDecomposition) -> TreeDecomposition:
    """Keep each element only in the first bag holding it."""
    seen = 0
    bags = []
    for b in td.bags:
        bags.append(b & ~seen)
        seen |= b
    return TreeDecomposition(td.edges, tuple(bags))


# --- brute force -------------------------------------------------------------

def _unlabelled_trees(k: int) -> Iterator[tuple[Edge, ...]]:
    import networkx as nx

    if k == 1:
        yield ()
        return
    for g in nx.nonisomorphic_trees(k):
        yield tuple(sorted(norm_edge(u, v) for u, v in g.edges()))


def _rank_table(M: Matroid) -> np.ndarray:
    return np.array([M.r(x) for x in range(1 << M.size)], dtype=np.int64)


def _tree_min_width(n: int, k: int, edges: tuple[Edge, ...], ranks: np.ndarray,
                    full: int, assignments: np.ndarray) -> int:
    """Minimum width over every map from n elements to the k nodes of one tree."""
    ground = (1 << n) - 1
    weights = (1 << np.arange(n, dtype=np.int64))
    widths = np.zeros(len(assignments), dtype=np.int64)
    for t in range(k):
        comps = components_without(k, edges, t)
        label = np.full(k, -1, dtype=np.int64)
        for i, comp in enumerate(comps):
            label[comp] = i
        lab = label[assignments]                       # component of each element's node
        d = len(comps)
        w = np.full(len(assignments), -(d - 1) * full, dtype=np.int64)
        for i in range(d):
            Fi = ((lab == i) * weights).sum(axis=1)
            # strict decompositions: tau(t) ∪ (other branches) = E - F_i
            w += ranks[ground & ~Fi]
        widths = np.maximum(widths, w)
    return int(widths.min())


def brute_force_treewidth(M: Matroid, *, max_nodes: int | None = None,
                          labelled: bool = False) -> int:
    """Smallest width over strict tree-decompositions (empty bags allowed).

    Trees range over 1..max_nodes nodes (default |E|).  By default one tree per
    isomorphism class is tried, which loses nothing because every map from
    elements to nodes is tried; ``labelled=True`` walks all Prüfer sequences
    instead and is kept as a cross-check.
    """
    n = M.size
    if n > BRUTE_FORCE_ELEMENTS:
        raise EnumerationBoundError(
            f"brute-force tree-width is limited to {BRUTE_FORCE_ELEMENTS} elements, got {n}"
        )
    full = M.full_rank
    if n == 0:
        return full
    ranks = _rank_table(M)
    best = full  # the one-node decomposition
    top = max_nodes if max_nodes is not None else n
    for k in range(2, top + 1):
        grid = np.indices((k,) * n).reshape(n, -1).T.astype(np.int64)
        trees = labelled_trees(k) if labelled else _unlabelled_trees(k)
        for edges in trees:
            best = min(best, _tree_min_width(n, k, edges, ranks, full, grid))
    return best


# --- rotunda trees -----------------------------------------------------------

def rotunda_tree_decomposition(M: Matroid, sigma: LegitimateWeighting = RANK) -> TreeDecomposition:
    rt = max_weight_rotunda_tree(M, sigma)
    return TreeDecomposition(rt.edges, tuple(R.bits for R in rt.nodes))


def rotunda_treewidth(M: Matroid) -> int:
    """Largest rotunda rank, checked against the width of a rotunda tree."""
    if not M.is_connected():
        raise DisconnectedError("rotunda tree-width needs a connected matroid")
    require_sss(M)
    value = max(R.rank for R in rotunda(M))
    td = rotunda_tree_decomposition(M)
    rep = width(M, td)
    if rep.width != value:
        raise TheoremViolation(
            f"{M.name}: rotunda tree has width {rep.width}, largest rotunda rank is {value}"
        )
    for t, w in rep.node_widths.items():
        if w != M.r(td.bags[t]):
            raise TheoremViolation(f"{M.name}: node {t} has width {w}, bag rank {M.r(td.bags[t])}")
    return value


def round_flat_lower_bound(M: Matroid) -> int:
    return max(F.rank for F in round_flats(M))


def decomposition_from_mapping(M: Matroid, edges: Sequence[Sequence[int]],
                               bags: Mapping[int, Sequence] | Sequence) -> TreeDecomposition:
    """Convenience constructor accepting bags keyed by node or listed in order."""
    if isinstance(bags, Mapping):
        bags = [bags[k] for k in sorted(bags)]
    return TreeDecomposition.build(M, edges, bags)


def bag_names(M: Matroid, td: TreeDecomposition) -> dict[int, list[str]]:
    return {t: [M.labels[e] for e in ids(b)] for t, b in enumerate(td.bags)}
