"""Rotunda graphs with certified adjacency, legitimate weightings, rotunda trees."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bitset import popcount
from .classification import is_saturated, is_supersolvable
from .errors import (
    DisconnectedError,
    EnumerationBoundError,
    NotRotundaBijectionError,
    NotSupersolvableSaturatedError,
    RotundaError,
    TheoremViolation,
)
from .graphs import is_legitimate_weighting
from .matroid import Flat, Matroid
from .modularity import ModularCover, _modular_bits, modular_flats
from .roundness import rotunda
from .trees import (
    Edge,
    has_subtree_property,
    is_connected,
    is_tree,
    kruskal_max,
    norm_edge,
    spanning_trees,
    split_at_edge,
)

ROTUNDA_TREE_BOUND = 9


@dataclass(frozen=True)
class LegitimateWeighting:
    """Weight of a rotunda intersection.

    ``rank`` and ``cardinality`` are the two standard choices; ``custom`` looks
    the intersection bitset up in ``values``.  Loops are ignored when counting
    elements, so an intersection consisting only of loops weighs 0.
    """

    kind: str = "rank"
    values: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind not in ("rank", "cardinality", "custom"):
            raise RotundaError(f"unknown weighting kind {self.kind!r}")

    @classmethod
    def custom(cls, table: dict[int, int]) -> LegitimateWeighting:
        return cls("custom", tuple(sorted(table.items())))

    def __call__(self, M: Matroid, x: int) -> int:
        x &= ~M.loops
        if self.kind == "rank":
            return M.r(x)
        if self.kind == "cardinality":
            return popcount(x)
        table = dict(self.values)
        if x == 0:
            return table.get(0, 0)
        try:
            return table[x]
        except KeyError:
            raise RotundaError(f"custom weighting has no value for {M.fmt(x)}") from None

    def is_legitimate(self, M: Matroid, rot: list[Flat] | None = None) -> bool:
        rot = rotunda(M) if rot is None else rot
        loops = M.loops
        domain = {(R.bits & S.bits) & ~loops for R, S in itertools.combinations(rot, 2)}
        return is_legitimate_weighting(domain, lambda x: self(M, x))


RANK = LegitimateWeighting("rank")
CARDINALITY = LegitimateWeighting("cardinality")


@dataclass(frozen=True)
class RotundaEdge:
    i: int
    j: int
    weight: int
    cover: ModularCover  # first contains node i, second contains node j


@dataclass
class RotundaGraph:
    matroid: Matroid
    nodes: list[Flat]
    edges: list[RotundaEdge] = field(default_factory=list)
    weighting: LegitimateWeighting = RANK

    def edge_set(self) -> set[Edge]:
        return {(e.i, e.j) for e in self.edges}

    def weights(self) -> dict[Edge, int]:
        return {(e.i, e.j): e.weight for e in self.edges}

    def is_connected(self) -> bool:
        return is_connected(len(self.nodes), self.edge_set())


def require_sss(M: Matroid) -> None:
    if not is_supersolvable(M)[0]:
        raise NotSupersolvableSaturatedError(f"{M.name or 'matroid'} is not supersolvable")
    ok, bad = is_saturated(M)
    if not ok:
        raise NotSupersolvableSaturatedError(
            f"{M.name or 'matroid'} is not saturated: round flat {M.fmt(bad)} is not modular"
        )


def find_certificate(M: Matroid, R1: Flat, R2: Flat) -> ModularCover | None:
    """First modular cover (F1, F2) with R_i ⊆ F_i and F1 ∩ F2 = R1 ∩ R2."""
    meet = R1.bits & R2.bits
    proper = [F for F in modular_flats(M) if F.bits != M.ground]
    side1 = [F for F in proper if R1.bits & ~F.bits == 0]
    side2 = [F for F in proper if R2.bits & ~F.bits == 0]
    for F1 in side1:
        for F2 in side2:
            if F1.bits | F2.bits == M.ground and F1.bits & F2.bits == meet:
                return ModularCover(F1, F2)
    return None


def rotunda_graph(M: Matroid, sigma: LegitimateWeighting = RANK) -> RotundaGraph:
    require_sss(M)
    nodes = rotunda(M)
    loops = M.loops
    if not sigma.is_legitimate(M, nodes):
        raise RotundaError("weighting is not legitimate on this matroid")
    edges = []
    for i, j in itertools.combinations(range(len(nodes)), 2):
        if (nodes[i].bits & nodes[j].bits) & ~loops == 0:
            continue
        cover = find_certificate(M, nodes[i], nodes[j])
        if cover is not None:
            edges.append(RotundaEdge(i, j, sigma(M, nodes[i].bits & nodes[j].bits), cover))
    return RotundaGraph(M, nodes, edges, sigma)


@dataclass(frozen=True)
class RotundaTree:
    nodes: tuple[Flat, ...]  # tau: node index -> rotunda
    edges: tuple[Edge, ...]


def _check_bijection(M: Matroid, tau) -> list[int]:
    bags = [M.subset(t) for t in tau]
    rot = sorted(R.bits for R in rotunda(M))
    if sorted(bags) != rot:
        raise NotRotundaBijectionError("tau is not a bijection onto the rotunda")
    return bags


def is_rotunda_tree(M: Matroid, tree, tau) -> bool:
    """Subtree property per element for a tree whose nodes are the rotunda."""
    bags = _check_bijection(M, tau)
    tree = [norm_edge(u, v) for u, v in tree]
    return is_tree(len(bags), tree) and has_subtree_property(len(bags), tree, bags)


def rotunda_trees(M: Matroid, sigma: LegitimateWeighting = RANK,
                  bound: int = ROTUNDA_TREE_BOUND) -> list[RotundaTree]:
    """Spanning trees of R(M) with the subtree property.

    The result is checked against the maximum-weight spanning trees of R(M);
    a mismatch raises :class:`TheoremViolation`.
    """
    if not M.is_connected():
        raise DisconnectedError(
            "rotunda trees need a connected matroid; analyse each component separately"
        )
    RG = rotunda_graph(M, sigma)
    k = len(RG.nodes)
    if k > bound:
        raise EnumerationBoundError(f"{k} rotunda exceeds the rotunda-tree bound {bound}")
    bags = [R.bits for R in RG.nodes]
    w = RG.weights()
    trees = list(spanning_trees(k, list(w)))
    good = [t for t in trees if has_subtree_property(k, t, bags)]
    best = max((sum(w[e] for e in t) for t in trees), default=0)
    heavy = [t for t in trees if sum(w[e] for e in t) == best]
    if set(good) != set(heavy):
        raise TheoremViolation(f"{M.name}: rotunda trees differ from maximum-weight spanning trees")
    return [RotundaTree(tuple(RG.nodes), t) for t in good]


def max_weight_rotunda_tree(M: Matroid, sigma: LegitimateWeighting = RANK) -> RotundaTree:
    """One maximum-weight spanning tree of R(M), by deterministic Kruskal."""
    if not M.is_connected():
        raise DisconnectedError("rotunda trees need a connected matroid")
    RG = rotunda_graph(M, sigma)
    tree = kruskal_max(len(RG.nodes), [(e.i, e.j, e.weight) for e in RG.edges])
    return RotundaTree(tuple(RG.nodes), tree)


def modular_cover_of_tree_edge(M: Matroid, rt: RotundaTree, edge: Edge) -> ModularCover:
    """Unions of bags on the two sides of a tree edge; they form a modular cover."""
    k = len(rt.nodes)
    u, v = edge
    left, right = split_at_edge(k, rt.edges, (u, v))
    F1 = 0
    for t in left:
        F1 |= rt.nodes[t].bits
    F2 = 0
    for t in right:
        F2 |= rt.nodes[t].bits
    meet = rt.nodes[u].bits & rt.nodes[v].bits
    problems = []
    for F in (F1, F2):
        if M.cl(F) != F:
            problems.append(f"{M.fmt(F)} is not a flat")
        elif F == M.ground:
            problems.append(f"{M.fmt(F)} is not proper")
        elif not _modular_bits(M, F):
            problems.append(f"{M.fmt(F)} is not modular")
    if F1 | F2 != M.ground:
        problems.append("sides do not cover the ground set")
    if F1 & F2 != meet:
        problems.append("side intersection differs from the bag intersection")
    if problems:
        raise TheoremViolation(f"tree edge {edge}: " + "; ".join(problems))
    return ModularCover(Flat(M.r(F1), F1), Flat(M.r(F2), F2))
