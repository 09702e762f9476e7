"""Naive reference implementations used to freeze and cross-check values.

Everything here works on frozensets of labels and recomputes from first
principles (networkx for graph facts, plain Gaussian elimination for vector
ranks, definitions for everything else).  Nothing in this module calls the
package's own algorithms.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable

import networkx as nx

Rank = Callable[[frozenset], int]


def subsets(xs: Iterable) -> list[frozenset]:
    xs = list(xs)
    return [frozenset(c) for k in range(len(xs) + 1) for c in itertools.combinations(xs, k)]


# --- rank functions from first principles ------------------------------------

def graphic_rank(edges: dict[str, tuple[str, str]]) -> Rank:
    def r(X: frozenset) -> int:
        g = nx.MultiGraph()
        for e in X:
            g.add_edge(*edges[e])
        return g.number_of_nodes() - nx.number_connected_components(g) if len(g) else 0
    return r


def uniform_rank(k: int) -> Rank:
    return lambda X: min(len(X), k)


def lines_rank(lines: Iterable[Iterable[str]]) -> Rank:
    """Simple rank-3 geometry given by its non-trivial lines."""
    lines = [frozenset(line) for line in lines]

    def r(X: frozenset) -> int:
        if len(X) <= 2:
            return len(X)
        return 2 if any(X <= line for line in lines) else 3
    return r


def vector_rank(vectors: dict[str, tuple[int, ...]], p: int) -> Rank:
    def r(X: frozenset) -> int:
        rows = [list(vectors[e]) for e in sorted(X)]
        rank, col = 0, 0
        width = len(next(iter(vectors.values())))
        while rank < len(rows) and col < width:
            piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
            if piv is None:
                col += 1
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = pow(rows[rank][col], p - 2, p)
            rows[rank] = [v * inv % p for v in rows[rank]]
            for i in range(len(rows)):
                if i != rank and rows[i][col] % p:
                    f = rows[i][col]
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
            rank += 1
            col += 1
        return rank
    return r


def dual_rank(ground: frozenset, r: Rank) -> Rank:
    full = r(ground)
    return lambda X: len(X) + r(ground - X) - full


# --- matroid notions by definition -------------------------------------------

class Oracle:
    def __init__(self, ground: Iterable[str], rank: Rank):
        self.E = frozenset(ground)
        self._r = rank
        self._cache: dict[frozenset, int] = {}

    def r(self, X: Iterable) -> int:
        X = frozenset(X)
        if X not in self._cache:
            self._cache[X] = self._r(X)
        return self._cache[X]

    def cl(self, X) -> frozenset:
        X = frozenset(X)
        return X | {e for e in self.E - X if self.r(X | {e}) == self.r(X)}

    def flats(self, within: frozenset | None = None) -> list[frozenset]:
        W = self.E if within is None else within
        return [X for X in subsets(W) if all(self.r(X | {e}) > self.r(X) for e in W - X)]

    def circuits(self) -> list[frozenset]:
        return [X for X in subsets(self.E) if X and self.r(X) == len(X) - 1
                and all(self.r(X - {e}) == len(X) - 1 for e in X)]

    def is_modular(self, F: frozenset) -> bool:
        return all(self.r(F) + self.r(G) == self.r(F | G) + self.r(F & G) for G in self.flats())

    def is_round(self, X: frozenset) -> bool:
        proper = [F for F in self.flats(X) if F != X and self.r(F) < self.r(X)]
        return not any(A | B == X for A, B in itertools.combinations(proper, 2))

    def round_flats(self) -> list[frozenset]:
        return [F for F in self.flats() if self.is_round(F)]

    def rotunda(self) -> list[frozenset]:
        rf = self.round_flats()
        return [F for F in rf if not any(F < G for G in rf)]

    def is_supersolvable(self) -> bool:
        mods = [F for F in self.flats() if self.is_modular(F)]

        def chain_from(F: frozenset) -> bool:
            if self.r(F) == 0:
                return True
            return any(G < F and self.r(G) == self.r(F) - 1 and chain_from(G) for G in mods)
        return chain_from(self.E)

    def is_saturated(self) -> bool:
        return all(self.is_modular(F) for F in self.round_flats())

    def has_chord(self, C: frozenset) -> bool:
        circs = set(self.circuits())
        for z in self.E - C:
            for k in range(1, len(C)):
                for A in itertools.combinations(sorted(C), k):
                    A = frozenset(A)
                    if A | {z} in circs and (C - A) | {z} in circs:
                        return True
        return False

    def is_c_chordal(self) -> bool:
        return all(self.has_chord(C) for C in self.circuits() if len(C) >= 4)

    def profile(self) -> tuple[bool, bool, bool]:
        return self.is_supersolvable(), self.is_saturated(), self.is_c_chordal()

    def modular_covers(self) -> set[frozenset]:
        mods = [F for F in self.flats() if F != self.E and self.is_modular(F)]
        return {frozenset((A, B)) for A, B in itertools.combinations(mods, 2) if A | B == self.E}

    def rotunda_graph(self) -> set[frozenset]:
        """Pairs of rotunda {R, R'} with a modular cover (F, F'), R ⊆ F, R' ⊆ F', F ∩ F' = R ∩ R'."""
        rot = self.rotunda()
        covers = [tuple(c) for c in self.modular_covers()]
        out = set()
        for R, S in itertools.combinations(rot, 2):
            for A, B in covers:
                for F, G in ((A, B), (B, A)):
                    if R <= F and S <= G and F & G == R & S:
                        out.add(frozenset((R, S)))
        return out

    def node_width(self, tree: nx.Graph, bags: dict, t) -> int:
        rest = tree.copy()
        rest.remove_node(t)
        branches = [frozenset().union(*(bags[s] for s in comp))
                    for comp in nx.connected_components(rest)]
        d = len(branches)
        total = 0
        for i in range(d):
            x = set(bags[t])
            for k, Fk in enumerate(branches):
                if k != i:
                    x |= Fk
            total += self.r(x)
        return total - (d - 1) * self.r(self.E)

    def treewidth(self) -> int:
        """Minimum over all trees with at most |E| nodes and all element -> node maps."""
        elems = sorted(self.E)
        best = self.r(self.E)
        for k in range(2, len(elems) + 1):
            for T in nx.nonisomorphic_trees(k):
                for assign in itertools.product(range(k), repeat=len(elems)):
                    bags = {t: frozenset(e for e, a in zip(elems, assign) if a == t) for t in T}
                    best = min(best, max(self.node_width(T, bags, t) for t in T))
        return best


# --- graph side ---------------------------------------------------------------

def maximal_cliques(g: nx.Graph) -> set[frozenset]:
    return {frozenset(c) for c in nx.find_cliques(g)}


def separating_pairs(g: nx.Graph) -> set[frozenset]:
    out = set()
    for A, B in itertools.combinations(maximal_cliques(g), 2):
        S = A & B
        h = g.subgraph(set(g) - S)
        if not any(nx.has_path(h, a, b) for a in A - S for b in B - S):
            out.add(frozenset((A, B)))
    return out


def has_subtree_property(tree: nx.Graph, bags: dict) -> bool:
    items = set().union(*bags.values()) if bags else set()
    return all(nx.is_connected(tree.subgraph([t for t in tree if x in bags[t]])) for x in items)


def spanning_trees(nodes: list, edges: list[tuple]) -> list[frozenset]:
    out = []
    for combo in itertools.combinations(edges, len(nodes) - 1):
        t = nx.Graph()
        t.add_nodes_from(nodes)
        t.add_edges_from(combo)
        if nx.is_tree(t):
            out.append(frozenset(frozenset(e) for e in combo))
    return out
