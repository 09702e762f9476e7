"""Simple graphs, chordality, maximal cliques, reduced clique graphs, clique trees.

Vertex sets are bitsets over vertex indices, mirroring how element subsets
are handled on the matroid side.
"""
from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from .bitset import from_ids, ids, popcount
from .errors import (
    DisconnectedError,
    ElementError,
    EnumerationBoundError,
    NotChordalError,
    RotundaError,
    TheoremViolation,
)
from .trees import Edge, has_subtree_property, kruskal_max, norm_edge, spanning_trees

CLIQUE_VERTEX_BOUND = 24
CLIQUE_TREE_BOUND = 9


class Graph:
    """Undirected simple graph with string vertex labels."""

    def __init__(self, vertices: Iterable, edges: Iterable[Sequence], name: str | None = None):
        verts = [str(v) for v in vertices]
        if len(set(verts)) != len(verts):
            raise RotundaError("duplicate vertex labels")
        self.vertices: tuple[str, ...] = tuple(verts)
        self.name = name
        self._index = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        es = set()
        for u, v in edges:
            a, b = self.index(u), self.index(v)
            if a == b:
                raise RotundaError(f"self-loop at {u!r} in a simple graph")
            es.add(norm_edge(a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        self.adj: tuple[int, ...] = tuple(adj)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence], vertices: Iterable | None = None,
                   name: str | None = None) -> Graph:
        edges = [(str(u), str(v)) for u, v in edges]
        verts = [str(v) for v in vertices] if vertices is not None else []
        seen = set(verts)
        for e in edges:
            for w in e:
                if w not in seen:
                    seen.add(w)
                    verts.append(w)
        return cls(verts, edges, name)

    def index(self, v) -> int:
        if isinstance(v, int) and not isinstance(v, bool) and str(v) not in self._index:
            if 0 <= v < len(self.vertices):
                return v
        try:
            return self._index[str(v)]
        except KeyError:
            raise ElementError(f"unknown vertex {v!r}") from None

    def vset(self, vs) -> int:
        if isinstance(vs, int) and not isinstance(vs, bool):
            return vs
        return from_ids(self.index(v) for v in vs)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def all(self) -> int:
        return (1 << self.n) - 1

    def names(self, vs: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in ids(vs))

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(self.vertices[u], self.vertices[v]) for u, v in self.edges]

    def is_clique(self, vs: int) -> bool:
        return all(vs & ~(1 << v) & ~self.adj[v] == 0 for v in ids(vs))

    def reachable(self, start: int, allowed: int) -> int:
        """Vertices reachable from the set ``start`` inside ``allowed``."""
        seen = start & allowed
        frontier = seen
        while frontier:
            nxt = 0
            for v in ids(frontier):
                nxt |= self.adj[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self, within: int | None = None) -> list[int]:
        rest = self.all if within is None else within
        out = []
        while rest:
            comp = self.reachable(rest & -rest, rest)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def cut_vertices(self) -> list[int]:
        base = len(self.components())
        return [v for v in range(self.n)
                if len(self.components(self.all & ~(1 << v))) > base]

    def is_two_connected(self) -> bool:
        """Connected without cut vertices; K0, K1 and K2 qualify."""
        return self.is_connected() and not self.cut_vertices()

    def induced(self, vs: int) -> Graph:
        keep = ids(vs)
        return Graph([self.vertices[i] for i in keep],
                     [(self.vertices[u], self.vertices[v]) for u, v in self.edges
                      if vs >> u & 1 and vs >> v & 1])

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edge_labels())
        return g

    @classmethod
    def from_networkx(cls, g, name: str | None = None) -> Graph:
        return cls([str(v) for v in g.nodes], [(str(u), str(v)) for u, v in g.edges], name)

    def to_dict(self) -> dict:
        d: dict = {"vertices": list(self.vertices), "edges": [list(e) for e in self.edge_labels()]}
        if self.name is not None:
            d["name"] = self.name
        return d

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        return f"<Graph{nm} |V|={self.n} |E|={len(self.edges)}>"


@dataclass
class ChordalityResult:
    chordal: bool
    order: list[int] | None = None
    cycle: list[int] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def is_perfect_elimination_order(G: Graph, order: Sequence[int]) -> bool:
    pos = {v: k for k, v in enumerate(order)}
    if sorted(order) != list(range(G.n)):
        return False
    for v in order:
        later = from_ids(u for u in ids(G.adj[v]) if pos[u] > pos[v])
        if not G.is_clique(later):
            return False
    return True


def is_chordal(G: Graph) -> ChordalityResult:
    """Simplicial-vertex elimination; on failure returns an induced cycle of length >= 4."""
    remaining = G.all
    order: list[int] = []
    while remaining:
        for v in ids(remaining):
            if G.is_clique(G.adj[v] & remaining):
                order.append(v)
                remaining &= ~(1 << v)
                break
        else:
            return ChordalityResult(False, cycle=_chordless_cycle(G, remaining))
    return ChordalityResult(True, order=order)


def _chordless_cycle(G: Graph, within: int) -> list[int]:
    for v in ids(within):
        nbrs = G.adj[v] & within
        for a, b in itertools.combinations(ids(nbrs), 2):
            if G.adj[a] >> b & 1:
                continue
            allowed = within & ~(nbrs | 1 << v) | (1 << a) | (1 << b)
            path = _shortest_path(G, a, b, allowed)
            if path is not None:
                return [v] + path
    raise TheoremViolation("no simplicial vertex but no chordless cycle found")


def _shortest_path(G: Graph, a: int, b: int, allowed: int) -> list[int] | None:
    prev = {a: None}
    q = deque([a])
    while q:
        x = q.popleft()
        if x == b:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in ids(G.adj[x] & allowed):
            if y not in prev:
                prev[y] = x
                q.append(y)
    return None


def _clique_key(G: Graph, c: int):
    return (popcount(c), sorted(G.vertices[i] for i in ids(c)))


def maximal_cliques(G: Graph, bound: int = CLIQUE_VERTEX_BOUND) -> list[int]:
    """Bron–Kerbosch with pivoting; cliques ordered by (size, sorted labels)."""
    if G.n > bound:
        raise EnumerationBoundError(f"maximal cliques: {G.n} vertices exceeds bound {bound}")
    out: list[int] = []

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(ids(P | X), key=lambda u: popcount(P & G.adj[u]))
        for v in ids(P & ~G.adj[pivot]):
            bk(R | 1 << v, P & G.adj[v], X & G.adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    if G.n:
        bk(0, G.all, 0)
    else:
        out.append(0)  # the empty clique is maximal in the empty graph
    return sorted(out, key=lambda c: _clique_key(G, c))


def is_separating_pair(G: Graph, C1: int, C2: int) -> bool:
    S = C1 & C2
    if not S or C1 == C2:
        return False
    reach = G.reachable(C1 & ~C2, G.all & ~S)
    return reach & (C2 & ~C1) == 0


Sigma = Callable[[int], int]


@dataclass
class CliqueGraph:
    graph: Graph
    nodes: list[int]
    edges: list[tuple[int, int, int]] = field(default_factory=list)

    def edge_set(self) -> set[Edge]:
        return {(i, j) for i, j, _ in self.edges}

    def weights(self) -> dict[Edge, int]:
        return {(i, j): w for i, j, w in self.edges}

    def node_names(self, i: int) -> tuple[str, ...]:
        return self.graph.names(self.nodes[i])

    def is_connected(self) -> bool:
        from .trees import is_connected

        return is_connected(len(self.nodes), [(i, j) for i, j, _ in self.edges])


def _require_chordal(G: Graph) -> None:
    res = is_chordal(G)
    if not res:
        raise NotChordalError(
            f"graph is not chordal: induced cycle {list(G.names(from_ids(res.cycle)))}"
        )


def clique_graph(G: Graph, sigma: Sigma | None = None) -> CliqueGraph:
    sigma = sigma or popcount
    cl = maximal_cliques(G)
    edges = [(i, j, sigma(cl[i] & cl[j])) for i, j in itertools.combinations(range(len(cl)), 2)
             if cl[i] & cl[j]]
    return CliqueGraph(G, cl, edges)


def reduced_clique_graph(G: Graph, sigma: Sigma | None = None) -> CliqueGraph:
    """Maximal cliques joined when they form a separating pair; weight sigma(C & C')."""
    _require_chordal(G)
    sigma = sigma or popcount
    cl = maximal_cliques(G)
    edges = [(i, j, sigma(cl[i] & cl[j])) for i, j in itertools.combinations(range(len(cl)), 2)
             if is_separating_pair(G, cl[i], cl[j])]
    return CliqueGraph(G, cl, edges)


def is_legitimate_weighting(domain: Iterable[int], sigma: Sigma) -> bool:
    """sigma(empty) = 0 and strict monotonicity on nested members of the domain."""
    dom = set(domain) | {0}
    if sigma(0) != 0 or any(sigma(x) < 0 for x in dom):
        return False
    return all(sigma(x) < sigma(y) for x in dom for y in dom if x != y and x & ~y == 0)


@dataclass(frozen=True)
class CliqueTree:
    cliques: tuple[int, ...]
    edges: tuple[Edge, ...]


def is_clique_tree(G: Graph, cliques: Sequence[int], tree: Sequence[Edge]) -> bool:
    from .trees import is_tree

    return is_tree(len(cliques), tree) and has_subtree_property(len(cliques), tree, cliques)


def clique_trees(G: Graph, sigma: Sigma | None = None,
                 bound: int = CLIQUE_TREE_BOUND) -> list[CliqueTree]:
    """Clique trees as spanning trees of the reduced clique graph.

    With at most ``bound`` maximal cliques every spanning tree is enumerated,
    filtered by the subtree property, and the result is checked to coincide
    with the maximum-weight spanning trees.  Above the bound one maximum-weight
    tree (deterministic Kruskal) is returned.
    """
    if not G.is_connected():
        raise DisconnectedError("clique trees need a connected graph; split into components")
    cg = reduced_clique_graph(G, sigma)
    k = len(cg.nodes)
    cliques = tuple(cg.nodes)
    if k > bound:
        return [CliqueTree(cliques, kruskal_max(k, cg.edges))]
    w = cg.weights()
    trees = list(spanning_trees(k, list(w)))
    good = [t for t in trees if has_subtree_property(k, t, cliques)]
    if trees:
        best = max(sum(w[e] for e in t) for t in trees)
        heavy = [t for t in trees if sum(w[e] for e in t) == best]
        if set(heavy) != set(good):
            raise TheoremViolation("clique trees differ from maximum-weight spanning trees")
    return [CliqueTree(cliques, t) for t in good]


def graph_tree_width(G: Graph) -> int:
    """Width of a clique tree of a chordal graph, counted as the largest bag size.

    This is one more than the usual tree-width convention.
    """
    _require_chordal(G)
    return max((popcount(c) for c in maximal_cliques(G)), default=0)
