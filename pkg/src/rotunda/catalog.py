"""Named matroids and the small-graph corpus used by the test suites."""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

from .errors import RotundaError
from .graphs import Graph
from .matroid import (
    CircuitMatroid,
    DirectSum,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    UniformMatroid,
)

ATLAS_MAX_VERTICES = 7


def rank3_from_lines(points: Sequence[str], lines: Iterable[Iterable[str]],
                     name: str | None = None) -> CircuitMatroid:
    """Simple rank-3 matroid whose non-trivial lines are ``lines``.

    Circuits are the 3-subsets of a line together with the 4-subsets having
    no three points on a common line.
    """
    pts = list(points)
    lines = [frozenset(line) for line in lines]
    circuits = []
    for t in itertools.combinations(pts, 3):
        if any(set(t) <= line for line in lines):
            circuits.append(t)
    for q in itertools.combinations(pts, 4):
        if not any(len(set(q) & line) >= 3 for line in lines):
            circuits.append(q)
    return CircuitMatroid(circuits, elements=pts, name=name)


def u36() -> UniformMatroid:
    return UniformMatroid(3, 6, labels="abcdef", name="U36")


def fano() -> LinearMatroid:
    cols = [[(v >> k) & 1 for k in range(3)] for v in range(1, 8)]
    matrix = [[c[row] for c in cols] for row in range(3)]
    return LinearMatroid(matrix, field=2, labels=[str(v) for v in range(1, 8)], name="F7")


def whirl4() -> CircuitMatroid:
    return rank3_from_lines("abcdef", ["abd", "bce", "acf"], name="W4")


def pabx() -> CircuitMatroid:
    return rank3_from_lines("pabcdefx", ["pabc", "pdef", "adx", "bex", "cfx"], name="PABX")


def k33_cocycle_matroid() -> CircuitMatroid:
    """Bond matroid of K_{3,3}: circuits are the minimal edge cuts."""
    left, right = "abc", "123"
    edges = [(u, v) for u in left for v in right]
    labels = [u + v for u, v in edges]
    verts = list(left + right)
    bonds = []
    for k in range(1, len(verts)):
        for side in itertools.combinations(verts, k):
            if verts[0] not in side:
                continue  # each cut once
            S = set(side)
            T = set(verts) - S
            if not (_connected(S, edges) and _connected(T, edges)):
                continue
            bonds.append([lab for (u, v), lab in zip(edges, labels) if (u in S) != (v in S)])
    return CircuitMatroid(bonds, elements=labels, name="M*(K33)")


def _connected(vs: set[str], edges: Sequence[tuple[str, str]]) -> bool:
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for u, v in edges:
            for x, y in ((u, v), (v, u)):
                if x == a and y in vs and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen == vs


def graphic(edges: Iterable[Sequence], name: str | None = None,
            vertices: Iterable | None = None) -> GraphicMatroid:
    return GraphicMatroid(edges, vertices=vertices, name=name)


def complete_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, itertools.combinations(vs, 2), name=f"K{n}")


def diamond() -> Graph:
    """K4 minus the edge 34."""
    return Graph("1234", [("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4")],
                 name="K4-e")


def path_graph(n_edges: int) -> Graph:
    vs = [str(i) for i in range(n_edges + 1)]
    return Graph(vs, zip(vs, vs[1:]), name=f"P{n_edges + 1}")


def matroid_of(G: Graph, name: str | None = None) -> GraphicMatroid:
    return GraphicMatroid(G.edge_labels(), vertices=G.vertices,
                          name=name or (f"M({G.name})" if G.name else None))


def _atlas_name(g, idx: int) -> str:
    import networkx as nx

    n, m = g.number_of_nodes(), g.number_of_edges()
    if m == n * (n - 1) // 2:
        return f"K{n}"
    if n >= 3 and m == n and all(d == 2 for _, d in g.degree()):
        return f"C{n}"
    if nx.is_tree(g) and max((d for _, d in g.degree()), default=0) <= 2:
        return f"P{n}"
    return f"G{idx}"


def graph_catalog(max_n: int = 6, *, connected: bool = True,
                  min_n: int = 1) -> Iterator[Graph]:
    """Every simple graph on ``min_n..max_n`` vertices up to isomorphism (graph atlas)."""
    import networkx as nx

    if max_n > ATLAS_MAX_VERTICES:
        raise RotundaError(
            f"the graph corpus covers at most {ATLAS_MAX_VERTICES} vertices, got {max_n}"
        )
    for idx, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        if connected and not nx.is_connected(g):
            continue
        yield Graph.from_networkx(g, name=_atlas_name(g, idx))


def named_fixtures() -> list[Matroid]:
    return [u36(), fano(), whirl4(), k33_cocycle_matroid(), pabx()]


def extra_matroids() -> list[Matroid]:
    """A few non-graphic or non-simple inputs that exercise edge cases."""
    fat_diamond = GraphicMatroid(
        [("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"), ("3", "4"), ("2", "3")],
        name="M(K4-e with a parallel edge)",
    )
    return [
        UniformMatroid(2, 4, labels="abcd", name="U24"),
        UniformMatroid(1, 2, labels="pq", name="U12"),
        DirectSum([UniformMatroid(1, 1, labels="z"), UniformMatroid(2, 3, labels="abc")],
                  name="U11+U23"),
        DirectSum([fano(), UniformMatroid(1, 2, labels="pq")], name="F7+U12"),
        fat_diamond,
    ]


def catalog(max_n: int = 6, *, extras: bool = True,
            max_elements: int | None = None) -> Iterator[Matroid]:
    """Named fixtures, then M(G) for each connected simple graph on at most ``max_n`` vertices."""
    items: Iterable[Matroid] = itertools.chain(
        named_fixtures(),
        extra_matroids() if extras else [],
        (matroid_of(G, f"M({G.name})") for G in graph_catalog(max_n)),
    )
    for M in items:
        if max_elements is None or M.size <= max_elements:
            yield M


def by_name(name: str, max_n: int = 6) -> Matroid:
    for M in catalog(max_n):
        if M.name == name:
            return M
    raise KeyError(name)
