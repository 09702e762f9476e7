"""Tree utilities shared by the clique-tree, rotunda-tree and width code.

Trees are edge lists over nodes ``0..n-1``; an edge is a sorted pair.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def is_tree(n: int, edges: Sequence[Edge]) -> bool:
    if len(edges) != max(n - 1, 0):
        return False
    dsu = _DSU(n)
    return all(dsu.union(u, v) for u, v in edges)


def is_connected(n: int, edges: Iterable[Edge]) -> bool:
    if n == 0:
        return True
    dsu = _DSU(n)
    comps = n
    for u, v in edges:
        if dsu.union(u, v):
            comps -= 1
    return comps == 1


def spanning_trees(n: int, edges: Sequence[Edge]) -> Iterator[tuple[Edge, ...]]:
    """Every spanning tree, by include/exclude branching on the edge list.

    An edge is included only if it joins two current components (contraction)
    and excluded only if the rest can still connect the graph (deletion).
    Trees come out as sorted edge tuples.
    """
    edges = sorted({norm_edge(u, v) for u, v in edges if u != v})
    if n <= 1:
        yield ()
        return
    if not is_connected(n, edges):
        return

    def rec(k: int, chosen: list[Edge], parent: list[int], comps: int):
        if comps == 1:
            yield tuple(sorted(chosen))
            return
        if k == len(edges):
            return
        u, v = edges[k]

        def find(a: int) -> int:
            while parent[a] != a:
                a = parent[a]
            return a

        ru, rv = find(u), find(v)
        if ru != rv:
            p2 = parent.copy()
            p2[ru] = rv
            chosen.append((u, v))
            yield from rec(k + 1, chosen, p2, comps - 1)
            chosen.pop()
        # deletion branch: the remaining edges must still connect everything
        dsu = _DSU(n)
        c = n
        for a in range(n):
            if dsu.union(a, find(a)):
                c -= 1
        for a, b in edges[k + 1:]:
            if dsu.union(a, b):
                c -= 1
        if c == 1:
            yield from rec(k + 1, chosen, parent, comps)

    yield from rec(0, [], list(range(n)), n)


def tree_weight(tree: Iterable[Edge], weight: Callable[[Edge], float]) -> float:
    return sum(weight(e) for e in tree)


def kruskal_max(n: int, weighted: Sequence[tuple[int, int, float]]) -> tuple[Edge, ...]:
    """Maximum-weight spanning forest; ties broken by ascending edge."""
    order = sorted((norm_edge(u, v), w) for u, v, w in weighted)
    order.sort(key=lambda item: -item[1])
    dsu = _DSU(n)
    out = [e for e, _ in order if dsu.union(*e)]
    return tuple(sorted(out))


def has_subtree_property(n: int, tree: Sequence[Edge], bags: Sequence[int]) -> bool:
    """Running intersection: for every item, the nodes holding it form a subtree.

    ``bags`` are bitsets indexed by node.  A node set of size k in a tree is
    connected exactly when it spans k - 1 tree edges.
    """
    items = 0
    for b in bags:
        items |= b
    while items:
        low = items & -items
        items ^= low
        nodes = [t for t in range(n) if bags[t] & low]
        inside = sum(1 for u, v in tree if bags[u] & low and bags[v] & low)
        if inside != len(nodes) - 1:
            return False
    return True


def components_without(n: int, tree: Sequence[Edge], removed: int) -> list[list[int]]:
    """Node sets of the components of ``tree - removed``, ordered by least node."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in tree:
        adj[u].append(v)
        adj[v].append(u)
    seen = {removed}
    comps = []
    for s in sorted(adj[removed]):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in adj[a]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def split_at_edge(n: int, tree: Sequence[Edge], edge: Edge) -> tuple[list[int], list[int]]:
    """The two sides of ``tree`` minus ``edge``: (side of edge[0], side of edge[1])."""
    u, v = edge
    if norm_edge(u, v) not in {norm_edge(*e) for e in tree}:
        raise KeyError(f"edge {edge} is not in the tree")
    rest = [e for e in tree if norm_edge(*e) != norm_edge(u, v)]
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in rest:
        adj[a].append(b)
        adj[b].append(a)
    side = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in side:
                side.add(b)
                stack.append(b)
    left = sorted(side)
    right = sorted(set(range(n)) - side)
    return left, right


def prufer_decode(seq: Sequence[int], n: int) -> tuple[Edge, ...]:
    """Labelled tree on ``n`` nodes from a Prüfer sequence of length ``n - 2``."""
    if n == 1:
        return ()
    if n == 2:
        return ((0, 1),)
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append(norm_edge(leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append(norm_edge(u, v))
    return tuple(sorted(edges))


def labelled_trees(n: int) -> Iterator[tuple[Edge, ...]]:
    """All n^(n-2) labelled trees on ``n`` nodes."""
    if n <= 2:
        yield prufer_decode((), n) if n >= 1 else ()
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)
