import itertools

import pytest
from hypothesis import given, settings

from conftest import S, graphs
from rotunda import catalog as cat
from rotunda.classification import is_sss
from rotunda.correspondence import (
    ComplianceMap,
    check_compliance,
    check_rcg_equals_rotunda_graph,
    compliant_graph,
    graph_for_matroid,
    graphic_matroid,
    is_isomorphic,
    isomorphism,
    matroid_for_graph,
    rcg_to_rotunda_graph_roundtrip,
    rotunda_are_clique_edge_sets,
    two_connectivize,
)
from rotunda.errors import DisconnectedError
from rotunda.graphs import Graph, is_chordal, maximal_cliques, reduced_clique_graph
from rotunda.matroid import UniformMatroid, enumeration_limit
from rotunda.rotunda_graph import rotunda_graph


def star(k: int) -> Graph:
    return Graph(["c"] + [str(i) for i in range(k)], [("c", str(i)) for i in range(k)])


def test_graphic_matroid_examples():
    tri = graphic_matroid(cat.complete_graph(3))
    u23 = UniformMatroid(2, 3)
    assert all(tri.r(x) == u23.r(x) for x in range(8))
    P = graphic_matroid(cat.path_graph(2))
    assert P.full_rank == 2 and len(P.components()) == 2
    K = graphic_matroid(cat.complete_graph(4))
    assert (K.full_rank, K.size) == (3, 6)


def test_two_connectivize_examples():
    P = Graph("uvw", [("u", "v"), ("v", "w")])
    H = two_connectivize(P)
    assert set(H.vertices) == {"u", "v", "w", "v'"}
    assert set(map(frozenset, H.edge_labels())) == {frozenset(e) for e in
                                                     [("u", "v"), ("v", "w"), ("u", "v'"),
                                                      ("w", "v'"), ("v", "v'")]}
    D = cat.diamond()
    assert two_connectivize(D) is D
    H = two_connectivize(star(3))
    assert H.n == 5 and H.is_clique(H.vset(["c", "c'"])) and len(H.edges) == 7
    assert H.adj[H.index("c'")] == H.all & ~(1 << H.index("c'"))
    with pytest.raises(DisconnectedError):
        two_connectivize(Graph("ab", []))


def test_two_connectivize_keeps_adjacent_cut_vertices_together():
    P = cat.path_graph(3)  # cut vertices 1 and 2 are adjacent
    H = two_connectivize(P)
    a, b = reduced_clique_graph(P), reduced_clique_graph(H)
    assert is_isomorphic(len(a.nodes), a.edge_set(), len(b.nodes), b.edge_set())


def test_rcg_identity_examples():
    assert check_rcg_equals_rotunda_graph(cat.diamond()).holds
    assert check_rcg_equals_rotunda_graph(cat.complete_graph(4)).holds
    for G in cat.graph_catalog(5, min_n=5):
        if G.is_two_connected() and is_chordal(G):
            assert check_rcg_equals_rotunda_graph(G).holds, G.name


def test_compliant_graph_rank_one():
    M = UniformMatroid(1, 2, labels="pq")
    G, theta = compliant_graph(M)
    assert G.n == 4 and len(G.edges) == 6
    assert sorted(bin(p).count("1") for p in theta.theta.values()) == [2, 2]
    assert check_compliance(M, G, theta).compliant


def test_compliant_graph_diamond(diamond_m):
    G, theta = compliant_graph(diamond_m)
    assert G.n == 10 and G.is_two_connected() and is_chordal(G)
    rep = check_compliance(diamond_m, G, theta)
    assert rep.compliant and len(rep.bijection) == 2
    a = rotunda_graph(diamond_m)
    b = reduced_clique_graph(G)
    assert is_isomorphic(len(a.nodes), a.edge_set(), len(b.nodes), b.edge_set())


def test_compliant_graph_single_rotunda(k4_m):
    G, theta = compliant_graph(k4_m)
    assert len(maximal_cliques(G)) == 1
    assert check_compliance(k4_m, G, theta).compliant


def test_condition_two_detects_overlap(diamond_m):
    G, theta = compliant_graph(diamond_m)
    th = dict(theta.theta)
    a, b = sorted(th)[:2]
    th[b] = (th[b] & ~(th[b] & -th[b])) | (th[a] & -th[a])  # share a vertex with a
    rep = check_compliance(diamond_m, G, ComplianceMap(th))
    assert not rep.cond_ii and "ii" in rep.witnesses


def test_roundtrip_examples():
    assert rcg_to_rotunda_graph_roundtrip(cat.path_graph(2))
    M, parts = matroid_for_graph(cat.path_graph(2))
    assert is_sss(M) and len(rotunda_graph(M).edges) == 1
    G, _ = graph_for_matroid(cat.matroid_of(cat.complete_graph(4)))
    assert len(maximal_cliques(G)) == 1
    two = Graph("abcxyz", [("a", "b"), ("b", "c"), ("a", "c"), ("x", "y"), ("y", "z")])
    M, parts = matroid_for_graph(two)
    assert len(parts) == 2 and len(M.components()) >= 2
    assert rcg_to_rotunda_graph_roundtrip(two)


def test_roundtrip_direct_sum_matroid():
    M = [m for m in cat.extra_matroids() if m.name == "F7+U12"][0]
    assert rcg_to_rotunda_graph_roundtrip(M)


def test_rotunda_are_clique_edge_sets_on_atlas():
    for G in cat.graph_catalog(5):
        assert rotunda_are_clique_edge_sets(G), G.name


def brute_isomorphic(n1, e1, n2, e2) -> bool:
    if n1 != n2 or len(e1) != len(e2):
        return False
    target = {frozenset(e) for e in e2}
    return any({frozenset((p[u], p[v])) for u, v in e1} == target
               for p in itertools.permutations(range(n1)))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_matches_permutation_search(G, H):
    e1 = [tuple(sorted(e)) for e in G.edges]
    e2 = [tuple(sorted(e)) for e in H.edges]
    assert is_isomorphic(G.n, e1, H.n, e2) == brute_isomorphic(G.n, e1, H.n, e2)
    m = isomorphism(G.n, e1, G.n, e1)
    assert m is not None and {frozenset((m[u], m[v])) for u, v in e1} == {frozenset(e) for e in e1}


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_random_chordal_roundtrip(G):
    if is_chordal(G):
        with enumeration_limit(40):
            assert rcg_to_rotunda_graph_roundtrip(G)
