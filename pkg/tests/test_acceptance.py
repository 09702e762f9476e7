"""The eight acceptance criteria, each exhaustive over its stated corpus and timed.

Run with pytest (a summary line per criterion is printed at the end of the
session) or directly: ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from rotunda import catalog as cat  # noqa: E402
from rotunda.bitset import popcount  # noqa: E402
from rotunda.classification import classify, is_saturated, is_supersolvable  # noqa: E402
from rotunda.correspondence import (  # noqa: E402
    check_compliance,
    check_rcg_equals_rotunda_graph,
    compliant_graph,
    edge_set_of,
    graphic_matroid,
    is_isomorphic,
)
from rotunda.graphs import clique_trees, is_chordal, reduced_clique_graph  # noqa: E402
from rotunda.rotunda_graph import CARDINALITY, RANK, rotunda_graph, rotunda_trees  # noqa: E402
from rotunda.roundness import is_round, round_flats, rotunda  # noqa: E402
from rotunda.treewidth import TreeDecomposition, brute_force_treewidth, width  # noqa: E402
from rotunda.verify import SUITES, run_check  # noqa: E402

RESULTS: dict[int, tuple[bool, str, float]] = {}

CATALOG_MAX_N = 6
GRAPH_MAX_N = 6


def _catalog(max_elements=None):
    return list(cat.catalog(CATALOG_MAX_N, max_elements=max_elements))


def _sss(M) -> bool:
    return is_supersolvable(M)[0] and is_saturated(M)[0]


class Criterion:
    """Collects failures for one criterion and records the verdict and time."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit
        self.failures: list[str] = []
        self.cases = 0

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def check(self, cond: bool, msg) -> None:
        self.cases += 1
        if not cond:
            self.failures.append(msg() if callable(msg) else msg)

    def __exit__(self, *exc):
        secs = time.perf_counter() - self.start
        if exc[0] is not None:
            self.failures.append(f"{exc[0].__name__}: {exc[1]}")
        if secs > self.limit:
            self.failures.append(f"took {secs:.1f}s, limit {self.limit:.0f}s")
        detail = f"{self.cases} cases"
        if self.failures:
            detail += f"; {len(self.failures)} failures, first: {self.failures[0]}"
        RESULTS[self.number] = (not self.failures, f"{self.title}: {detail}", secs)
        return False

    def verdict(self) -> None:
        assert not self.failures, self.failures[:5]


def line(number: int) -> str:
    ok, text, secs = RESULTS[number]
    return f"{'PASS' if ok else 'FAIL'} criterion {number} ({secs:.1f}s) {text}"


# 1 -------------------------------------------------------------------------------

VENN = {"U36": (False, True, False), "W4": (False, False, True), "F7": (True, True, True),
        "M*(K33)": (False, True, True), "PABX": (True, False, True)}


def test_criterion_1_venn_fixtures():
    with Criterion(1, "Venn fixture profiles", 10) as c:
        for M in cat.named_fixtures():
            got = classify(M).as_tuple()
            c.check(got == VENN[M.name], lambda: f"{M.name} is {got}, expected {VENN[M.name]}")
    c.verdict()


# 2 -------------------------------------------------------------------------------

def _clique_edge_sets(G) -> set[int]:
    g = G.to_networkx()
    out = {0}
    for S in nx.enumerate_all_cliques(g):
        out.add(edge_set_of(G, G.vset(S)))
    return out


def test_criterion_2_graphic_matroids():
    with Criterion(2, "graphic round flats, saturation, chordality", 300) as c:
        for G in cat.graph_catalog(GRAPH_MAX_N):
            M = graphic_matroid(G)
            rf = {F.bits for F in round_flats(M)}
            c.check(rf == _clique_edge_sets(G), f"{G.name}: round flats are not the clique edge sets")
            c.check(is_saturated(M)[0], f"{G.name}: M(G) not saturated")
            c.check(is_supersolvable(M)[0] == nx.is_chordal(G.to_networkx()),
                    f"{G.name}: supersolvability differs from chordality")
    c.verdict()


# 3 -------------------------------------------------------------------------------

def test_criterion_3_two_connected_identity():
    with Criterion(3, "C_R(G) = R(M(G)) for 2-connected chordal G", 300) as c:
        for G in cat.graph_catalog(GRAPH_MAX_N):
            if G.is_two_connected() and is_chordal(G):
                res = check_rcg_equals_rotunda_graph(G)
                c.check(res.holds, f"{G.name}: {res.message}")
    c.verdict()


# 4 -------------------------------------------------------------------------------

def _max_weight_trees(n: int, weights: dict) -> set[frozenset]:
    trees = oracles.spanning_trees(list(range(n)), list(weights))
    if not trees:
        return set()
    w = {frozenset(e): x for e, x in weights.items()}
    total = {t: sum(w[e] for e in t) for t in trees}
    best = max(total.values())
    return {t for t, x in total.items() if x == best}


def _as_set(edges) -> frozenset:
    return frozenset(frozenset(e) for e in edges)


def test_criterion_4_clique_and_rotunda_trees():
    with Criterion(4, "clique trees and rotunda trees are the max-weight spanning trees", 600) as c:
        for G in cat.graph_catalog(GRAPH_MAX_N):
            if not is_chordal(G):
                continue
            for sigma in (popcount, lambda x: popcount(x) ** 2):
                cg = reduced_clique_graph(G, sigma)
                got = {_as_set(ct.edges) for ct in clique_trees(G, sigma)}
                c.check(got == _max_weight_trees(len(cg.nodes), cg.weights()),
                        f"{G.name}: clique trees differ from max-weight trees")
                used = set().union(*got) if got else set()
                c.check(used == _as_set(cg.edge_set()), f"{G.name}: a C_R edge is in no clique tree")
        for M in _catalog():
            if not (M.is_connected() and _sss(M)) or len(rotunda(M)) > 8:
                continue
            for sigma in (RANK, CARDINALITY):
                RG = rotunda_graph(M, sigma)
                got = {_as_set(rt.edges) for rt in rotunda_trees(M, sigma)}
                c.check(got == _max_weight_trees(len(RG.nodes), RG.weights()),
                        f"{M.name}: rotunda trees differ from max-weight trees ({sigma.kind})")
                used = set().union(*got) if got else set()
                c.check(used == _as_set(RG.edge_set()), f"{M.name}: an R(M) edge is in no rotunda tree")
    c.verdict()


# 5 -------------------------------------------------------------------------------

def test_criterion_5_compliant_graphs():
    with Criterion(5, "compliant graphs for connected supersolvable saturated matroids", 600) as c:
        for M in _catalog(max_elements=10):
            if not (M.is_connected() and _sss(M)):
                continue
            G, theta = compliant_graph(M)
            rep = check_compliance(M, G, theta)
            c.check(rep.compliant, lambda: f"{M.name}: {rep.witnesses}")
            a, b = rotunda_graph(M), reduced_clique_graph(G)
            c.check(is_isomorphic(len(a.nodes), a.edge_set(), len(b.nodes), b.edge_set()),
                    f"{M.name}: C_R(G) is not isomorphic to R(M)")
    c.verdict()


# 6 -------------------------------------------------------------------------------

def test_criterion_6_treewidth():
    with Criterion(6, "tree-width of round and rotunda-decomposable matroids", 900) as c:
        for M in _catalog(max_elements=6):
            tw = brute_force_treewidth(M)
            if is_round(M):
                c.check(tw == M.full_rank, f"{M.name}: round, tw {tw}, rank {M.full_rank}")
            if M.is_connected() and _sss(M):
                top = max(R.rank for R in rotunda(M))
                c.check(tw == top, f"{M.name}: tw {tw}, largest rotunda rank {top}")
                for rt in rotunda_trees(M):
                    td = TreeDecomposition(rt.edges, tuple(R.bits for R in rt.nodes))
                    rep = width(M, td)
                    c.check(rep.width == top, f"{M.name}: rotunda tree of width {rep.width}")
                    c.check(all(w == M.r(td.bags[t]) for t, w in rep.node_widths.items()),
                            f"{M.name}: node-width differs from bag rank")
    c.verdict()


# 7 -------------------------------------------------------------------------------

def test_criterion_7_rotunda_count_and_connectivity():
    with Criterion(7, "rotunda count at most rank; R(M) connected iff M connected", 60) as c:
        for M in _catalog():
            if not is_supersolvable(M)[0]:
                continue
            k = len(rotunda(M))
            c.check(k <= M.full_rank, f"{M.name}: {k} rotunda but rank {M.full_rank}")
            if is_saturated(M)[0]:
                c.check(rotunda_graph(M).is_connected() == M.is_connected(),
                        f"{M.name}: connectivity of R(M) differs from M")
    c.verdict()


# 8 -------------------------------------------------------------------------------

LEMMA_CHECKS = (
    [("modularity-lemmas", k) for k in SUITES["modularity-lemmas"]]
    + [("roundness-lemmas", k) for k in SUITES["roundness-lemmas"]]
    + [("venn", "saturated-restriction"), ("venn", "saturated-hyperplane-cover"),
       ("venn", "direct-sum-components"), ("trees", "hyperplane-rotunda-graph"),
       ("trees", "tree-edge-covers")]
)


def test_criterion_8_lemma_suite():
    with Criterion(8, "lemma suite over catalog matroids with at most 8 elements", 900) as c:
        for suite, name in LEMMA_CHECKS:
            out = run_check(suite, name)
            c.cases += out.checked - 1
            c.check(out.ok, lambda: f"{suite}/{name}: {out.failures[:1]}")
    c.verdict()


def main() -> int:
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    for n in sorted(RESULTS):
        print(line(n))
    return 0 if all(ok for ok, _, _ in RESULTS.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
