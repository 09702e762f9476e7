"""Property suites run over the catalog.

Each check returns how many instances it examined and a list of
counterexample descriptions.  Suites are plain lists of checks so the CLI and
the test-suite share one implementation.
"""
from __future__ import annotations

import functools
import itertools
import random
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import catalog as cat
from .bitset import ids, popcount, submasks
from .classification import (
    classify,
    is_c_chordal,
    is_saturated,
    is_sss,
    is_supersolvable,
    modular_chains,
    strong_chord_witness,
)
from .correspondence import (
    check_compliance,
    check_rcg_equals_rotunda_graph,
    compliant_graph,
    edge_set_of,
    graphic_matroid,
    is_isomorphic,
    rcg_to_rotunda_graph_roundtrip,
    two_connectivize,
)
from .graphs import Graph, clique_trees, is_chordal, maximal_cliques, reduced_clique_graph
from .matroid import DirectSum, GraphicMatroid, Matroid, enumeration_limit, rank_axiom_violation
from .modularity import (
    _modular_bits,
    hyperplane_is_modular,
    is_modular_by_definition,
    modular_covers,
    modular_flats,
    modular_hyperplanes,
    projection_union,
)
from .rotunda_graph import (
    CARDINALITY,
    RANK,
    is_rotunda_tree,
    modular_cover_of_tree_edge,
    rotunda_graph,
    rotunda_trees,
)
from .roundness import is_round, is_round_by_partition, round_flats, rotunda, vertical_covers
from .trees import spanning_trees
from .treewidth import (
    TreeDecomposition,
    brute_force_treewidth,
    node_width,
    rotunda_treewidth,
    round_flat_lower_bound,
    strictify,
    width,
)

LEMMA_ELEMENTS = 8
GRAPH_VERTICES = 6
ROTUNDA_TREE_LIMIT = 8
COMPLIANCE_ELEMENTS = 10
TREEWIDTH_ELEMENTS = 6

VENN_EXPECTED = {
    "U36": (False, True, False),
    "W4": (False, False, True),
    "F7": (True, True, True),
    "M*(K33)": (False, True, True),
    "PABX": (True, False, True),
}


class Tally:
    """Counts instances and collects counterexamples (first few kept)."""

    def __init__(self, keep: int = 5):
        self.checked = 0
        self.failures: list[str] = []
        self.failed = 0
        self._keep = keep

    def case(self, n: int = 1) -> None:
        self.checked += n

    def fail(self, msg: str) -> None:
        self.failed += 1
        if len(self.failures) < self._keep:
            self.failures.append(msg)

    def expect(self, cond: bool, msg: str | Callable[[], str]) -> bool:
        self.case()
        if not cond:
            self.fail(msg() if callable(msg) else msg)
        return cond

    def result(self) -> tuple[int, int, list[str]]:
        return self.checked, self.failed, self.failures


@dataclass
class Outcome:
    suite: str
    check: str
    checked: int
    failed: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        head = f"{status} {self.suite}/{self.check}: {self.checked} cases, {self.failed} failures"
        return f"{head} ({self.seconds:.2f}s)"


# --- corpora ---------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def matroids(max_elements: int = LEMMA_ELEMENTS, max_n: int = GRAPH_VERTICES) -> tuple[Matroid, ...]:
    """Catalog matroids up to a size, built once per process so caches are shared."""
    return tuple(cat.catalog(max_n, max_elements=max_elements))


@functools.lru_cache(maxsize=None)
def graphs(max_n: int = GRAPH_VERTICES, connected: bool = True) -> tuple[Graph, ...]:
    return tuple(cat.graph_catalog(max_n, connected=connected))


def chordal_graphs(max_n: int = GRAPH_VERTICES) -> Iterator[Graph]:
    return (G for G in graphs(max_n) if is_chordal(G))


@functools.lru_cache(maxsize=None)
def _sss(M: Matroid) -> bool:
    return is_sss(M)


def sss_matroids(max_elements: int = LEMMA_ELEMENTS) -> list[Matroid]:
    return [M for M in matroids(max_elements) if _sss(M)]


def _hyperplane_data(M: Matroid) -> Iterator[tuple[int, int, int]]:
    """(H, C*, P) for each modular hyperplane, P the union of all projections."""
    for H in modular_hyperplanes(M):
        cstar = M.ground & ~H.bits
        yield H.bits, cstar, projection_union(M, H.bits, cstar)


def _direct_sums() -> list[Matroid]:
    small = [M for M in matroids(4) if 0 < M.size and M.name]
    out = []
    for A, B in itertools.combinations_with_replacement(small[:12], 2):
        out.append(DirectSum([A, B], name=f"{A.name}+{B.name}"))
    return out


# --- axioms ------------------------------------------------------------------------

def check_rank_axioms() -> tuple:
    t = Tally()
    for M in matroids(10):
        v = rank_axiom_violation(M)
        t.expect(v is None, lambda: f"{M.name}: {v}")
    return t.result()


def check_submodular_pairs() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        v = rank_axiom_violation(M, all_pairs=True)
        t.expect(v is None, lambda: f"{M.name}: {v}")
    return t.result()


def check_closure_axioms() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        bad = None
        for x in submasks(M.ground):
            c = M.cl(x)
            if c & x != x or M.cl(c) != c:
                bad = f"{M.name}: closure of {M.fmt(x)} not extensive/idempotent"
                break
            if any(c & ~M.cl(x | 1 << e) for e in ids(M.ground & ~x)):
                bad = f"{M.name}: closure not monotone at {M.fmt(x)}"
                break
        t.expect(bad is None, lambda: bad)
    return t.result()


def check_flats_by_closure() -> tuple:
    t = Tally()
    for M in matroids(10):
        brute = {M.cl(x) for x in submasks(M.ground)}
        t.expect(brute == {F.bits for F in M.flats()}, f"{M.name}: flat enumeration differs")
    return t.result()


def check_circuits() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        for C in M.circuits():
            ok = M.r(C) == popcount(C) - 1 and all(
                M.r(C & ~(1 << e)) == popcount(C) - 1 for e in ids(C))
            t.expect(ok, lambda: f"{M.name}: {M.fmt(C)} is not a minimal dependent set")
    return t.result()


def check_direct_sum_rank() -> tuple:
    t = Tally()
    sums = [M for M in matroids(10) if isinstance(M, DirectSum)] + _direct_sums()
    for M in sums:
        parts = M.part_grounds()
        ok = all(M.r(x) == sum(M.r(x & g) for g in parts) for x in submasks(M.ground))
        t.expect(ok, f"{M.name}: rank is not additive over the parts")
    return t.result()


def check_bond_matroid() -> tuple:
    """Circuits of the K33 bond matroid are the circuits of the dual of M(K33)."""
    t = Tally()
    B = cat.k33_cocycle_matroid()
    K = GraphicMatroid([(u, v) for u in "abc" for v in "123"])
    full = K.full_rank

    def dual_rank(x: int) -> int:
        return popcount(x) + K.r(K.ground & ~x) - full

    dual_circuits = sorted(x for x in submasks(K.ground) if x and dual_rank(x) < popcount(x)
                           and all(dual_rank(x & ~(1 << e)) == popcount(x) - 1 for e in ids(x)))
    t.expect(sorted(B.circuits()) == dual_circuits, "bond matroid circuits differ from the dual")
    return t.result()


# --- modularity ------------------------------------------------------------------------

def check_modular_definition() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        for F in M.flats():
            t.expect(_modular_bits(M, F.bits) == is_modular_by_definition(M, F.bits),
                     lambda: f"{M.name}: modularity tests disagree on {M.fmt(F.bits)}")
    return t.result()


def check_hyperplane_criterion() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        for H in M.hyperplanes():
            t.expect(hyperplane_is_modular(M, H) == _modular_bits(M, H.bits),
                     lambda: f"{M.name}: line criterion disagrees on {M.fmt(H.bits)}")
    return t.result()


def check_modular_intersection() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        mods = modular_flats(M)
        for F, G in itertools.combinations(mods, 2):
            x = F.bits & G.bits
            t.expect(M.cl(x) == x and _modular_bits(M, x),
                     lambda: f"{M.name}: {M.fmt(F.bits)} ∩ {M.fmt(G.bits)} is not modular")
    return t.result()


def check_modular_in_restriction() -> tuple:
    t = Tally()
    for M in matroids(7):
        mods = [F for F in modular_flats(M) if F.bits != M.ground]
        for X in submasks(M.ground):
            inside = [F for F in mods if F.bits & ~X == 0]
            if not inside:
                continue
            N = M.restrict(X)
            for F in inside:
                t.expect(_modular_bits(N, F.bits),
                         lambda: f"{M.name}: {M.fmt(F.bits)} not modular in M|{M.fmt(X)}")
    return t.result()


def check_short_circuit() -> tuple:
    """Modular F, circuit C meeting F and E - F: cl(C - F) meets F outside the loops."""
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        loops = M.loops
        circs = M.circuits()
        for F in modular_flats(M):
            for C in circs:
                if C & F.bits and C & ~F.bits:
                    t.expect(M.cl(C & ~F.bits) & F.bits & ~loops != 0,
                             lambda: f"{M.name}: F={M.fmt(F.bits)}, C={M.fmt(C)}")
    return t.result()


def check_projection_closure() -> tuple:
    """cl(U) = cl(U ∪ X) ∩ H whenever P ⊆ U ⊆ H and X avoids H."""
    t = Tally()
    for M in matroids(7):
        for H in modular_hyperplanes(M):
            h = H.bits
            for X in submasks(M.ground & ~h):
                P = projection_union(M, h, X)
                for extra in submasks(h & ~P):
                    U = P | extra
                    t.expect(M.cl(U) == M.cl(U | X) & h,
                             lambda: f"{M.name}: H={M.fmt(h)}, X={M.fmt(X)}, U={M.fmt(U)}")
    return t.result()


def check_hyperplane_restriction_connected() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        if not M.is_connected():
            continue
        for H in modular_hyperplanes(M):
            t.expect(M.restrict(H.bits).is_connected(),
                     lambda: f"{M.name}: M|{M.fmt(H.bits)} is disconnected")
    return t.result()


def check_projection_rank_one() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        for H in modular_hyperplanes(M):
            out = ids(M.ground & ~H.bits)
            for x, y in itertools.combinations(out, 2):
                pair = 1 << x | 1 << y
                if M.r(pair) == 2:
                    t.expect(M.r(M.cl(pair) & H.bits) == 1,
                             lambda: f"{M.name}: projection of {M.fmt(pair)} has wrong rank")
    return t.result()


# --- roundness ---------------------------------------------------------------------

def check_round_partition() -> tuple:
    t = Tally()
    for M in matroids(6):
        for X in submasks(M.ground):
            t.expect(is_round(M, X) == is_round_by_partition(M, X),
                     lambda: f"{M.name}: roundness tests disagree on {M.fmt(X)}")
    for M in matroids(LEMMA_ELEMENTS):
        if M.size > 6:
            for F in M.flats():
                t.expect(is_round(M, F.bits) == is_round_by_partition(M, F.bits),
                         lambda: f"{M.name}: roundness tests disagree on {M.fmt(F.bits)}")
    return t.result()


def check_rotunda_separation() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        rot = rotunda(M)
        covers = vertical_covers(M)
        for R, S in itertools.permutations(rot, 2):
            for cv in covers:
                for F, G in ((cv.first.bits, cv.second.bits), (cv.second.bits, cv.first.bits)):
                    if R.bits & ~F or S.bits & ~G or F & G != R.bits & S.bits:
                        continue
                    t.expect(R.bits & ~G != 0 and S.bits & ~F != 0,
                             lambda: f"{M.name}: rotunda {M.fmt(R.bits)}, {M.fmt(S.bits)}")
    return t.result()


def check_projection_union_round() -> tuple:
    t = Tally()
    for M in matroids(7):
        for H in modular_hyperplanes(M):
            for X in submasks(M.ground & ~H.bits):
                P = projection_union(M, H.bits, X)
                t.expect(is_round(M, P), lambda: f"{M.name}: projections of {M.fmt(X)} not round")
    return t.result()


def check_cover_lifting() -> tuple:
    """Vertical (modular) covers of M|H lift through the side containing P."""
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        for h, cstar, P in _hyperplane_data(M):
            N = M.restrict(h)
            for cv in vertical_covers(N):
                sides = ((cv.first.bits, cv.second.bits), (cv.second.bits, cv.first.bits))
                usable = [(A, B) for A, B in sides if P & ~A == 0]
                if not t.expect(bool(usable), lambda: f"{M.name}: P lies in neither side"):
                    continue
                modular = _modular_bits(N, cv.first.bits) and _modular_bits(N, cv.second.bits)
                for A, B in usable:
                    up = A | cstar
                    ok = (M.cl(up) == up and up != M.ground and B != M.ground
                          and up | B == M.ground)
                    if ok and modular:
                        ok = _modular_bits(M, up) and _modular_bits(M, B)
                    t.expect(ok, lambda: f"{M.name}: H={M.fmt(h)} cover "
                                         f"({M.fmt(A)}, {M.fmt(B)}) does not lift")
    return t.result()


def check_cover_restriction() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        covers = modular_covers(M)
        for H in modular_hyperplanes(M):
            h = H.bits
            N = M.restrict(h)
            for cv in covers:
                for F, G in ((cv.first.bits, cv.second.bits), (cv.second.bits, cv.first.bits)):
                    if G & ~h or G == h:
                        continue
                    a, b = F & h, G & h
                    ok = (a != h and b != h and a | b == h
                          and _modular_bits(N, a) and _modular_bits(N, b))
                    t.expect(ok, lambda: f"{M.name}: H={M.fmt(h)}, ({M.fmt(F)}, {M.fmt(G)})")
    return t.result()


def check_round_flat_in_cocircuit_closure() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        rf = round_flats(M)
        for h, cstar, _ in _hyperplane_data(M):
            R = M.cl(cstar)
            for F in rf:
                if F.bits & ~h:
                    t.expect(F.bits & ~R == 0, lambda: f"{M.name}: {M.fmt(F.bits)} escapes cl(C*)")
    return t.result()


def check_cocircuit_closure_rotunda() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        rot = {R.bits for R in rotunda(M)}
        for h, cstar, _ in _hyperplane_data(M):
            R = M.cl(cstar)
            t.expect(R in rot and all(S & ~h == 0 for S in rot if S != R),
                     lambda: f"{M.name}: H={M.fmt(h)}, cl(C*)={M.fmt(R)}")
    return t.result()


def check_cocircuit_closure_meet_round() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        for h, cstar, _ in _hyperplane_data(M):
            x = M.cl(cstar) & h
            t.expect(is_round(M, x), lambda: f"{M.name}: cl(C*) ∩ {M.fmt(h)} not round")
    return t.result()


def check_element_in_rotunda() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        covered = 0
        for R in rotunda(M):
            covered |= R.bits
        t.expect(covered == M.ground, lambda: f"{M.name}: {M.fmt(M.ground & ~covered)} uncovered")
    return t.result()


# --- classification ----------------------------------------------------------------

def check_fixture_profiles() -> tuple:
    t = Tally()
    for M in cat.named_fixtures():
        got = classify(M).as_tuple()
        want = VENN_EXPECTED[M.name]
        t.expect(got == want, lambda: f"{M.name}: got {got}, expected {want}")
    return t.result()


def check_saturated_restriction() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        if not is_saturated(M)[0]:
            continue
        for F in M.flats():
            t.expect(is_saturated(M.restrict(F.bits))[0],
                     lambda: f"{M.name}: M|{M.fmt(F.bits)} not saturated")
    return t.result()


def check_saturated_hyperplane_cover() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        if not is_saturated(M)[0]:
            continue
        for h, cstar, _ in _hyperplane_data(M):
            R = M.cl(cstar)
            if R == M.ground:
                continue
            t.expect(_modular_bits(M, h) and _modular_bits(M, R) and h | R == M.ground,
                     lambda: f"{M.name}: ({M.fmt(h)}, {M.fmt(R)}) is not a modular cover")
    return t.result()


def check_direct_sum_components() -> tuple:
    t = Tally()
    for M in _direct_sums():
        parts = [M.restrict(g) for g in M.part_grounds()]
        for pred in (lambda N: is_supersolvable(N)[0], lambda N: is_saturated(N)[0]):
            t.expect(pred(M) == all(pred(P) for P in parts),
                     lambda: f"{M.name}: direct sum disagrees with its parts")
    return t.result()


def check_sss_c_chordal() -> tuple:
    t = Tally()
    for M in sss_matroids(LEMMA_ELEMENTS):
        t.expect(is_c_chordal(M)[0], lambda: f"{M.name}: supersolvable saturated, not C-chordal")
        for C in M.circuits():
            if popcount(C) >= 4:
                t.expect(strong_chord_witness(M, C) is not None,
                         lambda: f"{M.name}: no strong chord for {M.fmt(C)}")
    return t.result()


def check_graphic_round_flats() -> tuple:
    t = Tally()
    for G in graphs():
        M = graphic_matroid(G)
        for F in M.flats():
            verts = 0
            for i in ids(F.bits):
                u, v = G.edges[i]
                verts |= 1 << u | 1 << v
            clique = G.is_clique(verts) and edge_set_of(G, verts) == F.bits
            t.expect(is_round(M, F.bits) == clique,
                     lambda: f"{M.name}: roundness of {M.fmt(F.bits)} vs clique test")
    return t.result()


def check_graphic_saturated() -> tuple:
    t = Tally()
    for G in graphs():
        M = graphic_matroid(G)
        t.expect(is_saturated(M)[0], lambda: f"{M.name} is not saturated")
    return t.result()


def check_chordal_iff_supersolvable() -> tuple:
    t = Tally()
    for G in graphs():
        M = graphic_matroid(G)
        t.expect(bool(is_chordal(G)) == is_supersolvable(M)[0],
                 lambda: f"{G.name}: chordality and supersolvability disagree")
    return t.result()


def check_rotunda_count() -> tuple:
    t = Tally()
    for M in matroids(LEMMA_ELEMENTS):
        if is_supersolvable(M)[0]:
            k = len(rotunda(M))
            t.expect(k <= M.full_rank, lambda: f"{M.name}: {k} rotunda, rank {M.full_rank}")
    return t.result()


# --- correspondence ---------------------------------------------------------------

def check_graphic_rotunda_subgraph() -> tuple:
    """Rotunda of M(G) are the clique edge sets and R(M(G)) ⊆ C_R(G)."""
    t = Tally()
    for G in chordal_graphs():
        M = graphic_matroid(G)
        cg = reduced_clique_graph(G)
        nodes = [edge_set_of(G, c) for c in cg.nodes]
        RG = rotunda_graph(M)
        if not t.expect(sorted(nodes) == sorted(R.bits for R in RG.nodes),
                        f"{G.name}: rotunda differ from clique edge sets"):
            continue
        pos = {b: k for k, b in enumerate(nodes)}
        mapped = {tuple(sorted((pos[RG.nodes[i].bits], pos[RG.nodes[j].bits])))
                  for i, j in RG.edge_set()}
        t.expect(mapped <= cg.edge_set(), f"{G.name}: R(M(G)) has an edge outside C_R(G)")
    return t.result()


def check_two_connected_identity() -> tuple:
    t = Tally()
    for G in chordal_graphs():
        if G.is_two_connected():
            res = check_rcg_equals_rotunda_graph(G)
            t.expect(res.holds, lambda: f"{G.name}: {res.message}")
    return t.result()


def check_cut_vertex_cloning() -> tuple:
    t = Tally()
    for G in chordal_graphs():
        H = two_connectivize(G)
        a, b = reduced_clique_graph(G), reduced_clique_graph(H)
        t.expect(H.is_two_connected() and bool(is_chordal(H))
                 and is_isomorphic(len(a.nodes), a.edge_set(), len(b.nodes), b.edge_set()),
                 lambda: f"{G.name}: cloned graph changes C_R")
    return t.result()


def check_compliant_graphs() -> tuple:
    t = Tally()
    for M in sss_matroids(COMPLIANCE_ELEMENTS):
        if not M.is_connected():
            continue
        G, theta = compliant_graph(M)
        rep = check_compliance(M, G, theta)
        t.expect(rep.compliant, lambda: f"{M.name}: {rep.witnesses}")
    return t.result()


def check_disjoint_union() -> tuple:
    t = Tally()
    for G in graphs(5, connected=False):
        if G.is_connected() or not is_chordal(G):
            continue
        whole = reduced_clique_graph(G)
        parts = [reduced_clique_graph(G.induced(c)) for c in G.components()]
        # maximal cliques of the components, in vertex labels
        want_nodes = sorted(tuple(P.node_names(i)) for P in parts for i in range(len(P.nodes)))
        want_edges = sorted(tuple(sorted((P.node_names(i), P.node_names(j))))
                            for P in parts for i, j in P.edge_set())
        got_nodes = sorted(tuple(whole.node_names(i)) for i in range(len(whole.nodes)))
        got_edges = sorted(tuple(sorted((whole.node_names(i), whole.node_names(j))))
                           for i, j in whole.edge_set())
        t.expect(got_nodes == want_nodes and got_edges == want_edges,
                 f"{G.name}: C_R is not the union over components")
    for M in sss_matroids(10):
        comps = [c for c in M.components() if M.r(c)]
        if len(comps) < 2:
            continue
        RG = rotunda_graph(M)
        want_nodes, want_edges = set(), set()
        for c in comps:
            sub = rotunda_graph(M.restrict(c))
            loops = M.loops
            names = [R.bits | loops for R in sub.nodes]
            want_nodes |= set(names)
            want_edges |= {tuple(sorted((names[i], names[j]))) for i, j in sub.edge_set()}
        got_nodes = {R.bits for R in RG.nodes}
        got_edges = {tuple(sorted((RG.nodes[i].bits, RG.nodes[j].bits))) for i, j in RG.edge_set()}
        t.expect(got_nodes == want_nodes and got_edges == want_edges,
                 f"{M.name}: R(M) is not the union over components")
    return t.result()


def check_roundtrip() -> tuple:
    t = Tally()
    with enumeration_limit(40):
        for G in chordal_graphs():
            t.expect(rcg_to_rotunda_graph_roundtrip(G), f"{G.name}: graph round trip fails")
    for M in sss_matroids(COMPLIANCE_ELEMENTS):
        t.expect(rcg_to_rotunda_graph_roundtrip(M), f"{M.name}: matroid round trip fails")
    return t.result()


# --- trees ---------------------------------------------------------------------------

def _square(x: int) -> int:
    return popcount(x) ** 2


def check_clique_trees() -> tuple:
    t = Tally()
    for G in chordal_graphs():
        cg = reduced_clique_graph(G)
        for sigma in (popcount, _square):
            trees = clique_trees(G, sigma)  # raises on a mismatch with max-weight trees
            t.case()
            used = set().union(*(set(ct.edges) for ct in trees)) if trees else set()
            t.expect(used == cg.edge_set(), f"{G.name}: some C_R edge lies in no clique tree")
    return t.result()


def check_rotunda_trees() -> tuple:
    t = Tally()
    for M in sss_matroids(LEMMA_ELEMENTS):
        if not M.is_connected() or len(rotunda(M)) > ROTUNDA_TREE_LIMIT:
            continue
        for sigma in (RANK, CARDINALITY):
            RG = rotunda_graph(M, sigma)
            w = RG.weights()
            trees = rotunda_trees(M, sigma)
            all_trees = list(spanning_trees(len(RG.nodes), list(w)))
            best = max((sum(w[e] for e in tr) for tr in all_trees), default=0)
            heavy = {tr for tr in all_trees if sum(w[e] for e in tr) == best}
            t.expect({rt.edges for rt in trees} == heavy,
                     f"{M.name}: rotunda trees differ from max-weight trees ({sigma.kind})")
            used = set().union(*(set(rt.edges) for rt in trees)) if trees else set()
            t.expect(used == RG.edge_set(), f"{M.name}: some R(M) edge lies in no rotunda tree")
            for rt in trees:
                t.expect(is_rotunda_tree(M, rt.edges, [R.bits for R in rt.nodes]),
                         f"{M.name}: tree fails the subtree property")
    return t.result()


def check_rotunda_graph_connectivity() -> tuple:
    t = Tally()
    for M in sss_matroids(10):
        t.expect(rotunda_graph(M).is_connected() == M.is_connected(),
                 lambda: f"{M.name}: R(M) connectivity differs from M")
    return t.result()


def check_hyperplane_rotunda_graph() -> tuple:
    """Going down a modular chain relabels cl(C*) as cl(C*) ∩ H or deletes it."""
    t = Tally()
    for M in sss_matroids(LEMMA_ELEMENTS):
        seen = set()
        for chain in modular_chains(M):
            for H, F in zip(chain.flats, chain.flats[1:]):
                if (H.bits, F.bits) in seen or F.rank < 1:
                    continue
                seen.add((H.bits, F.bits))
                t.expect(_rotunda_step_ok(M, H.bits, F.bits),
                         lambda: f"{M.name}: step {M.fmt(H.bits)} ⊂ {M.fmt(F.bits)}")
    return t.result()


def _rotunda_step_ok(M: Matroid, h: int, f: int) -> bool:
    top, low = M.restrict(f), M.restrict(h)
    R = M.cl(f & ~h)
    up = rotunda_graph(top)
    down = rotunda_graph(low)
    up_nodes = [S.bits for S in up.nodes]
    down_nodes = [S.bits for S in down.nodes]
    if R not in up_nodes:
        return False
    k = up_nodes.index(R)
    meet = R & h
    if meet in down_nodes:
        relabel = [meet if b == R else b for b in up_nodes]
        edges = {tuple(sorted((relabel[i], relabel[j]))) for i, j in up.edge_set()}
        keep = relabel
    else:
        if not any(meet & ~S == 0 and meet != S for S in down_nodes):
            return False
        keep = [b for b in up_nodes if b != R]
        edges = {tuple(sorted((up_nodes[i], up_nodes[j]))) for i, j in up.edge_set()
                 if k not in (i, j)}
    down_edges = {tuple(sorted((down_nodes[i], down_nodes[j]))) for i, j in down.edge_set()}
    return sorted(keep) == sorted(down_nodes) and edges == down_edges


def check_tree_edge_covers() -> tuple:
    t = Tally()
    for M in sss_matroids(LEMMA_ELEMENTS):
        if not M.is_connected() or len(rotunda(M)) > ROTUNDA_TREE_LIMIT:
            continue
        for rt in rotunda_trees(M):
            for e in rt.edges:
                modular_cover_of_tree_edge(M, rt, e)  # raises on failure
                t.case()
    return t.result()


# --- tree-width ------------------------------------------------------------------

def check_round_treewidth() -> tuple:
    t = Tally()
    for M in matroids(TREEWIDTH_ELEMENTS):
        if is_round(M):
            bf = brute_force_treewidth(M)
            t.expect(bf == M.full_rank, lambda: f"{M.name}: tw {bf}, rank {M.full_rank}")
    return t.result()


def check_rotunda_treewidth() -> tuple:
    t = Tally()
    for M in sss_matroids(TREEWIDTH_ELEMENTS):
        if not M.is_connected():
            continue
        bf = brute_force_treewidth(M)
        rw = rotunda_treewidth(M)
        t.expect(bf == rw, lambda: f"{M.name}: brute force {bf}, rotunda {rw}")
        if len(rotunda(M)) <= ROTUNDA_TREE_LIMIT:
            for rt in rotunda_trees(M):
                td = TreeDecomposition(rt.edges, tuple(R.bits for R in rt.nodes))
                rep = width(M, td)
                t.expect(rep.width == bf, lambda: f"{M.name}: a rotunda tree has width {rep.width}")
                t.expect(all(w == M.r(td.bags[k]) for k, w in rep.node_widths.items()),
                         f"{M.name}: node-width differs from bag rank")
    return t.result()


def check_round_flat_bound() -> tuple:
    t = Tally()
    for M in matroids(TREEWIDTH_ELEMENTS):
        lb, bf = round_flat_lower_bound(M), brute_force_treewidth(M)
        t.expect(lb <= bf, lambda: f"{M.name}: round flat of rank {lb} but tw {bf}")
    return t.result()


def check_rotunda_sandwich() -> tuple:
    t = Tally()
    for M in sss_matroids(12):
        if M.size <= TREEWIDTH_ELEMENTS or not M.is_connected():
            continue
        rw = rotunda_treewidth(M)  # also checks the rotunda tree's width
        t.expect(round_flat_lower_bound(M) <= rw, f"{M.name}: lower bound exceeds rotunda width")
    return t.result()


def check_strict_reduction(seed: int = 0, trials: int = 20) -> tuple:
    """Dropping duplicate bag entries never raises a node-width."""
    t = Tally()
    rng = random.Random(seed)
    for M in matroids(TREEWIDTH_ELEMENTS):
        if M.size == 0:
            continue
        for _ in range(trials):
            k = rng.randint(1, 5)
            edges = [(rng.randrange(v), v) for v in range(1, k)]
            bags = [0] * k
            for e in range(M.size):
                for node in rng.sample(range(k), rng.randint(1, k)):
                    bags[node] |= 1 << e
            td = TreeDecomposition(tuple(edges), tuple(bags))
            sd = strictify(td)
            t.expect(all(node_width(M, sd, v) <= node_width(M, td, v) for v in range(k)),
                     lambda: f"{M.name}: strictifying raised a node-width")
    return t.result()


def check_oracle_node_bound() -> tuple:
    """Allowing two extra (empty) nodes never lowers the brute-force width."""
    t = Tally()
    for M in matroids(4):
        base = brute_force_treewidth(M)
        more = brute_force_treewidth(M, max_nodes=M.size + 2)
        t.expect(base == more, lambda: f"{M.name}: width drops from {base} to {more}")
    return t.result()


# --- registry and runner ----------------------------------------------------------------

SUITES: dict[str, dict[str, Callable[[], tuple]]] = {
    "axioms": {
        "rank-axioms": check_rank_axioms,
        "submodular-all-pairs": check_submodular_pairs,
        "closure-axioms": check_closure_axioms,
        "flats-by-closure": check_flats_by_closure,
        "circuits-minimal": check_circuits,
        "direct-sum-rank": check_direct_sum_rank,
        "bond-matroid-dual": check_bond_matroid,
    },
    "modularity-lemmas": {
        "modular-definition": check_modular_definition,
        "hyperplane-line-criterion": check_hyperplane_criterion,
        "modular-intersection": check_modular_intersection,
        "modular-in-restriction": check_modular_in_restriction,
        "short-circuit": check_short_circuit,
        "projection-closure": check_projection_closure,
        "hyperplane-restriction-connected": check_hyperplane_restriction_connected,
        "projection-rank-one": check_projection_rank_one,
    },
    "roundness-lemmas": {
        "round-partition-agreement": check_round_partition,
        "rotunda-separation": check_rotunda_separation,
        "projection-union-round": check_projection_union_round,
        "cover-lifting": check_cover_lifting,
        "cover-restriction": check_cover_restriction,
        "round-flat-in-cocircuit-closure": check_round_flat_in_cocircuit_closure,
        "cocircuit-closure-rotunda": check_cocircuit_closure_rotunda,
        "cocircuit-closure-meet-round": check_cocircuit_closure_meet_round,
        "element-in-rotunda": check_element_in_rotunda,
    },
    "venn": {
        "fixture-profiles": check_fixture_profiles,
        "saturated-restriction": check_saturated_restriction,
        "saturated-hyperplane-cover": check_saturated_hyperplane_cover,
        "direct-sum-components": check_direct_sum_components,
        "sss-implies-c-chordal": check_sss_c_chordal,
        "graphic-round-flats": check_graphic_round_flats,
        "graphic-saturated": check_graphic_saturated,
        "chordal-iff-supersolvable": check_chordal_iff_supersolvable,
        "rotunda-count": check_rotunda_count,
    },
    "correspondence": {
        "graphic-rotunda-subgraph": check_graphic_rotunda_subgraph,
        "two-connected-identity": check_two_connected_identity,
        "cut-vertex-cloning": check_cut_vertex_cloning,
        "compliant-graphs": check_compliant_graphs,
        "disjoint-union": check_disjoint_union,
        "roundtrip": check_roundtrip,
    },
    "trees": {
        "clique-trees-max-weight": check_clique_trees,
        "rotunda-trees-max-weight": check_rotunda_trees,
        "rotunda-graph-connectivity": check_rotunda_graph_connectivity,
        "hyperplane-rotunda-graph": check_hyperplane_rotunda_graph,
        "tree-edge-covers": check_tree_edge_covers,
    },
    "treewidth": {
        "round-treewidth": check_round_treewidth,
        "rotunda-treewidth": check_rotunda_treewidth,
        "round-flat-lower-bound": check_round_flat_bound,
        "rotunda-sandwich": check_rotunda_sandwich,
        "strict-reduction": check_strict_reduction,
        "oracle-node-bound": check_oracle_node_bound,
    },
}


def run_check(suite: str, name: str) -> Outcome:
    fn = SUITES[suite][name]
    start = time.perf_counter()
    try:
        checked, failed, failures = fn()
    except AssertionError as exc:  # a TheoremViolation raised inside a helper
        checked, failed, failures = 1, 1, [f"{type(exc).__name__}: {exc}"]
    return Outcome(suite, name, checked, failed, failures, time.perf_counter() - start)


def _run_pair(pair: tuple[str, str]) -> Outcome:
    return run_check(*pair)


def run_suites(names: Iterable[str], jobs: int = 1) -> list[Outcome]:
    """Run whole suites; results come back in registry order whatever ``jobs`` is."""
    pairs = []
    for s in names:
        if s not in SUITES:
            raise KeyError(s)
        pairs.extend((s, c) for c in SUITES[s])
    if jobs <= 1:
        return [run_check(*p) for p in pairs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_pair, pairs))


def maximal_clique_edge_sets(G: Graph) -> list[int]:
    return [edge_set_of(G, c) for c in maximal_cliques(G)]
