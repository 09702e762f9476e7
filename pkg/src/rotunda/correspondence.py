"""Bridge between chordal graphs and supersolvable saturated matroids.

Covers the identity C_R(G) = R(M(G)) for 2-connected chordal graphs, the
cut-vertex cloning that makes a connected chordal graph 2-connected without
changing its reduced clique graph, and the inductive construction of a
compliant graph for a connected supersolvable saturated matroid.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .bitset import from_ids, ids, popcount, submasks
from .classification import is_supersolvable
from .errors import (
    DisconnectedError,
    EnumerationBoundError,
    NotChordalError,
    RotundaError,
    TheoremViolation,
)
from .graphs import Graph, is_chordal, maximal_cliques, reduced_clique_graph
from .matroid import DirectSum, GraphicMatroid, Matroid
from .modularity import _modular_bits, modular_flats
from .rotunda_graph import require_sss, rotunda_graph
from .roundness import round_flats, rotunda
from .trees import Edge

COMPLIANCE_ELEMENT_BOUND = 12


def graphic_matroid(G: Graph, name: str | None = None) -> GraphicMatroid:
    """M(G) with element i the i-th edge of ``G.edges``."""
    return GraphicMatroid(G.edge_labels(), vertices=G.vertices,
                          name=name or (f"M({G.name})" if G.name else None))


def edge_set_of(G: Graph, vs: int) -> int:
    """Bitset of edge indices with both ends in the vertex set ``vs``."""
    return from_ids(i for i, (u, v) in enumerate(G.edges) if vs >> u & 1 and vs >> v & 1)


# --- graph isomorphism -------------------------------------------------------

def _adjacency(n: int, edges) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def isomorphism(n1: int, edges1, n2: int, edges2) -> list[int] | None:
    """A vertex map from graph 1 onto graph 2 preserving adjacency, by backtracking."""
    e1 = {tuple(sorted(e)) for e in edges1}
    e2 = {tuple(sorted(e)) for e in edges2}
    if n1 != n2 or len(e1) != len(e2):
        return None
    a1, a2 = _adjacency(n1, e1), _adjacency(n2, e2)
    deg1 = [popcount(a) for a in a1]
    deg2 = [popcount(a) for a in a2]
    if sorted(deg1) != sorted(deg2):
        return None
    order = sorted(range(n1), key=lambda v: -deg1[v])
    image = [-1] * n1
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n1:
            return True
        v = order[k]
        for w in range(n2):
            if used >> w & 1 or deg2[w] != deg1[v]:
                continue
            if any((a1[v] >> u & 1) != (a2[w] >> image[u] & 1) for u in order[:k]):
                continue
            image[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return image if extend(0) else None


def is_isomorphic(n1: int, edges1, n2: int, edges2) -> bool:
    return isomorphism(n1, edges1, n2, edges2) is not None


# --- 2-connected chordal graphs: C_R(G) = R(M(G)) ----------------------------

def two_connectivize(G: Graph) -> Graph:
    """Add a true twin v' for each cut vertex v.

    v' is adjacent to v, to the neighbours of v, and to the twins of
    neighbouring cut vertices, so v and v' have equal closed neighbourhoods in
    the result.  Without the twin-twin edges two adjacent cut vertices would
    split their common clique.
    """
    if not G.is_connected():
        raise DisconnectedError("two_connectivize needs a connected graph")
    cuts = G.cut_vertices()
    if not cuts:
        return G
    taken = set(G.vertices)
    names = list(G.vertices)
    edges = list(G.edge_labels())
    twin: dict[int, str] = {}
    for v in cuts:
        clone = G.vertices[v] + "'"
        while clone in taken:
            clone += "'"
        taken.add(clone)
        twin[v] = clone
        names.append(clone)
    for v in cuts:
        clone = twin[v]
        edges.append((G.vertices[v], clone))
        for u in ids(G.adj[v]):
            edges.append((G.vertices[u], clone))
            if u in twin and u < v:
                edges.append((twin[u], clone))
    out = Graph(names, edges, name=f"{G.name}'" if G.name else None)
    if not out.is_two_connected():
        raise TheoremViolation(f"{G.name}: cloned graph is not 2-connected")
    if is_chordal(G) and not is_chordal(out):
        raise TheoremViolation(f"{G.name}: cloned graph of a chordal graph is not chordal")
    return out


@dataclass
class IdentityCheck:
    """Outcome of comparing C_R(G) with R(M(G)) under clique -> edge-set."""

    holds: bool
    nodes: list[int]                          # edge-set bitsets of the maximal cliques
    rcg_edges: set[tuple[int, int]] = field(default_factory=set)
    rotunda_edges: set[tuple[int, int]] = field(default_factory=set)
    message: str = ""


def check_rcg_equals_rotunda_graph(G: Graph) -> IdentityCheck:
    """Compare node and edge sets of C_R(G) and R(M(G)) via clique -> edge set."""
    if not G.is_two_connected():
        raise RotundaError(f"{G.name or 'graph'} is not 2-connected")
    if not is_chordal(G):
        raise NotChordalError(f"{G.name or 'graph'} is not chordal")
    M = graphic_matroid(G)
    cg = reduced_clique_graph(G)
    RG = rotunda_graph(M)
    cl_nodes = [edge_set_of(G, c) for c in cg.nodes]
    rot_nodes = [R.bits for R in RG.nodes]
    rcg_edges = {tuple(sorted((cl_nodes[i], cl_nodes[j]))) for i, j in cg.edge_set()}
    rot_edges = {tuple(sorted((rot_nodes[i], rot_nodes[j]))) for i, j in RG.edge_set()}
    if sorted(cl_nodes) != sorted(rot_nodes):
        return IdentityCheck(False, cl_nodes, rcg_edges, rot_edges,
                             "maximal cliques and rotunda differ")
    if rcg_edges != rot_edges:
        return IdentityCheck(False, cl_nodes, rcg_edges, rot_edges, "adjacency differs")
    return IdentityCheck(True, cl_nodes, rcg_edges, rot_edges)


# --- compliant graphs --------------------------------------------------------

@dataclass
class ComplianceMap:
    """theta: element id -> bitset of two vertices of the companion graph."""

    theta: dict[int, int]

    def image(self, x: int) -> int:
        """theta(X) for an element bitset X."""
        out = 0
        for e in ids(x):
            out |= self.theta[e]
        return out

    def preimage(self, U: int) -> int:
        """Elements whose whole pair lies in U."""
        return from_ids(e for e, pair in self.theta.items() if pair & ~U == 0)


def _vertex_names(M: Matroid, e: int) -> tuple[str, str]:
    return f"{M.labels[e]}:0", f"{M.labels[e]}:1"


def compliant_graph(M: Matroid) -> tuple[Graph, ComplianceMap]:
    """Compliant 2-connected chordal graph for a connected supersolvable saturated M.

    Built along the first modular chain: the rank-one level is a complete graph
    on two vertices per element; each later level adds two vertices per new
    element, joined to each other and to theta(cl(C*) ∩ H).  Vertices are named
    ``label:0`` and ``label:1`` and are created in ascending element order.
    """
    if not M.is_connected():
        raise DisconnectedError("compliant graphs need a connected matroid")
    require_sss(M)
    chain = is_supersolvable(M)[1]
    flats = list(chain)
    base = flats[min(1, len(flats) - 1)]
    names: list[str] = []
    vid: dict[str, int] = {}
    theta: dict[int, int] = {}
    adj: list[int] = []

    def add_pairs(elems: Sequence[int]) -> int:
        new = 0
        for e in elems:
            pair = 0
            for nm in _vertex_names(M, e):
                vid[nm] = len(names)
                names.append(nm)
                adj.append(0)
                pair |= 1 << vid[nm]
            theta[e] = pair
            new |= pair
        return new

    def join(block: int, to: int) -> None:
        for v in ids(block):
            adj[v] |= (block | to) & ~(1 << v)
        for w in ids(to & ~block):
            adj[w] |= block

    first = add_pairs(ids(base.bits))
    join(first, 0)
    for H, F in zip(flats[1:], flats[2:]):
        cstar = F.bits & ~H.bits
        R = M.cl(cstar)
        W = 0
        for e in ids(R & H.bits):
            W |= theta[e]
        Y = add_pairs(ids(cstar))
        join(Y, W)
    edges = [(names[u], names[v]) for u in range(len(names)) for v in ids(adj[u]) if u < v]
    G = Graph(names, edges, name=f"G({M.name})" if M.name else None)
    return G, ComplianceMap(theta)


@dataclass
class ComplianceReport:
    graph_ok: bool                 # G is 2-connected and chordal
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    cond_v: bool
    witnesses: dict[str, str] = field(default_factory=dict)
    bijection: dict[int, int] = field(default_factory=dict)   # rotunda index -> clique index

    @property
    def compliant(self) -> bool:
        return all((self.graph_ok, self.cond_i, self.cond_ii, self.cond_iii,
                    self.cond_iv, self.cond_v))

    def conditions(self) -> dict[str, bool]:
        return {"graph": self.graph_ok, "i": self.cond_i, "ii": self.cond_ii,
                "iii": self.cond_iii, "iv": self.cond_iv, "v": self.cond_v}


def check_compliance(M: Matroid, G: Graph, theta: ComplianceMap | dict) -> ComplianceReport:
    """Evaluate the five compliance conditions, recording a witness for each failure."""
    if M.size > COMPLIANCE_ELEMENT_BOUND:
        raise EnumerationBoundError(
            f"compliance check limited to {COMPLIANCE_ELEMENT_BOUND} elements, got {M.size}"
        )
    if not isinstance(theta, ComplianceMap):
        theta = ComplianceMap({M.element(k): G.vset(v) for k, v in theta.items()})
    th = theta.theta
    wit: dict[str, str] = {}

    graph_ok = G.is_two_connected() and bool(is_chordal(G))
    if not graph_ok:
        wit["graph"] = "companion graph is not 2-connected and chordal"

    cond_i = set(th) == set(M.elements()) and all(popcount(p) == 2 for p in th.values())
    if not cond_i:
        bad = [M.labels[e] for e in M.elements() if popcount(th.get(e, 0)) != 2]
        wit["i"] = f"elements without a 2-vertex image: {bad}"

    owners = [[e for e, p in th.items() if p >> v & 1] for v in range(G.n)]
    cond_ii = all(len(o) == 1 for o in owners)
    if not cond_ii:
        v = next(v for v, o in enumerate(owners) if len(o) != 1)
        wit["ii"] = f"vertex {G.vertices[v]} lies in {len(owners[v])} images"

    cond_iii = True
    for R in round_flats(M):
        if R.bits and not G.is_clique(theta.image(R.bits)):
            cond_iii = False
            wit["iii"] = f"image of round flat {M.fmt(R.bits)} is not a clique"
            break

    cond_iv = True
    if cond_i:
        for F in modular_flats(M):
            comps = G.components(G.all & ~theta.image(F.bits))
            for pick in submasks((1 << len(comps)) - 1):
                U = 0
                for k in ids(pick):
                    U |= comps[k]
                D = F.bits | theta.preimage(U)
                if M.cl(D) != D or not _modular_bits(M, D):
                    cond_iv = False
                    wit["iv"] = f"F={M.fmt(F.bits)} with U={list(G.names(U))} gives {M.fmt(D)}"
                    break
            if not cond_iv:
                break
    else:
        cond_iv = False
        wit["iv"] = "skipped: condition (i) fails"

    cond_v, bijection = _check_condition_v(M, G, theta, wit) if cond_i else (False, {})
    if not cond_i:
        wit["v"] = "skipped: condition (i) fails"
    return ComplianceReport(graph_ok, cond_i, cond_ii, cond_iii, cond_iv, cond_v, wit, bijection)


def _check_condition_v(M: Matroid, G: Graph, theta: ComplianceMap,
                       wit: dict[str, str]) -> tuple[bool, dict[int, int]]:
    RG = rotunda_graph(M)
    cg = reduced_clique_graph(G)
    where = {c: k for k, c in enumerate(cg.nodes)}
    bijection = {}
    for i, R in enumerate(RG.nodes):
        k = where.get(theta.image(R.bits))
        if k is None:
            wit["v"] = f"image of rotunda {M.fmt(R.bits)} is not a maximal clique"
            return False, {}
        bijection[i] = k
    if len(set(bijection.values())) != len(cg.nodes):
        wit["v"] = f"{len(RG.nodes)} rotunda but {len(cg.nodes)} maximal cliques"
        return False, bijection
    mapped = {tuple(sorted((bijection[i], bijection[j]))) for i, j in RG.edge_set()}
    if mapped != cg.edge_set():
        wit["v"] = "rotunda adjacency differs from the reduced clique graph"
        return False, bijection
    return True, bijection


# --- both directions, including disconnected inputs -------------------------

def _nonempty_components(G: Graph) -> list[Graph]:
    return [G.induced(c) for c in G.components()]


def matroid_for_graph(G: Graph) -> tuple[Matroid, list[Graph]]:
    """A supersolvable saturated matroid whose rotunda graph matches C_R(G).

    Each component is made 2-connected by cloning cut vertices and contributes
    its graphic matroid; an isolated vertex contributes a single coloop, since
    an empty direct summand would have its empty rotunda absorbed by the others.
    """
    if not is_chordal(G):
        raise NotChordalError(f"{G.name or 'graph'} is not chordal")
    parts = []
    for H in _nonempty_components(G) or [G]:
        if H.n == 1:
            v = H.vertices[0]
            H = Graph([v, v + "'"], [(v, v + "'")])
        parts.append(two_connectivize(H))
    if len(parts) == 1:
        return graphic_matroid(parts[0], name=G.name and f"M({G.name}')"), parts
    mats = [graphic_matroid(P) for P in parts]
    return DirectSum(mats, name=G.name and f"M({G.name}')"), parts


def graph_for_matroid(M: Matroid) -> tuple[Graph, list[tuple[Matroid, Graph, ComplianceMap]]]:
    """Disjoint union of compliant graphs, one per non-loop component of M."""
    require_sss(M)
    comps = [c for c in M.components() if M.r(c)] or [M.ground]
    pieces = []
    names: list[str] = []
    edges: list[tuple[str, str]] = []
    for c in comps:
        N = M.restrict(c).standalone() if c != M.ground else M
        G, th = compliant_graph(N)
        pieces.append((N, G, th))
        names.extend(G.vertices)
        edges.extend(G.edge_labels())
    return Graph(names, edges, name=f"G({M.name})" if M.name else None), pieces


def _rcg_shape(G: Graph) -> tuple[int, set[Edge]]:
    cg = reduced_clique_graph(G)
    return len(cg.nodes), cg.edge_set()


def _rotunda_shape(M: Matroid) -> tuple[int, set[Edge]]:
    RG = rotunda_graph(M)
    return len(RG.nodes), RG.edge_set()


def rcg_to_rotunda_graph_roundtrip(obj: Graph | Matroid) -> bool:
    """Cross to the other side and compare the two graphs up to isomorphism.

    A chordal graph G is sent to a matroid M with R(M) ≅ C_R(G); a supersolvable
    saturated matroid M is sent to a chordal graph G with C_R(G) ≅ R(M).
    """
    if isinstance(obj, Graph):
        M, _ = matroid_for_graph(obj)
        a, b = _rcg_shape(obj), _rotunda_shape(M)
    else:
        G, _ = graph_for_matroid(obj)
        a, b = _rotunda_shape(obj), _rcg_shape(G)
    return is_isomorphic(a[0], a[1], b[0], b[1])


def rotunda_are_clique_edge_sets(G: Graph) -> bool:
    """Rotunda of M(G) are exactly the edge sets of the maximal cliques (G connected)."""
    M = graphic_matroid(G)
    cliques = {edge_set_of(G, c) for c in maximal_cliques(G)}
    return cliques == {R.bits for R in rotunda(M)}


__all__ = [
    "ComplianceMap",
    "ComplianceReport",
    "IdentityCheck",
    "check_compliance",
    "check_rcg_equals_rotunda_graph",
    "compliant_graph",
    "edge_set_of",
    "graph_for_matroid",
    "graphic_matroid",
    "is_isomorphic",
    "isomorphism",
    "matroid_for_graph",
    "rcg_to_rotunda_graph_roundtrip",
    "rotunda_are_clique_edge_sets",
    "two_connectivize",
]
