"""JSON and DOT input/output.

Matroid files carry a ``type`` key (graphic, uniform, linear, circuits, bases,
direct_sum); graph files carry ``vertices`` and ``edges`` (optionally
``"type": "graph"``).  All writers sort keys so output is byte-stable.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .bitset import ids
from .correspondence import ComplianceMap
from .errors import InputError, RotundaError
from .graphs import CliqueGraph, CliqueTree, Graph
from .matroid import (
    BasisMatroid,
    CircuitMatroid,
    DirectSum,
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    UniformMatroid,
)
from .rotunda_graph import RotundaGraph, RotundaTree
from .treewidth import TreeDecomposition, WidthReport

MATROID_TYPES = ("graphic", "uniform", "linear", "circuits", "bases", "direct_sum")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --- parsing -----------------------------------------------------------------

def _field(d: dict, key: str, where: str, kind: type | tuple[type, ...]):
    if key not in d:
        raise InputError(f"missing field {key!r}", where)
    v = d[key]
    if not isinstance(v, kind) or isinstance(v, bool):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise InputError(f"field {key!r} must be {names}", where)
    return v


def _label_lists(raw: list, where: str) -> list[list[str]]:
    out = []
    for k, item in enumerate(raw):
        if not isinstance(item, list):
            raise InputError("expected a list of element labels", f"{where}[{k}]")
        out.append([str(x) for x in item])
    return out


def _opt_labels(d: dict, where: str) -> list[str] | None:
    if "elements" not in d:
        return None
    return [str(x) for x in _field(d, "elements", where, list)]


def matroid_from_dict(d: dict, where: str = "$") -> Matroid:
    if not isinstance(d, dict):
        raise InputError("expected a JSON object", where)
    kind = d.get("type")
    if kind not in MATROID_TYPES:
        raise InputError(f"field 'type' must be one of {', '.join(MATROID_TYPES)}", where)
    name = d.get("name")
    labels = _opt_labels(d, where)
    try:
        if kind == "graphic":
            edges = _field(d, "edges", where, list)
            pairs = []
            for k, e in enumerate(edges):
                if not isinstance(e, list) or len(e) != 2:
                    raise InputError("each edge must be a two-element list", f"{where}.edges[{k}]")
                pairs.append((str(e[0]), str(e[1])))
            verts = d.get("vertices")
            return GraphicMatroid(pairs, vertices=[str(v) for v in verts] if verts else None,
                                  labels=labels, name=name)
        if kind == "uniform":
            return UniformMatroid(_field(d, "rank", where, int), _field(d, "size", where, int),
                                  labels=labels, name=name)
        if kind == "linear":
            matrix = _field(d, "matrix", where, list)
            for k, row in enumerate(matrix):
                if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
                    raise InputError("matrix rows must be lists of integers",
                                     f"{where}.matrix[{k}]")
            return LinearMatroid(matrix, field=_field(d, "field", where, int),
                                 labels=labels, name=name)
        if kind == "circuits":
            cs = _label_lists(_field(d, "circuits", where, list), f"{where}.circuits")
            return CircuitMatroid(cs, elements=labels, name=name)
        if kind == "bases":
            bs = _label_lists(_field(d, "bases", where, list), f"{where}.bases")
            return BasisMatroid(bs, elements=labels, name=name)
        parts = _field(d, "parts", where, list)
        return DirectSum([matroid_from_dict(p, f"{where}.parts[{k}]") for k, p in enumerate(parts)],
                         name=name)
    except InputError:
        raise
    except RotundaError as exc:
        raise InputError(str(exc), where) from exc


def graph_from_dict(d: dict, where: str = "$") -> Graph:
    if not isinstance(d, dict):
        raise InputError("expected a JSON object", where)
    verts = [str(v) for v in _field(d, "vertices", where, list)]
    edges = []
    for k, e in enumerate(_field(d, "edges", where, list)):
        if not isinstance(e, list) or len(e) != 2:
            raise InputError("each edge must be a two-element list", f"{where}.edges[{k}]")
        edges.append((str(e[0]), str(e[1])))
    try:
        return Graph(verts, edges, name=d.get("name"))
    except RotundaError as exc:
        raise InputError(str(exc), where) from exc


def is_graph_dict(d: Any) -> bool:
    return isinstance(d, dict) and (d.get("type") == "graph"
                                    or ("type" not in d and "vertices" in d))


def object_from_dict(d: Any) -> Matroid | Graph:
    return graph_from_dict(d) if is_graph_dict(d) else matroid_from_dict(d)


def loads(text: str) -> Matroid | Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
    return object_from_dict(data)


def load(path: str | Path) -> Matroid | Graph:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), str(p)) from exc
    return loads(text)


def to_dict(obj: Matroid | Graph) -> dict:
    if isinstance(obj, Graph):
        return {"type": "graph", **obj.to_dict()}
    return obj.to_dict()


def dump(obj: Matroid | Graph, path: str | Path) -> None:
    Path(path).write_text(dumps(to_dict(obj)), encoding="utf-8")


# --- reports -----------------------------------------------------------------

def _names(M: Matroid, x: int) -> list[str]:
    return [M.labels[e] for e in ids(x)]


def rotunda_graph_report(RG: RotundaGraph) -> dict:
    M = RG.matroid
    return {
        "nodes": [{"rank": R.rank, "elements": _names(M, R.bits)} for R in RG.nodes],
        "edges": [{"i": e.i, "j": e.j, "weight": e.weight,
                   "cover": [_names(M, e.cover.first.bits), _names(M, e.cover.second.bits)]}
                  for e in RG.edges],
        "weighting": RG.weighting.kind,
    }


def clique_graph_report(cg: CliqueGraph) -> dict:
    G = cg.graph
    return {
        "nodes": [list(G.names(c)) for c in cg.nodes],
        "edges": [{"i": i, "j": j, "weight": w} for i, j, w in cg.edges],
    }


def width_report(M: Matroid, td: TreeDecomposition, rep: WidthReport) -> dict:
    return {
        "tree": [list(e) for e in td.edges],
        "bags": {str(t): _names(M, b) for t, b in enumerate(td.bags)},
        "node_widths": {str(t): w for t, w in rep.node_widths.items()},
        "width": rep.width,
    }


def rotunda_tree_report(M: Matroid, rt: RotundaTree) -> dict:
    return {"tree": [list(e) for e in rt.edges],
            "bags": {str(t): _names(M, R.bits) for t, R in enumerate(rt.nodes)}}


def compliant_graph_dict(M: Matroid, G: Graph, theta: ComplianceMap) -> dict:
    d = {"type": "graph", **G.to_dict()}
    d["theta"] = {M.labels[e]: list(G.names(pair)) for e, pair in sorted(theta.theta.items())}
    return d


def compliant_graph_from_dict(M: Matroid, d: dict) -> tuple[Graph, ComplianceMap]:
    G = graph_from_dict(d)
    raw = _field(d, "theta", "$", dict)
    theta = {}
    for label, pair in raw.items():
        if not isinstance(pair, list):
            raise InputError("theta values must be vertex lists", f"$.theta.{label}")
        try:
            theta[M.element(label)] = G.vset(pair)
        except RotundaError as exc:
            raise InputError(str(exc), f"$.theta.{label}") from exc
    return G, ComplianceMap(theta)


# --- DOT -----------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(name: str, nodes: list[tuple[str, str]], edges: list[tuple[str, str, dict[str, str]]]) -> str:
    lines = [f"graph {_quote(name)} {{"]
    for nid, label in nodes:
        lines.append(f"  {nid} [label={_quote(label)}];")
    for a, b, attrs in edges:
        attr = ", ".join(f"{k}={_quote(v)}" for k, v in attrs.items())
        lines.append(f"  {a} -- {b} [{attr}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _set_label(xs: list[str]) -> str:
    return "{" + ",".join(xs) + "}"


def rotunda_graph_dot(RG: RotundaGraph, tree_edges=None) -> str:
    M = RG.matroid
    nodes = [(f"R{i}", _set_label(_names(M, R.bits))) for i, R in enumerate(RG.nodes)]
    keep = None if tree_edges is None else {tuple(e) for e in tree_edges}
    edges = []
    for e in RG.edges:
        if keep is not None and (e.i, e.j) not in keep:
            continue
        tip = (f"{_set_label(_names(M, e.cover.first.bits))} | "
               f"{_set_label(_names(M, e.cover.second.bits))}")
        edges.append((f"R{e.i}", f"R{e.j}", {"label": f"σ={e.weight}", "tooltip": tip}))
    return _dot(M.name or "R(M)", nodes, edges)


def clique_graph_dot(cg: CliqueGraph, tree_edges=None, name: str | None = None) -> str:
    G = cg.graph
    nodes = [(f"C{i}", _set_label(list(G.names(c)))) for i, c in enumerate(cg.nodes)]
    keep = None if tree_edges is None else {tuple(e) for e in tree_edges}
    edges = [(f"C{i}", f"C{j}", {"label": f"σ={w}"}) for i, j, w in cg.edges
             if keep is None or (i, j) in keep]
    return _dot(name or G.name or "C_R(G)", nodes, edges)


def clique_tree_dot(cg: CliqueGraph, ct: CliqueTree) -> str:
    return clique_graph_dot(cg, ct.edges, name=f"{cg.graph.name or 'G'} clique tree")


def graph_dot(G: Graph) -> str:
    nodes = [(f"v{i}", v) for i, v in enumerate(G.vertices)]
    return _dot(G.name or "G", nodes, [(f"v{u}", f"v{v}", {}) for u, v in G.edges])

