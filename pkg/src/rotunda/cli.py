"""Command-line entry point: ``rotunda analyze | verify | export | catalog-list``.

Exit codes: 0 success, 1 verification failure, 2 input or hypothesis error,
3 size-bound refusal.
"""
from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Sequence
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import catalog as cat
from . import io
from .classification import classify, is_sss
from .correspondence import (
    check_compliance,
    check_rcg_equals_rotunda_graph,
    compliant_graph,
    graph_for_matroid,
    graphic_matroid,
    rotunda_are_clique_edge_sets,
)
from .errors import EnumerationBoundError, InputError, PreconditionError, RotundaError
from .graphs import Graph, clique_trees, graph_tree_width, is_chordal, maximal_cliques, reduced_clique_graph
from .matroid import Matroid, enumeration_bound, enumeration_limit
from .rotunda_graph import max_weight_rotunda_tree, rotunda_graph
from .roundness import rotunda
from .treewidth import (
    BRUTE_FORCE_ELEMENTS,
    TreeDecomposition,
    brute_force_treewidth,
    rotunda_treewidth,
    round_flat_lower_bound,
    width,
)
from .verify import SUITES, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3
EXPORTS = ("rotunda-graph", "rcg", "clique-tree", "rotunda-tree", "compliant-graph")


@dataclass
class AnalysisReport:
    input: str
    kind: str
    summary: dict
    timing: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return io.dumps(asdict(self))


def _read(source: str) -> Matroid | Graph:
    """A JSON file, or ``@name`` for a catalog matroid."""
    if source.startswith("@"):
        try:
            return cat.by_name(source[1:])
        except KeyError:
            raise InputError(f"no catalog entry named {source[1:]!r}") from None
    return io.load(source)


def _names(M: Matroid, x: int) -> list[str]:
    return [M.labels[e] for e in sorted(range(M.size)) if x >> e & 1]


def analyze_matroid(M: Matroid) -> dict:
    prof = classify(M)
    out: dict = {
        "elements": list(M.labels),
        "rank": M.full_rank,
        "connected": M.is_connected(),
        "profile": {"supersolvable": prof.supersolvable, "saturated": prof.saturated,
                    "c_chordal": prof.c_chordal},
        "rotunda": [_names(M, R.bits) for R in rotunda(M)],
        "round_flat_lower_bound": round_flat_lower_bound(M),
    }
    if prof.chain is not None:
        out["modular_chain"] = [_names(M, F.bits) for F in prof.chain]
    if prof.unsaturated_witness is not None:
        out["round_non_modular_flat"] = _names(M, prof.unsaturated_witness.bits)
    if prof.chordless_circuit is not None:
        out["chordless_circuit"] = _names(M, prof.chordless_circuit)
    if prof.supersolvable and prof.saturated:
        out["rotunda_graph"] = io.rotunda_graph_report(rotunda_graph(M))
        if M.is_connected():
            rt = max_weight_rotunda_tree(M)
            td = TreeDecomposition(rt.edges, tuple(R.bits for R in rt.nodes))
            out["rotunda_tree"] = io.width_report(M, td, width(M, td))
            out["treewidth"] = rotunda_treewidth(M)
    if M.size <= BRUTE_FORCE_ELEMENTS:
        out["treewidth_brute_force"] = brute_force_treewidth(M)
    return out


def analyze_graph(G: Graph) -> dict:
    ch = is_chordal(G)
    out: dict = {
        "vertices": list(G.vertices),
        "edges": [list(e) for e in G.edge_labels()],
        "connected": G.is_connected(),
        "chordal": bool(ch),
        "maximal_cliques": [list(G.names(c)) for c in maximal_cliques(G)],
    }
    if not ch:
        out["chordless_cycle"] = list(G.names(sum(1 << v for v in ch.cycle)))
        return out
    cg = reduced_clique_graph(G)
    out["reduced_clique_graph"] = io.clique_graph_report(cg)
    out["treewidth_bag_size"] = graph_tree_width(G)
    if G.is_connected() and G.n:
        ct = clique_trees(G)[0]
        out["clique_tree"] = [list(e) for e in ct.edges]
    check: dict = {"rotunda_are_clique_edge_sets": rotunda_are_clique_edge_sets(G)}
    if G.is_two_connected() and G.n:
        check["rcg_equals_rotunda_graph"] = check_rcg_equals_rotunda_graph(G).holds
    out["graphic_cross_check"] = check
    return out


def cmd_analyze(args) -> int:
    obj = _read(args.path)
    start = time.perf_counter()
    if isinstance(obj, Graph):
        rep = AnalysisReport(args.path, "graph", analyze_graph(obj))
    else:
        rep = AnalysisReport(args.path, "matroid", analyze_matroid(obj))
    if not args.no_timing:
        rep.timing = {"seconds": round(time.perf_counter() - start, 4)}
    sys.stdout.write(rep.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if "all" in args.suites else args.suites
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise InputError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)} or all")
    outcomes = run_suites(names, jobs=args.jobs)
    for o in outcomes:
        print(o.line())
        for f in o.failures:
            print(f"    counterexample: {f}")
    bad = sum(not o.ok for o in outcomes)
    print(f"{len(outcomes) - bad}/{len(outcomes)} checks passed")
    return EXIT_OK if bad == 0 else EXIT_VERIFY


def _as_matroid(obj: Matroid | Graph) -> Matroid:
    return graphic_matroid(obj, name=obj.name and f"M({obj.name})") if isinstance(obj, Graph) else obj


def _as_graph(obj: Matroid | Graph) -> Graph:
    return obj if isinstance(obj, Graph) else graph_for_matroid(obj)[0]


def export(obj: Matroid | Graph, what: str, fmt: str) -> str:
    if what == "rotunda-graph":
        RG = rotunda_graph(_as_matroid(obj))
        return io.rotunda_graph_dot(RG) if fmt == "dot" else io.dumps(io.rotunda_graph_report(RG))
    if what == "rotunda-tree":
        M = _as_matroid(obj)
        rt = max_weight_rotunda_tree(M)
        if fmt == "dot":
            return io.rotunda_graph_dot(rotunda_graph(M), rt.edges)
        return io.dumps(io.rotunda_tree_report(M, rt))
    G = _as_graph(obj)
    if what == "rcg":
        cg = reduced_clique_graph(G)
        return io.clique_graph_dot(cg) if fmt == "dot" else io.dumps(io.clique_graph_report(cg))
    if what == "clique-tree":
        cg = reduced_clique_graph(G)
        ct = clique_trees(G)[0]
        if fmt == "dot":
            return io.clique_tree_dot(cg, ct)
        return io.dumps({**io.clique_graph_report(cg), "tree": [list(e) for e in ct.edges]})
    # compliant-graph
    if isinstance(obj, Graph):
        raise InputError("compliant-graph needs a matroid input")
    G, theta = compliant_graph(obj)
    rep = check_compliance(obj, G, theta)
    if not rep.compliant:
        raise PreconditionError(f"compliance check failed: {rep.conditions()}")
    return io.graph_dot(G) if fmt == "dot" else io.dumps(io.compliant_graph_dict(obj, G, theta))


def cmd_export(args) -> int:
    text = export(_read(args.path), args.what, "dot" if args.dot else "json")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_catalog_list(args) -> int:
    for M in cat.catalog(args.max_n, max_elements=args.max_elements):
        prof = "".join("T" if b else "F" for b in classify(M).as_tuple())
        sss = "sss" if is_sss(M) else "   "
        print(f"{M.name:32} |E|={M.size:<3} r={M.full_rank:<2} {prof} {sss}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rotunda", description=__doc__.splitlines()[0])
    p.add_argument("--max-elements", type=int, default=None,
                   help="enumeration bound (overrides ROTUNDA_MAX_ELEMENTS)")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a matroid or graph and report its structures")
    a.add_argument("path", help="JSON file, or @name for a catalog matroid")
    a.add_argument("--no-timing", action="store_true", help="omit timing for byte-stable output")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run property suites over the catalog")
    v.add_argument("suites", nargs="+", metavar="suite", help=f"{', '.join(SUITES)} or all")
    v.add_argument("--jobs", "-j", type=int, default=1, help="parallel worker processes")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="write a derived structure as DOT or JSON")
    e.add_argument("path")
    e.add_argument("what", choices=EXPORTS)
    fmt = e.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    e.add_argument("-o", "--output", help="write here instead of stdout")
    e.set_defaults(func=cmd_export)

    c = sub.add_parser("catalog-list", help="list catalog matroids with their profiles")
    c.add_argument("--max-n", type=int, default=5, help="largest graph order in the corpus")
    c.add_argument("--max-elements", type=int, default=None, dest="catalog_max_elements")
    c.set_defaults(func=cmd_catalog_list)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    bound = args.max_elements if args.max_elements is not None else enumeration_bound()
    if args.command == "catalog-list":
        args.max_elements = args.catalog_max_elements
    try:
        with enumeration_limit(bound):
            return args.func(args)
    except EnumerationBoundError as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except PreconditionError as exc:
        print(f"error [{exc.condition}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RotundaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
