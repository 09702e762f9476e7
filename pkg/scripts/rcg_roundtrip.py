"""Send chordal graphs to matroids and supersolvable saturated matroids to graphs, and back."""
import argparse

from rotunda import enumeration_limit, graph_catalog, is_chordal, is_sss
from rotunda.catalog import catalog
from rotunda.correspondence import rcg_to_rotunda_graph_roundtrip


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    graphs = [G for G in graph_catalog(args.max_n) if is_chordal(G)]
    with enumeration_limit(40):
        ok_g = sum(rcg_to_rotunda_graph_roundtrip(G) for G in graphs)
    mats = [M for M in catalog(args.max_n, max_elements=10) if is_sss(M)]
    ok_m = sum(rcg_to_rotunda_graph_roundtrip(M) for M in mats)
    print(f"chordal graphs: {ok_g}/{len(graphs)} round trips agree")
    print(f"supersolvable saturated matroids: {ok_m}/{len(mats)} round trips agree")


if __name__ == "__main__":
    main()
