"""Brute-force tree-width against rank, rotunda ranks and the round-flat bound."""
import argparse
import time

from rotunda import brute_force_treewidth, is_round, is_sss, rotunda_treewidth
from rotunda.catalog import catalog
from rotunda.treewidth import round_flat_lower_bound


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-elements", type=int, default=6)
    args = ap.parse_args()
    print(f"{'matroid':36} |E|  r  round  lb  tw  rotunda")
    start = time.perf_counter()
    for M in catalog(6, max_elements=args.max_elements):
        tw = brute_force_treewidth(M)
        rot = rotunda_treewidth(M) if M.is_connected() and is_sss(M) else "-"
        print(f"{M.name:36} {M.size:3} {M.full_rank:2}  {is_round(M)!s:5}  "
              f"{round_flat_lower_bound(M):2}  {tw:2}  {rot}")
    print(f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
