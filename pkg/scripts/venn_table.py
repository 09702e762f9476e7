"""Print (supersolvable, saturated, C-chordal) for the named fixtures and tally the catalog."""
import argparse
from collections import Counter

from rotunda import classify, named_fixtures
from rotunda.catalog import catalog


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print(f"{'matroid':12} ss    sat   c-chordal")
    for M in named_fixtures():
        ss, sat, cc = classify(M).as_tuple()
        print(f"{M.name:12} {ss!s:5} {sat!s:5} {cc!s:5}")
    tally = Counter(classify(M).as_tuple() for M in catalog(args.max_n))
    print(f"\ncatalog (graphs up to {args.max_n} vertices):")
    for prof, k in sorted(tally.items(), reverse=True):
        print(f"  {''.join('T' if b else 'F' for b in prof)}  {k}")


if __name__ == "__main__":
    main()
