"""Element subsets as Python ints.

Bit ``i`` set means element ``i`` is in the subset.  Everything in the
package passes subsets around in this form.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator


def popcount(x: int) -> int:
    return x.bit_count()


def from_ids(ids: Iterable[int]) -> int:
    out = 0
    for i in ids:
        out |= 1 << i
    return out


def ids(x: int) -> list[int]:
    """Set bit positions in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def lowest(x: int) -> int:
    """Index of the lowest set bit; ``x`` must be non-zero."""
    return (x & -x).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
