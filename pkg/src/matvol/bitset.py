"""Subsets of a ground set [n] encoded as integer bitmasks.

Element i (1-based) belongs to a mask iff bit i-1 is set.  All 2^n-indexed
tables in the package are keyed by these masks; cardinality, union,
intersection and complement are single word operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a mask, ascending."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subset_sort_key(mask: int) -> tuple[int, int]:
    """Orders subsets by cardinality, then numeric mask value."""
    return (mask.bit_count(), mask)


def format_subset(mask: int) -> str:
    """Render a mask like ``{1,3,4}``; the empty set renders as ``{}``."""
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"
