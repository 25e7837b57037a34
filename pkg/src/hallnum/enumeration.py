"""List assignments up to renaming of colours.

An assignment is determined, up to renaming, by the multiset of its colour
classes: for each colour, the set of vertices whose list contains it.
Classes are ordered by (size descending, bitmask ascending) and a multiset
is written as the non-decreasing sequence of class positions, which gives
one canonical representative per renaming orbit and a lexicographic
generation order.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Graph, bits, popcount
from .lists import ListAssignment


def class_order(n: int) -> list[int]:
    return sorted(range(1, 1 << n), key=lambda m: (-popcount(m), m))


def iter_class_multisets(n: int, low: int | Sequence[int], high: int | Sequence[int] | None = None,
                         first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Multisets of nonempty vertex classes covering each vertex between ``low`` and ``high`` times.

    Yields class-mask tuples in canonical (lexicographic) order.  ``first``
    pins the position of the first class, which partitions the space.
    """
    lo = [low] * n if isinstance(low, int) else list(low)
    hi = lo if high is None else ([high] * n if isinstance(high, int) else list(high))
    order = class_order(n)
    count = [0] * n
    chosen: list[int] = []
    vbits = [1 << v for v in range(n)]

    def open_mask() -> int:
        return sum(vbits[v] for v in range(n) if count[v] < hi[v])

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        if all(count[v] >= lo[v] for v in range(n)):
            yield tuple(chosen)
        avail = open_mask()
        if not avail:
            return
        stop = len(order) if first is None or chosen else first + 1
        for pos in range(start, stop):
            m = order[pos]
            if m & ~avail:
                continue
            if first is not None and not chosen and pos != first:
                continue
            vs = bits(m)
            for v in vs:
                count[v] += 1
            chosen.append(m)
            yield from rec(pos)
            chosen.pop()
            for v in vs:
                count[v] -= 1

    yield from rec(0 if first is None else first)


def to_assignment(g: Graph, classes: Sequence[int], prefix: str = "c") -> ListAssignment:
    """Realise a class multiset with colours ``c0, c1, ...`` in class order."""
    lists: list[list[str]] = [[] for _ in g.vertices]
    for i, m in enumerate(classes):
        for v in bits(m):
            lists[v].append(f"{prefix}{i}")
    return ListAssignment(g, tuple(tuple(lst) for lst in lists))


def canonical_classes(L: ListAssignment) -> tuple[int, ...]:
    """Canonical class multiset of an explicit assignment."""
    order = {m: i for i, m in enumerate(class_order(L.graph.n))}
    return tuple(sorted(L.supports().values(), key=order.__getitem__))
