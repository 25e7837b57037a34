"""Published choice numbers of complete multipartite families.

These values are trusted, not recomputed.  Families are matched on the
part sizes sorted in descending order; ``k`` is the number of parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence


@dataclass(frozen=True)
class OracleEntry:
    family: str
    parameter: str
    source: str
    match: Callable[[tuple[int, ...]], int | None]
    value: Callable[[int], tuple[int, int | None]]

    def evaluate(self, parts: Sequence[int]) -> tuple[int, int | None] | None:
        """``(lower, upper)`` for ``parts`` if the family matches, else ``None``."""
        k = self.match(tuple(sorted(parts, reverse=True)))
        if k is None:
            return None
        return self.value(k)


def _head_then_twos(head: tuple[int, ...], min_k: int) -> Callable[[tuple[int, ...]], int | None]:
    def match(parts):
        tail = parts[len(head):]
        if parts[:len(head)] != head or any(p != 2 for p in tail):
            return None
        return len(parts) if len(parts) >= min_k else None
    return match


def _big_head_then_twos(parts):
    if len(parts) < 2 or parts[0] < 5 or any(p != 2 for p in parts[1:]):
        return None
    return len(parts)


ORACLE = (
    OracleEntry("K(2,...,2)", "ch", "erdos-rubin-taylor",
                _head_then_twos((), 2), lambda k: (k, k)),
    OracleEntry("K(3,3,2,...,2), k>2", "ch", "gravier-maffray",
                _head_then_twos((3, 3), 3), lambda k: (k, k)),
    OracleEntry("K(3,3)", "ch", "literature: ch(K(3,3))=3",
                lambda p: 2 if p == (3, 3) else None, lambda k: (3, 3)),
    OracleEntry("K(3,2,...,2)", "ch", "gravier-maffray via induced subgraph; k=2 from literature",
                _head_then_twos((3,), 2), lambda k: (k, k)),
    OracleEntry("K(4,2,...,2)", "ch", "enomoto-et-al",
                _head_then_twos((4,), 2), lambda k: (k, k) if k % 2 else (k + 1, k + 1)),
    OracleEntry("K(5,2,...,2)", "ch", "enomoto-et-al",
                _head_then_twos((5,), 2), lambda k: (k + 1, k + 1)),
    OracleEntry("K(m,2,...,2), m>=5", "ch", "enomoto-et-al via induced K(5,2,...,2)",
                _big_head_then_twos, lambda k: (k + 1, None)),
)


def lookup(parts: Sequence[int], parameter: str = "ch") -> list[tuple[OracleEntry, int, int | None]]:
    """Every matching entry with its ``(lower, upper)`` values."""
    out = []
    for entry in ORACLE:
        if entry.parameter != parameter:
            continue
        val = entry.evaluate(parts)
        if val is not None:
            out.append((entry, *val))
    return out
