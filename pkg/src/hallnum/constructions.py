"""Witness list assignments on complete multipartite graphs and a verifier for them.

Each builder returns ``(graph, assignment)``.  The assignments satisfy
Hall's condition, have no proper coloring, and have a large minimum list
size, so each one certifies a lower bound on the Hall number.

Colour naming is fixed: the shared block ``c1..c(k-2)`` on ``K(2,...,2)``;
two disjoint blocks ``p1..p(k-2)`` and ``q1..q(k-2)`` on ``K(4,2,...,2)``;
literal tokens ``0``, ``a``, ``b``, ``c``, ``1``, ``2``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, complete_multipartite
from .lists import HallReport, ListAssignment, check_hall_exhaustive, check_hall_shortcut, hall_sum
from .solver import Coloring, find_coloring

NAMES = ("k22", "k2k", "k4odd", "k422")


def k22_instance() -> tuple[Graph, ListAssignment]:
    """Four-cycle ``K(2,2)`` with lists ``{a,b}, {c}, {a,c}, {b,c}``.

    Parts are ``{u1, v1}`` and ``{u2, v2}``; ``v1`` must take ``c``, which
    forces ``u2 = a`` and ``v2 = b`` and leaves nothing for ``u1``.
    """
    g = complete_multipartite([2, 2])
    L = ListAssignment.from_mapping(g, {
        "u1": ("a", "b"), "v1": ("c",), "u2": ("a", "c"), "v2": ("b", "c"),
    })
    return g, L


def k2k_instance(k: int) -> tuple[Graph, ListAssignment]:
    """Assignment on ``K(2,...,2)`` with ``k >= 3`` parts and lists of size ``>= k-1``."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k} (use k22_instance for k=2)")
    g = complete_multipartite([2] * k)
    A = tuple(f"c{i}" for i in range(1, k - 1))
    lists = {
        "u1": A + ("a", "b"),
        "v1": A + ("b", "c"),
        f"u{k}": A + ("c",),
    }
    for i in range(2, k):
        lists[f"u{i}"] = A + ("a",)
    for i in range(2, k + 1):
        lists[f"v{i}"] = A + ("b",)
    return g, ListAssignment.from_mapping(g, lists)


def _split(block: Sequence[str], first: Sequence[str] | None, half: int) -> tuple[tuple, tuple]:
    if first is None:
        first = block[:half]
    first = tuple(first)
    if len(first) != half or len(set(first)) != half or not set(first) <= set(block):
        raise ValueError(f"first half must be {half} distinct colours from {list(block)}")
    rest = tuple(c for c in block if c not in first)
    return first, rest + ("0",)


def k4odd_instance(k: int, a1: Sequence[str] | None = None,
                   b1: Sequence[str] | None = None) -> tuple[Graph, ListAssignment]:
    """Assignment on ``K(4,2,...,2)`` (``k`` parts, ``k`` odd) with all lists of size ``k-1``.

    ``a1``/``b1`` pick the ``(k-1)/2`` colours of ``p*``/``q*`` forming the
    halves without ``0``; by default the first ones.  For ``k = 3`` the
    deletion of ``x3`` is not colorable, so only the exhaustive Hall audit
    settles Hall's condition.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and at least 3, got {k}")
    g = complete_multipartite([4] + [2] * (k - 1))
    C1 = tuple(f"p{i}" for i in range(1, k - 1))
    C2 = tuple(f"q{i}" for i in range(1, k - 1))
    half = (k - 1) // 2
    A1, A2 = _split(C1, a1, half)
    B1, B2 = _split(C2, b1, half)
    lists = {
        "u2": C1 + ("0",),
        "v2": C2 + ("0",),
        "x1": A1 + B1,
        "x2": A1 + B2,
        "x3": A2 + B1,
        "x4": A2 + B2 + ("a",),
    }
    for i in range(3, k + 1):
        lists[f"u{i}"] = C1 + ("a",)
        lists[f"v{i}"] = C2 + ("b",)
    return g, ListAssignment.from_mapping(g, lists)


def k422_instance() -> tuple[Graph, ListAssignment]:
    """``K(4,2,2)`` assignment whose every single-vertex deletion is colorable."""
    g = complete_multipartite([4, 2, 2])
    L = ListAssignment.from_mapping(g, {
        "u2": ("1", "0"), "v2": ("2", "0", "c"),
        "u3": ("1", "a"), "v3": ("2", "b"),
        "x1": ("1", "2"), "x2": ("1", "0"), "x3": ("0", "a"), "x4": ("b", "c"),
    })
    return g, L


# Colorings of each G - v of k422_instance, written out by hand.
K422_DELETION_COLORINGS = {
    "u2": {"v2": "2", "u3": "a", "v3": "b", "x1": "1", "x2": "0", "x3": "0", "x4": "c"},
    "v2": {"u2": "1", "u3": "a", "v3": "b", "x1": "2", "x2": "0", "x3": "0", "x4": "c"},
    "u3": {"u2": "0", "v2": "0", "v3": "b", "x1": "1", "x2": "1", "x3": "a", "x4": "c"},
    "v3": {"u2": "1", "v2": "c", "u3": "a", "x1": "2", "x2": "0", "x3": "0", "x4": "b"},
    "x1": {"u2": "1", "v2": "2", "u3": "a", "v3": "b", "x2": "0", "x3": "0", "x4": "c"},
    "x2": {"u2": "0", "v2": "0", "u3": "1", "v3": "b", "x1": "2", "x3": "a", "x4": "c"},
    "x3": {"u2": "0", "v2": "0", "u3": "a", "v3": "b", "x1": "1", "x2": "1", "x4": "c"},
    "x4": {"u2": "1", "v2": "c", "u3": "a", "v3": "b", "x1": "2", "x2": "0", "x3": "0"},
}


@dataclass(frozen=True)
class ConstructionSpec:
    name: str
    k: int | None = None

    def __post_init__(self):
        if self.name not in NAMES:
            raise ValueError(f"unknown construction {self.name!r}; choose from {NAMES}")
        if self.name in ("k2k", "k4odd") and self.k is None:
            raise ValueError(f"{self.name} needs a k")

    @property
    def parts(self) -> tuple[int, ...]:
        return {
            "k22": (2, 2),
            "k422": (4, 2, 2),
            "k2k": (2,) * (self.k or 0),
            "k4odd": (4,) + (2,) * ((self.k or 1) - 1),
        }[self.name]

    def resolve(self) -> tuple[Graph, ListAssignment]:
        if self.name == "k22":
            return k22_instance()
        if self.name == "k422":
            return k422_instance()
        if self.name == "k2k":
            return k2k_instance(self.k)
        return k4odd_instance(self.k)

    def __str__(self):
        return self.name if self.k is None else f"{self.name}(k={self.k})"


@dataclass(frozen=True)
class ClaimReport:
    construction: ConstructionSpec
    claim1_not_colorable: bool
    claim2_inequality: tuple[int, int, int]
    claim3_vertex_deleted: dict[str, bool]
    claim3_colorings: dict[str, Coloring | None]
    hall_overall: HallReport
    min_list_size: int
    anomalies: list[str] = field(default_factory=list)

    @property
    def all_deletions_colorable(self) -> bool:
        return all(self.claim3_vertex_deleted.values())


def _deletion_outcome(args):
    L, v = args
    return find_coloring(L.delete_vertex(v))


def verify_construction(spec: ConstructionSpec, workers: int = 1) -> ClaimReport:
    """Check a construction with the solver and the Hall audits.

    ``claim1_not_colorable``: no proper coloring exists.  ``claim2_inequality``:
    the palette-wide independence sum on the whole graph against its order.
    ``claim3_vertex_deleted``: which single-vertex deletions are colorable.
    Hall's condition goes through the shortcut when every deletion is
    colorable, and through the exhaustive audit otherwise.
    """
    g, L = spec.resolve()
    whole = find_coloring(L)
    total = hall_sum(L)
    jobs = [(L, v) for v in g.vertices]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(_deletion_outcome, jobs))
    else:
        outcomes = [_deletion_outcome(j) for j in jobs]
    deleted = {g.labels[v]: o.colorable for v, o in zip(g.vertices, outcomes)}
    colorings = {g.labels[v]: o.coloring for v, o in zip(g.vertices, outcomes)}
    anomalies = [f"G-{lab} is not colorable" for lab, ok in deleted.items() if not ok]
    if anomalies:
        hall = check_hall_exhaustive(L)
    else:
        hall = check_hall_shortcut(L)
    return ClaimReport(
        construction=spec,
        claim1_not_colorable=not whole.colorable,
        claim2_inequality=(total, g.n, total - g.n),
        claim3_vertex_deleted=deleted,
        claim3_colorings=colorings,
        hall_overall=hall,
        min_list_size=L.min_list_size(),
        anomalies=anomalies,
    )
