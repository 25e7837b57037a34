"""List assignments, colour supports and Hall's condition audits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import CapabilityError
from .graph import Graph, alpha_of_mask, alpha_table, bits, induced_subgraph, popcount, to_mask

MAX_EXHAUSTIVE_VERTICES = 16

Color = str


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex colour lists for ``graph``.

    Lists keep their given order (duplicates dropped) so the palette order,
    which drives the solver's value ordering, is reproducible.
    """

    graph: Graph
    lists: tuple[tuple[Color, ...], ...]

    def __post_init__(self):
        lists = tuple(tuple(dict.fromkeys(str(c) for c in lst)) for lst in self.lists)
        if len(lists) != self.graph.n:
            raise ValueError(f"need {self.graph.n} lists, got {len(lists)}")
        object.__setattr__(self, "lists", lists)

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping[int | str, Iterable[Color]]) -> ListAssignment:
        """Build from a map keyed by vertex index or label; every vertex needs an entry."""
        lists: list[tuple[Color, ...] | None] = [None] * graph.n
        for key, colors in mapping.items():
            v = key if isinstance(key, int) else graph.index(key)
            lists[v] = tuple(colors)
        missing = [graph.labels[v] for v, lst in enumerate(lists) if lst is None]
        if missing:
            raise ValueError(f"no list for vertices {missing}")
        return cls(graph, tuple(lists))

    def __getitem__(self, v: int | str) -> tuple[Color, ...]:
        if isinstance(v, str):
            v = self.graph.index(v)
        return self.lists[v]

    @property
    def palette(self) -> tuple[Color, ...]:
        """Union of all lists, in order of first appearance."""
        return tuple(dict.fromkeys(c for lst in self.lists for c in lst))

    def min_list_size(self) -> int:
        return min((len(lst) for lst in self.lists), default=0)

    def support_mask(self, color: Color, within: int | None = None) -> int:
        mask = to_mask(v for v, lst in enumerate(self.lists) if color in lst)
        return mask if within is None else mask & within

    def supports(self) -> dict[Color, int]:
        out: dict[Color, int] = {}
        for v, lst in enumerate(self.lists):
            for c in lst:
                out[c] = out.get(c, 0) | 1 << v
        return {c: out[c] for c in self.palette}

    def restrict(self, s: Iterable[int]) -> ListAssignment:
        verts = sorted(set(s))
        return ListAssignment(induced_subgraph(self.graph, verts), tuple(self.lists[v] for v in verts))

    def delete_vertex(self, v: int) -> ListAssignment:
        return self.restrict(u for u in self.graph.vertices if u != v)

    def as_dict(self) -> dict[str, tuple[Color, ...]]:
        return dict(zip(self.graph.labels, self.lists))


def _as_mask(g: Graph, h: Iterable[int] | int | None) -> int:
    if h is None:
        return g.full_mask
    if isinstance(h, int):
        if h & ~g.full_mask:
            raise ValueError("vertex mask out of range")
        return h
    verts = list(h)
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    return to_mask(verts)


def support_subgraph(L: ListAssignment, h: Iterable[int] | int | None, color: Color) -> Graph:
    """Subgraph of ``h`` induced by the vertices whose list contains ``color``."""
    mask = _as_mask(L.graph, h)
    return induced_subgraph(L.graph, bits(L.support_mask(color, mask)))


def hall_sum(L: ListAssignment, h: Iterable[int] | int | None = None) -> int:
    """Sum over the palette of the independence numbers of the colour supports in ``h``."""
    mask = _as_mask(L.graph, h)
    return sum(alpha_of_mask(L.graph, s & mask) for s in L.supports().values())


def hall_inequality(L: ListAssignment, h: Iterable[int] | int | None = None) -> tuple[bool, int]:
    """Whether the Hall inequality holds on the subgraph induced by ``h``, and its margin."""
    mask = _as_mask(L.graph, h)
    margin = hall_sum(L, mask) - popcount(mask)
    return margin >= 0, margin


SATISFIED = "satisfied"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class HallReport:
    """Outcome of a Hall's-condition audit.

    ``worst_margin``/``witness`` cover the subsets actually audited: every
    nonempty vertex subset for the exhaustive method, only the whole vertex
    set for the shortcut.  ``shortcut_evidence`` holds one coloring of
    ``G - v`` per vertex (or ``None`` where none exists).
    """

    method: str
    status: str
    worst_margin: int
    witness: tuple[int, ...]
    shortcut_evidence: tuple | None = None
    uncolorable_deletions: tuple[int, ...] = field(default=())

    @property
    def satisfied(self) -> bool:
        return self.status == SATISFIED

    @property
    def needs_exhaustive(self) -> bool:
        return self.status == INCONCLUSIVE


def subset_margins(L: ListAssignment, table: np.ndarray | None = None) -> np.ndarray:
    """Hall margin of every vertex subset, indexed by bitmask."""
    g = L.graph
    if g.n > MAX_EXHAUSTIVE_VERTICES:
        raise CapabilityError(f"exhaustive Hall audit limited to {MAX_EXHAUSTIVE_VERTICES} vertices")
    masks = np.arange(1 << g.n, dtype=np.int64)
    if table is None:
        table = alpha_table(g)
    total = np.zeros(1 << g.n, dtype=np.int32)
    for s in L.supports().values():
        total += table[masks & s]
    sizes = np.zeros(1 << g.n, dtype=np.int32)
    for v in range(g.n):
        sizes += (masks >> v) & 1
    return total - sizes


def check_hall_exhaustive(L: ListAssignment, table: np.ndarray | None = None) -> HallReport:
    """Audit the Hall inequality on every nonempty induced subgraph.

    The witness is the minimum-margin subset with the smallest bitmask.
    ``table`` may carry a precomputed :func:`alpha_table` of ``L.graph``.
    """
    g = L.graph
    if g.n == 0:
        return HallReport("exhaustive", SATISFIED, 0, ())
    margins = subset_margins(L, table)[1:]
    i = int(np.argmin(margins))
    worst = int(margins[i])
    return HallReport("exhaustive", SATISFIED if worst >= 0 else VIOLATED, worst, tuple(bits(i + 1)))


def check_hall_shortcut(L: ListAssignment, solver: Callable | None = None) -> HallReport:
    """Hall check through colorings of every single-vertex deletion.

    If every ``G - v`` has a proper coloring, all proper induced subgraphs
    satisfy the inequality, so only the whole graph needs checking.  If some
    ``G - v`` is not colorable nothing follows and the report is
    ``inconclusive``: an exhaustive audit must decide.
    """
    if solver is None:
        from .solver import find_coloring as solver
    g = L.graph
    evidence = []
    failed = []
    for v in g.vertices:
        outcome = solver(L.delete_vertex(v))
        evidence.append(outcome.coloring)
        if not outcome.colorable:
            failed.append(v)
    holds, margin = hall_inequality(L)
    witness = tuple(g.vertices)
    if failed:
        return HallReport("remark-shortcut", INCONCLUSIVE, margin, witness, tuple(evidence), tuple(failed))
    status = SATISFIED if holds else VIOLATED
    return HallReport("remark-shortcut", status, margin, witness, tuple(evidence))


def check_hall(L: ListAssignment, method: str = "auto") -> HallReport:
    """Dispatch on ``method``: ``exhaustive``, ``shortcut`` or ``auto``.

    ``auto`` tries the shortcut and falls back to the exhaustive audit when
    the shortcut is inconclusive.
    """
    if method == "exhaustive":
        return check_hall_exhaustive(L)
    if method == "shortcut":
        return check_hall_shortcut(L)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    report = check_hall_shortcut(L)
    if report.needs_exhaustive:
        return check_hall_exhaustive(L)
    return report
