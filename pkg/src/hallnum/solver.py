"""Proper list colorings: backtracking search and the matching route for cliques."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import Graph, bits
from .lists import Color, ListAssignment


@dataclass(frozen=True)
class Coloring:
    """Vertex-to-colour map; ``None`` marks an uncoloured vertex."""

    target: Graph
    colors: tuple[Color | None, ...]

    def __post_init__(self):
        if len(self.colors) != self.target.n:
            raise ValueError(f"need {self.target.n} entries, got {len(self.colors)}")

    @classmethod
    def from_mapping(cls, target: Graph, mapping: Mapping[int | str, Color]) -> Coloring:
        colors: list[Color | None] = [None] * target.n
        for key, c in mapping.items():
            v = key if isinstance(key, int) else target.index(key)
            colors[v] = c
        return cls(target, tuple(colors))

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)

    def as_dict(self) -> dict[str, Color | None]:
        return dict(zip(self.target.labels, self.colors))

    def restrict(self, s: Iterable[int]) -> Coloring:
        from .graph import induced_subgraph
        verts = sorted(set(s))
        return Coloring(induced_subgraph(self.target, verts), tuple(self.colors[v] for v in verts))


@dataclass(frozen=True)
class SolveOutcome:
    colorable: bool
    coloring: Coloring | None
    nodes_explored: int


def verify_coloring(L: ListAssignment, psi: Coloring) -> bool:
    """True iff every vertex gets a colour from its list and no edge is monochromatic."""
    if not psi.is_total:
        raise ValueError("coloring is partial")
    if psi.target.n != L.graph.n:
        raise ValueError("coloring and list assignment target different graphs")
    g = L.graph
    for v in g.vertices:
        if psi.colors[v] not in L.lists[v]:
            return False
    return all(psi.colors[u] != psi.colors[v] for u, v in g.edges())


def search_domains(adj: Sequence[int], domains: Sequence[int]) -> tuple[list[int] | None, int]:
    """Backtracking over colour-index bitmasks.

    Variable order: fewest live colours, ties by vertex index.  Value order:
    ascending colour index.  Assigning a colour deletes it from the live
    lists of unassigned neighbours; an emptied list fails immediately.
    Returns the colour index per vertex (or ``None``) and the node count.
    """
    n = len(domains)
    choice = [-1] * n
    nodes = 0

    def solve(live: list[int], todo: int) -> bool:
        nonlocal nodes
        if not todo:
            return True
        v, best = -1, None
        for u in bits(todo):
            size = bin(live[u]).count("1")
            if best is None or size < best:
                v, best = u, size
                if size <= 1:
                    break
        dom = live[v]
        rest = todo & ~(1 << v)
        nbrs = bits(adj[v] & rest)
        while dom:
            low = dom & -dom
            dom ^= low
            nodes += 1
            nxt = live[:]
            ok = True
            for u in nbrs:
                nxt[u] &= ~low
                if not nxt[u]:
                    ok = False
                    break
            if ok and solve(nxt, rest):
                choice[v] = low.bit_length() - 1
                return True
        return False

    if any(d == 0 for d in domains):
        return None, 0
    if not solve(list(domains), (1 << n) - 1):
        return None, nodes
    return choice, nodes


def find_coloring(L: ListAssignment) -> SolveOutcome:
    """Complete, deterministic search for a proper L-coloring."""
    palette = L.palette
    index = {c: i for i, c in enumerate(palette)}
    domains = [sum(1 << index[c] for c in lst) for lst in L.lists]
    choice, nodes = search_domains(L.graph.adj, domains)
    if choice is None:
        return SolveOutcome(False, None, nodes)
    return SolveOutcome(True, Coloring(L.graph, tuple(palette[i] for i in choice)), nodes)


def _augment(i: int, sets: Sequence[Sequence], match_of: dict, seen: set) -> bool:
    for c in sets[i]:
        if c in seen:
            continue
        seen.add(c)
        if c not in match_of or _augment(match_of[c], sets, match_of, seen):
            match_of[c] = i
            return True
    return False


def _max_matching(sets: Sequence[Sequence]) -> tuple[dict, int | None]:
    """Augmenting-path matching of set indices to elements.

    Returns the element-to-index map and the first index left unmatched.
    """
    match_of: dict = {}
    for i in range(len(sets)):
        if not _augment(i, sets, match_of, set()):
            return match_of, i
    return match_of, None


def find_sdr(sets: Sequence[Iterable]) -> list | None:
    """A system of distinct representatives, or ``None`` if none exists."""
    sets = [list(dict.fromkeys(s)) for s in sets]
    match_of, stuck = _max_matching(sets)
    if stuck is not None:
        return None
    rep = [None] * len(sets)
    for c, i in match_of.items():
        rep[i] = c
    return rep


def sdr_obstruction(sets: Sequence[Iterable]) -> tuple[int, ...] | None:
    """Indices ``J`` with fewer than ``|J|`` elements in their union, or ``None``.

    Uses the sets reachable by alternating paths from an unmatched set.
    """
    sets = [list(dict.fromkeys(s)) for s in sets]
    match_of, stuck = _max_matching(sets)
    if stuck is None:
        return None
    # finish the matching so alternating reachability is taken from a maximum one
    for i in range(stuck + 1, len(sets)):
        _augment(i, sets, match_of, set())
    matched = set(match_of.values())
    root = next(i for i in range(len(sets)) if i not in matched)
    reached, frontier = {root}, [root]
    while frontier:
        i = frontier.pop()
        for c in sets[i]:
            j = match_of.get(c)
            if j is not None and j not in reached:
                reached.add(j)
                frontier.append(j)
    return tuple(sorted(reached))


def colorable_complete(L: ListAssignment) -> bool:
    """Colorability of a complete graph, decided by distinct representatives."""
    if not L.graph.is_complete():
        raise ValueError("target graph is not complete")
    return find_sdr(L.lists) is not None
