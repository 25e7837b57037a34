"""Small simple graphs stored as adjacency bitmasks.

Vertices are positional indices ``0..n-1``; labels are cosmetic.  A graph
built by :func:`complete_multipartite` remembers its part structure, which
lets independence and chromatic numbers be read off without search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapabilityError

MAX_ALPHA_VERTICES = 32
MAX_CHI_VERTICES = 16
MAX_TABLE_VERTICES = 20

_BIG_PART_LETTERS = "xyzwrst"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  ``parts`` is present
    only for graphs constructed as complete multipartite graphs.
    """

    n: int
    adj: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...] | None = None
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have one mask per vertex")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError("need one label per vertex")
        if len(set(self.labels)) != self.n:
            raise ValueError("vertex labels must be unique")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if self.parts is not None:
            _check_parts(self)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None, tuple(labels) if labels else ())

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(nb | (1 << v) == full for v, nb in enumerate(self.adj))

    def part_masks(self) -> list[int] | None:
        if self.parts is None:
            return None
        return [to_mask(p) for p in self.parts]

    def part_sizes(self) -> tuple[int, ...] | None:
        if self.parts is None:
            return None
        return tuple(len(p) for p in self.parts)

    def degeneracy(self) -> int:
        """Largest minimum degree over all subgraphs (smallest-last order)."""
        remaining = self.full_mask
        best = 0
        while remaining:
            v = min(bits(remaining), key=lambda u: popcount(self.adj[u] & remaining))
            best = max(best, popcount(self.adj[v] & remaining))
            remaining &= ~(1 << v)
        return best

    def __repr__(self):
        if self.parts is not None:
            return f"K({','.join(str(len(p)) for p in self.parts)})"
        return f"Graph(n={self.n}, m={self.edge_count})"


def _check_parts(g: Graph) -> None:
    seen = 0
    for part in g.parts:
        pm = to_mask(part)
        if pm & seen:
            raise ValueError("parts overlap")
        seen |= pm
        for v in part:
            if g.adj[v] & pm:
                raise ValueError(f"part containing {v} is not independent")
            if g.adj[v] != g.full_mask & ~pm:
                raise ValueError(f"vertex {v} misses a cross-part edge")
    if seen != g.full_mask:
        raise ValueError("parts do not cover every vertex")


def _part_labels(sizes: Sequence[int]) -> list[str]:
    labels = []
    big = 0
    many_big = sum(1 for s in sizes if s > 2) > len(_BIG_PART_LETTERS)
    for i, size in enumerate(sizes, start=1):
        if size == 1:
            labels.append(f"u{i}")
        elif size == 2:
            labels += [f"u{i}", f"v{i}"]
        elif many_big:
            labels += [f"p{i}_{j}" for j in range(1, size + 1)]
        else:
            letter = _BIG_PART_LETTERS[big]
            big += 1
            labels += [f"{letter}{j}" for j in range(1, size + 1)]
    return labels


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph ``K(n1, ..., nk)`` with recorded parts.

    A part of size 2 at position ``i`` (1-based) is labelled ``ui, vi``; a
    part larger than 2 is labelled ``x1, x2, ...`` (later big parts use
    ``y``, ``z``, ...).
    """
    sizes = list(part_sizes)
    if not sizes:
        raise ValueError("need at least one part")
    if any(int(s) != s or s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive integers, got {sizes}")
    n = sum(sizes)
    parts = []
    start = 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    full = (1 << n) - 1
    adj = [0] * n
    for part in parts:
        pm = to_mask(part)
        for v in part:
            adj[v] = full & ~pm
    return Graph(n, tuple(adj), tuple(parts), tuple(_part_labels(sizes)))


def complete_graph(n: int) -> Graph:
    return complete_multipartite([1] * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def null_graph() -> Graph:
    return Graph(0, ())


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph of ``g`` induced by ``s``; vertices keep their relative order."""
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph with {g.n} vertices")
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(to_mask(pos[u] for u in bits(g.adj[v]) if u in pos))
    parts = None
    if g.parts is not None:
        parts = tuple(p for p in (tuple(pos[v] for v in part if v in pos) for part in g.parts) if p)
    return Graph(len(verts), tuple(adj), parts, tuple(g.labels[v] for v in verts))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, (u for u in g.vertices if u != v))


def multipartite_parts(g: Graph) -> tuple[tuple[int, ...], ...] | None:
    """Recover the part structure if ``g`` is complete multipartite.

    Non-adjacency must be an equivalence relation (the complement is a
    disjoint union of cliques).
    """
    if g.parts is not None:
        return g.parts
    full = g.full_mask
    parts = []
    seen = 0
    for v in g.vertices:
        if seen >> v & 1:
            continue
        part_mask = full & ~g.adj[v]
        for u in bits(part_mask):
            if g.adj[u] != g.adj[v]:
                return None
        parts.append(tuple(bits(part_mask)))
        seen |= part_mask
    return tuple(parts)


def as_multipartite(g: Graph) -> Graph | None:
    parts = multipartite_parts(g)
    if parts is None:
        return None
    if g.parts is not None:
        return g
    return Graph(g.n, g.adj, parts, g.labels)


# -- independence number ---------------------------------------------------

def _clique_cover_bound(adj: Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand`` (bounds alpha)."""
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        clique = low
        common = adj[v] & cand
        while common:
            w = common & -common
            clique |= w
            common &= adj[w.bit_length() - 1]
        cand &= ~clique
        count += 1
    return count


def _mis_size(adj: Sequence[int], cand: int) -> int:
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            # vertices without neighbours in cand always join
            free = 0
            for v in bits(cand):
                if not adj[v] & cand:
                    free |= 1 << v
            if free:
                size += popcount(free)
                cand &= ~free
                continue
            break
        if not cand:
            best = max(best, size)
            return
        if size + _clique_cover_bound(adj, cand) <= best:
            return
        v = max(bits(cand), key=lambda u: popcount(adj[u] & cand))
        grow(cand & ~adj[v] & ~(1 << v), size + 1)
        grow(cand & ~(1 << v), size)

    grow(cand, 0)
    return best


def alpha_of_mask(g: Graph, mask: int) -> int:
    """Independence number of the subgraph induced by ``mask``."""
    if not mask:
        return 0
    if g.parts is not None:
        return max(popcount(mask & pm) for pm in g.part_masks())
    if popcount(mask) > MAX_ALPHA_VERTICES:
        raise CapabilityError(f"exact independence number limited to {MAX_ALPHA_VERTICES} vertices")
    return _mis_size(g.adj, mask)


def independence_number(g: Graph) -> int:
    return alpha_of_mask(g, g.full_mask)


def alpha_table(g: Graph) -> np.ndarray:
    """Independence number of every induced subgraph, indexed by bitmask."""
    if g.n > MAX_TABLE_VERTICES:
        raise CapabilityError(f"alpha table limited to {MAX_TABLE_VERTICES} vertices")
    table = np.zeros(1 << g.n, dtype=np.int16)
    for i in range(g.n):
        lo = 1 << i
        rest = np.arange(lo, dtype=np.int64)
        # highest vertex i either left out or taken (dropping its neighbours)
        taken = 1 + table[rest & ~g.adj[i]]
        table[lo:2 * lo] = np.maximum(table[rest], taken)
    return table


# -- chromatic number -------------------------------------------------------

def _k_colorable(adj: Sequence[int], n: int, k: int) -> bool:
    colors = [-1] * n

    def pick() -> int:
        # DSATUR: most distinct neighbour colours, then degree
        best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[u] for u in bits(adj[v]) if colors[u] >= 0})
            cand = (sat, popcount(adj[v]), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {colors[u] for u in bits(adj[v])}
        # a fresh colour is interchangeable with any other fresh one
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colors[v] = c
            if solve(done + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return solve(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.parts is not None:
        return len(g.parts)
    if g.n > MAX_CHI_VERTICES:
        raise CapabilityError(f"exact chromatic number limited to {MAX_CHI_VERTICES} vertices")
    k = 1
    while not _k_colorable(g.adj, g.n, k):
        k += 1
    return k
