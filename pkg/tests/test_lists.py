import itertools
import random

import pytest

from hallnum.constructions import k2k_instance, k4odd_instance, k22_instance
from hallnum.errors import CapabilityError
from hallnum.graph import Graph, complete_graph, complete_multipartite, cycle_graph, independence_number
from hallnum.lists import (INCONCLUSIVE, SATISFIED, VIOLATED, ListAssignment, check_hall, check_hall_exhaustive,
                           check_hall_shortcut, hall_inequality, support_subgraph)
from hallnum.solver import find_coloring

from oracles import brute_hall, edge_set


def random_instance(rng, n, p=0.5, colors=4, sizes=(1, 3)):
    g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
    pal = [f"k{i}" for i in range(colors)]
    lists = tuple(tuple(rng.sample(pal, min(colors, rng.randint(*sizes)))) for _ in range(n))
    return ListAssignment(g, lists)


class TestSupport:
    def test_k22_color_c(self):
        g, L = k22_instance()
        h = support_subgraph(L, None, "c")
        assert sorted(h.labels) == ["u2", "v1", "v2"]
        assert independence_number(h) == 2
        assert independence_number(support_subgraph(L, None, "a")) == 1
        assert independence_number(support_subgraph(L, None, "b")) == 1

    def test_unknown_color(self):
        _, L = k22_instance()
        assert support_subgraph(L, None, "zzz").n == 0

    def test_k2k_shared_block(self):
        g, L = k2k_instance(3)
        h = support_subgraph(L, None, "c1")
        assert h.n == 6
        assert independence_number(h) == 2


class TestInequality:
    def test_k22(self):
        _, L = k22_instance()
        assert hall_inequality(L) == (True, 0)

    def test_k2k(self):
        for k in (3, 4, 5):
            _, L = k2k_instance(k)
            assert hall_inequality(L) == (True, 0)

    def test_k4odd(self):
        _, L = k4odd_instance(5)
        assert hall_inequality(L) == (True, 17 - 12)

    def test_empty_subset(self):
        _, L = k22_instance()
        assert hall_inequality(L, []) == (True, 0)

    def test_single_vertex(self):
        rng = random.Random(4)
        for _ in range(100):
            L = random_instance(rng, 5, sizes=(0, 3))
            for v in range(5):
                holds, _ = hall_inequality(L, [v])
                assert holds == (len(L.lists[v]) > 0)


class TestExhaustive:
    def test_k22(self):
        _, L = k22_instance()
        r = check_hall_exhaustive(L)
        assert r.satisfied and r.worst_margin == 0

    def test_k2_same_singleton(self):
        g = complete_graph(2)
        L = ListAssignment(g, (("x",), ("x",)))
        r = check_hall_exhaustive(L)
        assert r.status == VIOLATED
        assert r.witness == (0, 1)
        assert r.worst_margin == -1

    def test_k4odd_k3_anomaly(self):
        _, L = k4odd_instance(3)
        assert check_hall_exhaustive(L).satisfied

    def test_empty_list(self):
        g = complete_graph(3)
        L = ListAssignment(g, (("a",), (), ("b",)))
        r = check_hall_exhaustive(L)
        assert r.witness == (1,) and r.worst_margin == -1

    def test_tie_break_smallest_mask(self):
        g = complete_graph(3)
        L = ListAssignment(g, (("x",), ("x",), ("x",)))
        r = check_hall_exhaustive(L)
        assert r.worst_margin == -2 and r.witness == (0, 1, 2)
        L = ListAssignment(g, (("x",), ("x",), ("y",)))
        assert check_hall_exhaustive(L).witness == (0, 1)

    def test_cap(self):
        L = ListAssignment(cycle_graph(17), tuple(("a", "b") for _ in range(17)))
        with pytest.raises(CapabilityError):
            check_hall_exhaustive(L)

    def test_against_brute_force(self):
        rng = random.Random(8)
        for _ in range(150):
            L = random_instance(rng, rng.randint(1, 6))
            r = check_hall_exhaustive(L)
            assert r.worst_margin == brute_hall(L.graph.n, edge_set(L.graph), L.lists)


class TestShortcut:
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_k2k(self, k):
        _, L = k2k_instance(k)
        r = check_hall_shortcut(L)
        assert r.status == SATISFIED
        assert len(r.shortcut_evidence) == 2 * k
        assert all(c is not None for c in r.shortcut_evidence)

    def test_k4odd_k3_inconclusive(self):
        g, L = k4odd_instance(3)
        r = check_hall_shortcut(L)
        assert r.status == INCONCLUSIVE
        assert g.index("x3") in r.uncolorable_deletions
        assert not r.satisfied

    def test_k22(self):
        _, L = k22_instance()
        assert check_hall_shortcut(L).satisfied

    def test_top_level_violation(self):
        g = complete_graph(2)
        L = ListAssignment(g, (("x",), ("x",)))
        assert check_hall_shortcut(L).status == VIOLATED

    def test_auto_falls_back(self):
        _, L = k4odd_instance(3)
        r = check_hall(L, "auto")
        assert r.method == "exhaustive" and r.satisfied


def test_shortcut_agrees_with_exhaustive():
    rng = random.Random(2024)
    agreed = 0
    for _ in range(1000):
        L = random_instance(rng, rng.randint(2, 8), p=rng.choice([0.3, 0.6]), colors=rng.randint(2, 5))
        short = check_hall_shortcut(L)
        full = check_hall_exhaustive(L)
        if short.satisfied:
            assert full.satisfied
            agreed += 1
        if short.status == VIOLATED:
            assert not full.satisfied
    assert agreed > 100


def test_colorable_implies_hall():
    rng = random.Random(77)
    seen = 0
    for _ in range(600):
        L = random_instance(rng, rng.randint(2, 8), colors=rng.randint(2, 5), sizes=(1, 3))
        if find_coloring(L).colorable:
            seen += 1
            assert check_hall_exhaustive(L).satisfied
    assert seen > 100


def test_edge_removal_never_lowers_margins():
    rng = random.Random(9)
    for _ in range(60):
        L = random_instance(rng, 6, p=0.6)
        edges = L.graph.edges()
        if not edges:
            continue
        drop = rng.choice(edges)
        g2 = Graph.from_edges(6, [e for e in edges if e != drop])
        L2 = ListAssignment(g2, L.lists)
        for mask in range(1, 64):
            assert hall_inequality(L2, mask)[1] >= hall_inequality(L, mask)[1]
