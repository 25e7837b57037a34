import itertools
import random

import pytest

from hallnum.constructions import k22_instance
from hallnum.errors import IntegrityError
from hallnum.graph import Graph, chromatic_number, complete_graph, complete_multipartite, cycle_graph
from hallnum.lists import ListAssignment, check_hall_exhaustive
from hallnum.params import (CONFIRMED, REFUTED, Certificate, CertifiedBounds, apply_facts, choice_number_bounds,
                            conjecture_scan, find_induced_embedding, graph_parameters, hall_number_bounds,
                            lift_assignment, search_bad_assignment, verify_certificates, verify_ch_certificate,
                            verify_hall_certificate)
from hallnum.solver import find_coloring

from oracles import brute_colorable, edge_set


def bounds(parameter, lo, hi, note="given"):
    cert = Certificate("inference", note)
    return CertifiedBounds(parameter, lo, hi, cert, cert if hi is not None else None)


class TestChoiceNumber:
    @pytest.mark.parametrize("sizes", [(2, 2), (3, 2)])
    def test_bipartite_two_choosable(self, sizes):
        b = choice_number_bounds(complete_multipartite(sizes), oracle=False)
        assert (b.lower, b.upper) == (2, 2)
        assert b.upper_cert.kind == "enumeration"

    def test_k42_lower_bound(self):
        g = complete_multipartite([4, 2])
        b = choice_number_bounds(g, oracle=False)
        assert b.lower == 3
        L = b.lower_cert.assignment
        assert verify_ch_certificate(L, 2)
        assert not brute_colorable(g.n, edge_set(g), L.lists)

    def test_triangle(self):
        b = choice_number_bounds(complete_graph(3), oracle=False)
        assert (b.lower, b.upper) == (3, 3)

    def test_odd_cycle(self):
        # odd cycles are 3-choosable and need 3
        b = choice_number_bounds(cycle_graph(5), oracle=False)
        assert (b.lower, b.upper) == (3, 3)

    def test_oracle_values(self):
        assert choice_number_bounds(complete_multipartite([2, 2, 2])).exact
        assert choice_number_bounds(complete_multipartite([2, 2, 2])).lower == 3
        b = choice_number_bounds(complete_multipartite([3, 3]))
        assert (b.lower, b.upper) == (3, 3)

    def test_search_budget(self):
        res = search_bad_assignment(complete_multipartite([3, 3]), 2, budget=1)
        assert res.examined <= 1


class TestHallNumber:
    def test_k22(self):
        b = hall_number_bounds(complete_multipartite([2, 2]), oracle=False)
        assert (b.lower, b.upper) == (2, 2)
        assert verify_hall_certificate(b.lower_cert.assignment, 1)

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_complete_graphs(self, n):
        b = hall_number_bounds(complete_graph(n))
        assert (b.lower, b.upper) == (1, 1)

    @pytest.mark.parametrize("sizes,h", [((2, 2, 2), 3), ((4, 2, 2), 3), ((4, 2), 3), ((3, 2), 2)])
    def test_multipartite(self, sizes, h):
        g = complete_multipartite(sizes)
        b = hall_number_bounds(g)
        assert (b.lower, b.upper) == (h, h)
        assert verify_certificates(g, b)

    def test_k32_search_finds_hall_example(self):
        b = hall_number_bounds(complete_multipartite([3, 2]), oracle=False)
        assert b.lower == 2
        L = b.lower_cert.assignment
        assert check_hall_exhaustive(L).satisfied and not find_coloring(L).colorable


class TestApplyFacts:
    def test_ch_above_chi_forces_h(self):
        g = complete_multipartite([4, 2])
        out = apply_facts({g: {"chi": bounds("chi", 2, 2), "ch": bounds("ch", 3, 3)}})[g]
        assert (out["hall"].lower, out["hall"].upper) == (3, 3)

    def test_hall_propagates_up(self):
        small, big = complete_multipartite([2, 2, 2]), complete_multipartite([3, 2, 2])
        out = apply_facts({small: {"hall": bounds("hall", 3, None)}, big: {}})
        assert out[big]["hall"].lower == 3

    def test_lifted_certificate_is_real(self):
        small, big = complete_multipartite([2, 2]), complete_multipartite([3, 2, 2])
        _, L0 = k22_instance()
        hall = CertifiedBounds("hall", 2, None, Certificate("assignment", "k22", L0))
        out = apply_facts({small: {"hall": hall}, big: {}})
        cert = out[big]["hall"].lower_cert
        assert cert.assignment is not None and cert.assignment.graph == big
        assert verify_hall_certificate(cert.assignment, 1)

    def test_downward_use_is_flagged(self):
        small, big = complete_multipartite([2, 2]), complete_multipartite([3, 2])
        out = apply_facts({small: {}, big: {"hall": bounds("hall", 1, 2)}})
        assert "not proved here" in out[small]["hall"].upper_cert.note

    def test_h_at_most_chi(self):
        g = complete_multipartite([2, 2])
        out = apply_facts({g: {"hall": bounds("hall", 1, 2)}})[g]
        assert (out["ch"].lower, out["ch"].upper) == (2, 2)

    def test_empty(self):
        assert apply_facts({}) == {}

    def test_contradiction(self):
        g = complete_multipartite([2, 2])
        with pytest.raises(IntegrityError):
            apply_facts({g: {"ch": bounds("ch", 2, 2), "hall": bounds("hall", 3, None)}})

    def test_bounds_validate(self):
        with pytest.raises(IntegrityError):
            bounds("ch", 4, 3)


class TestEmbeddingAndLifting:
    def test_multipartite_embedding(self):
        h, g = complete_multipartite([2, 2]), complete_multipartite([3, 2, 2])
        emb = find_induced_embedding(h, g)
        assert emb is not None and len(set(emb)) == 4
        for u, v in itertools.combinations(range(4), 2):
            assert h.has_edge(u, v) == g.has_edge(emb[u], emb[v])
        assert find_induced_embedding(complete_multipartite([4, 2]), complete_multipartite([3, 3])) is None

    def test_general_embedding(self):
        assert find_induced_embedding(cycle_graph(4), cycle_graph(5)) is None
        assert find_induced_embedding(complete_graph(2), cycle_graph(5)) is not None

    def test_pad_must_be_positive(self):
        _, L0 = k22_instance()
        g = complete_multipartite([3, 2])
        with pytest.raises(ValueError):
            lift_assignment(L0, g, find_induced_embedding(L0.graph, g), 0)

    def test_construction_certificate_lifts(self):
        g = complete_multipartite([3, 3, 2])
        b = hall_number_bounds(g, oracle=False, budget=2000)
        assert b.lower >= 2 and verify_certificates(g, b)

    @pytest.mark.parametrize("pad", [1, 3])
    def test_lift_keeps_hall_and_noncolorability(self, pad):
        _, L0 = k22_instance()
        g = complete_multipartite([3, 3, 2])
        L = lift_assignment(L0, g, find_induced_embedding(L0.graph, g), pad)
        assert not find_coloring(L).colorable
        assert check_hall_exhaustive(L).satisfied


def random_graph(rng, n, p):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_lists_of_size_chi_satisfy_hall():
    rng = random.Random(31)
    for _ in range(150):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.8]))
        chi = chromatic_number(g)
        pal = [f"k{i}" for i in range(chi + 3)]
        L = ListAssignment(g, tuple(tuple(rng.sample(pal, rng.randint(chi, len(pal)))) for _ in range(n)))
        assert check_hall_exhaustive(L).satisfied


def test_sandwich_on_random_graphs():
    rng = random.Random(32)
    for _ in range(12):
        g = random_graph(rng, rng.randint(3, 5), 0.5)
        r = graph_parameters(g, budget=5000)
        assert r.chi.lower <= r.ch.lower
        assert r.hall.lower >= 1
        if r.ch.upper is not None:
            assert r.hall.upper is not None and r.hall.upper <= r.ch.upper
        assert verify_certificates(g, r.ch) and verify_certificates(g, r.hall)


class TestScan:
    def test_small(self):
        rows = conjecture_scan(4)
        assert [(r.name, r.status) for r in rows] == [("K(2,2)", CONFIRMED)]

    def test_six(self):
        rows = conjecture_scan(6)
        names = {r.name: r for r in rows}
        assert set(names) == {"K(2,2)", "K(3,2)", "K(2,2,2)", "K(3,3)", "K(4,2)"}
        assert all(r.status != REFUTED for r in rows)
        assert names["K(2,2,2)"].report.hall.lower == 3

    def test_workers_agree(self):
        a = conjecture_scan(6, workers=1)
        b = conjecture_scan(6, workers=2)
        assert [(r.name, r.status, str(r.report.ch), str(r.report.hall)) for r in a] == \
               [(r.name, r.status, str(r.report.ch), str(r.report.hall)) for r in b]
