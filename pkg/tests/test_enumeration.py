import itertools

import pytest

from hallnum.enumeration import canonical_classes, class_order, iter_class_multisets, to_assignment
from hallnum.graph import complete_multipartite


def brute_orbit_count(n, size, palette):
    """Count assignments with every list of exactly ``size`` colours, up to renaming.

    Two assignments are the same orbit when their multisets of colour classes
    agree; the palette must be large enough that no orbit is missed.
    """
    seen = set()
    subsets = list(itertools.combinations(range(palette), size))
    for lists in itertools.product(subsets, repeat=n):
        classes = [sum(1 << v for v in range(n) if c in lists[v]) for c in range(palette)]
        seen.add(tuple(sorted(m for m in classes if m)))
    return len(seen)


@pytest.mark.parametrize("n,k,palette,expected", [(4, 2, 8, 139), (3, 2, 6, None), (3, 3, 9, None), (2, 3, 6, None)])
def test_counts_match_brute_force(n, k, palette, expected):
    ours = sum(1 for _ in iter_class_multisets(n, k))
    brute = brute_orbit_count(n, k, palette)
    assert ours == brute
    if expected is not None:
        assert ours == expected


def test_every_output_has_exact_list_sizes():
    g = complete_multipartite([2, 2])
    for classes in iter_class_multisets(4, 2):
        L = to_assignment(g, classes)
        assert all(len(lst) == 2 for lst in L.lists)


def test_size_range():
    got = list(iter_class_multisets(3, 1, 2))
    for classes in got:
        counts = [sum(1 for m in classes if m >> v & 1) for v in range(3)]
        assert all(1 <= c <= 2 for c in counts)
    assert len(got) > sum(1 for _ in iter_class_multisets(3, 1))


def test_lexicographic_and_unique():
    pos = {m: i for i, m in enumerate(class_order(4))}
    seqs = [tuple(pos[m] for m in c) for c in iter_class_multisets(4, 2)]
    assert seqs == sorted(seqs)
    assert len(set(seqs)) == len(seqs)
    assert all(list(s) == sorted(s) for s in seqs)


def test_first_partitions_the_space():
    whole = list(iter_class_multisets(4, 2))
    pieces = []
    for first in range(len(class_order(4))):
        pieces += list(iter_class_multisets(4, 2, first=first))
    assert pieces == whole


def test_canonical_round_trip():
    g = complete_multipartite([3, 2])
    for classes in itertools.islice(iter_class_multisets(5, 2), 300):
        L = to_assignment(g, classes)
        assert canonical_classes(L) == classes
        renamed = L.from_mapping(g, {g.labels[v]: [f"z{c[1:]}" for c in L.lists[v]][::-1] for v in g.vertices})
        assert canonical_classes(renamed) == classes


def test_class_order():
    assert class_order(2) == [3, 1, 2]
