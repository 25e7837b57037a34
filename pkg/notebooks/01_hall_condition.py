"""Hall's condition on the smallest interesting example.

The 4-cycle K(2,2) with lists {a,b}, {c}, {a,c}, {b,c} passes every Hall
inequality with zero slack, yet has no proper list coloring.  On a clique
the two notions coincide, which we spot-check at the end.
"""

import random

from hallnum import (ListAssignment, check_hall_exhaustive, colorable_complete, complete_graph, find_coloring,
                     independence_number, k22_instance, support_subgraph)

g, L = k22_instance()
print("lists:", L.as_dict())

# one alpha per colour; their sum is compared with |V|
for colour in L.palette:
    h = support_subgraph(L, None, colour)
    print(f"  colour {colour}: support {list(h.labels)}, alpha {independence_number(h)}")

report = check_hall_exhaustive(L)
print("Hall:", report.status, "worst margin", report.worst_margin)
print("colorable:", find_coloring(L).colorable)

# every deletion can be colored, so the example is minimal
for v in g.vertices:
    out = find_coloring(L.delete_vertex(v))
    print(f"  without {g.labels[v]}: {out.coloring.as_dict()}")

# on cliques, colorable <=> Hall
rng = random.Random(0)
agree = 0
for _ in range(2000):
    n = rng.randint(1, 6)
    pal = "abcdefgh"[: rng.randint(1, 8)]
    lists = tuple(tuple(rng.sample(pal, rng.randint(1, len(pal)))) for _ in range(n))
    L = ListAssignment(complete_graph(n), lists)
    agree += colorable_complete(L) == check_hall_exhaustive(L).satisfied
print(f"cliques: {agree}/2000 agree")
