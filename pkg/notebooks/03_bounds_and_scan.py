"""Certified bounds on ch and h, and the h = ch scan.

Without the published choice numbers, small bipartite cases are settled by
enumerating list assignments up to colour renaming.  With them, every
complete multipartite graph up to 8 vertices is classified.
"""

import time

from hallnum import choice_number_bounds, complete_multipartite, conjecture_scan, graph_parameters

for sizes in [(2, 2), (3, 2), (4, 2)]:
    g = complete_multipartite(sizes)
    b = choice_number_bounds(g, oracle=False)
    print(g, b)
    for line in b.trace:
        print("   ", line)
    if b.lower_cert.assignment is not None:
        print("    bad lists:", b.lower_cert.assignment.as_dict())

rep = graph_parameters(complete_multipartite([2, 2, 2]))
print("K(2,2,2):", rep.chi, "|", rep.ch, "|", rep.hall, "|", rep.h_equals_ch)

t = time.perf_counter()
rows = conjecture_scan(8)
for row in rows:
    print(f"{row.name:<14}{row.status:<11}{row.report.ch!s:<16}{row.report.hall!s:<18}{row.reason}")
print(f"{len(rows)} graphs in {time.perf_counter() - t:.1f}s")
