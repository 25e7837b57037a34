"""List coloring, Hall's condition and Hall numbers of small graphs."""

from .constructions import (ClaimReport, ConstructionSpec, k2k_instance, k4odd_instance, k22_instance,
                            k422_instance, verify_construction)
from .errors import CapabilityError, IntegrityError
from .graph import (Graph, chromatic_number, complete_graph, complete_multipartite, cycle_graph, induced_subgraph,
                    independence_number, null_graph)
from .lists import (HallReport, ListAssignment, check_hall, check_hall_exhaustive, check_hall_shortcut,
                    hall_inequality, support_subgraph)
from .params import (CertifiedBounds, apply_facts, choice_number_bounds, conjecture_scan, graph_parameters,
                     hall_number_bounds)
from .solver import Coloring, SolveOutcome, colorable_complete, find_coloring, find_sdr, verify_coloring

__version__ = "0.1.0"
