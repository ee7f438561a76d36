"""Hamilton-circuit generation of the GF(2) cycle space, exactly on small
graphs and by Monte Carlo on binomial random graphs."""

__version__ = "0.1.0"

from hamspan.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    delete_vertex,
    gen_gnp,
    gen_k_hat,
    gen_square_cycle,
    path_graph,
    read_graph,
    structural_predicates,
    write_graph,
)
from hamspan.gf2 import EdgeVector, Gf2Basis, rank_of, vector_add
from hamspan.cycle_space import fundamental_cycle_basis, is_cycle, quotient_dim
from hamspan.hamilton import (
    HamStatus,
    enumerate_circuits_of_length,
    enumerate_hamilton_circuits,
    hamilton_generated_status,
    is_hamilton_connected,
    long_path_connected,
    m_class_membership,
    near_hamilton_span_full,
)

__all__ = [
    "Graph", "GraphError", "complete_graph", "cycle_graph", "delete_vertex",
    "gen_gnp", "gen_k_hat", "gen_square_cycle", "path_graph", "read_graph",
    "structural_predicates", "write_graph",
    "EdgeVector", "Gf2Basis", "rank_of", "vector_add",
    "fundamental_cycle_basis", "is_cycle", "quotient_dim",
    "HamStatus", "enumerate_circuits_of_length", "enumerate_hamilton_circuits",
    "hamilton_generated_status", "is_hamilton_connected", "long_path_connected",
    "m_class_membership", "near_hamilton_span_full",
]
