"""Certifying extraction of keyrings from graphs with more than (k-1)n/2 edges."""

from .closure import (ClosureFamily, ClosureSet, absorbable_component, check_property_a,
                      check_property_b, close_under_paths, merge_family)
from .cycles import (Budget, enumerate_cycles_through, find_cycle_through, find_long_cycle,
                     find_long_path_between, is_cycle, is_path)
from .errors import (GraphInputError, InternalInvariantError, KeyringError, NotDenseError,
                     ParameterRangeError, PreconditionError, SearchBudgetExceeded)
from .graph import (Graph, build_graph, crossing_edges, degree, induced_subgraph, is_dense,
                    parse_edge_list, read_edge_list)
from .keyring import (Keyring, NeighborSplit, extract, extract_keyring, find_keyring_any_r,
                      split_neighbors, verify_keyring)
from .lemma import (ContractedGraph, HeavyCycleWitness, build_residual_closures, contract,
                    find_heavy_cycle, heavy_vertex_scan, lift_cycle)
from .oracle import oracle_exists_keyring, oracle_find_keyring

__version__ = "0.1.0"
