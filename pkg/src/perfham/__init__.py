"""Perfect pairs, 1-factorisations and Kempe classes of regular graphs."""

from ._backend import BACKEND
from .analysis import (CharonianVerdict, euler_stats, hamiltonian_pair_census, is_charonian,
                       is_strongly_charonian, verify_ph_connectivity)
from .constructions import (ConstructionError, block_chain, charonian_chain, divorce, marriage,
                            suitability_check, triangle_glue, vertex_substitution)
from .factorisation import (ColouringError, EdgeColouring, Failure, PerfectPairProfile,
                            bounded_factorisation, count_perfect_pairs, enumerate_factorisations,
                            extend_two_factor, is_perfectly_hamiltonian, parity_check, peel,
                            perfect_pairs, spectrum, three_edge_colour_cubic)
from .formats import FormatError, read_cel, read_graph6, read_planar_code, write_cel, write_graph6
from .graph import (EdgeCut, Graph, GraphError, RotationSystem, bridges, diamonds, edge_connectivity,
                    edge_cut, essential_edge_connectivity, face_vector, vertex_connectivity)
from .hamilton import count_hamiltonian_cycles, hamiltonian_cycles, two_factors
from .iso import canonical_form, is_isomorphic
from .kempe import KempePartition, bichromatic_components, kempe_classes, kempe_switch

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CharonianVerdict", "ColouringError", "ConstructionError", "EdgeColouring", "EdgeCut",
    "Failure", "FormatError", "Graph", "GraphError", "KempePartition", "PerfectPairProfile",
    "RotationSystem", "bichromatic_components", "block_chain", "bounded_factorisation", "bridges",
    "canonical_form", "charonian_chain", "count_hamiltonian_cycles", "count_perfect_pairs",
    "diamonds", "divorce", "edge_connectivity", "edge_cut", "enumerate_factorisations",
    "essential_edge_connectivity", "euler_stats", "extend_two_factor", "face_vector",
    "hamiltonian_cycles", "hamiltonian_pair_census", "is_charonian", "is_isomorphic",
    "is_perfectly_hamiltonian", "is_strongly_charonian", "kempe_classes", "kempe_switch",
    "marriage", "parity_check", "peel", "perfect_pairs", "read_cel", "read_graph6",
    "read_planar_code", "spectrum", "suitability_check", "three_edge_colour_cubic",
    "triangle_glue", "two_factors", "verify_ph_connectivity", "vertex_connectivity",
    "vertex_substitution", "write_cel", "write_graph6",
]
