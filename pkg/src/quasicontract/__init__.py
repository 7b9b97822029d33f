"""Quasi k-connectivity, edge contraction and forbidden-pair verification for small graphs."""

from __future__ import annotations

from .connectivity import (
    Cut,
    CutClass,
    Separation,
    brute_force_connectivity,
    cyclic_edge_connectivity,
    enumerate_cuts,
    is_cyclically_4_connected_cubic,
    is_k_connected,
    is_quasi_k_connected,
    vertex_connectivity,
)
from .constructors import construct
from .contraction import (
    ContractionResult,
    QuasiFragment,
    Verdict,
    classify_contraction,
    contract_edge,
    contract_subgraph,
    is_contraction_critical,
    is_k_contractible,
    min_degree_pretest,
    quasi_atom,
    quasi_contractible_edges,
    quasi_fragments,
)
from .generators import HandleSite, add_handle, enumerate_small_graphs, generate_ccc4
from .graph import (
    Graph,
    complement,
    copies,
    degree,
    disjoint_union,
    induced,
    join,
    line_graph,
    min_degree,
    neighborhood,
)
from .graph6 import decode as graph6_decode, encode as graph6_encode
from .patterns import (
    NeighborhoodType,
    PatternMatch,
    canonical_form,
    classify_neighborhood,
    contains_subgraph,
    forbidden_pair_free,
    is_isomorphic,
)

__all__ = [
    "ContractionResult", "Cut", "CutClass", "Graph", "HandleSite", "NeighborhoodType", "PatternMatch",
    "QuasiFragment", "Separation", "Verdict", "add_handle", "brute_force_connectivity", "canonical_form",
    "classify_contraction", "classify_neighborhood", "complement", "construct", "contains_subgraph",
    "contract_edge", "contract_subgraph", "copies", "cyclic_edge_connectivity", "degree", "disjoint_union",
    "enumerate_cuts", "enumerate_small_graphs", "forbidden_pair_free", "generate_ccc4", "graph6_decode",
    "graph6_encode", "induced", "is_contraction_critical", "is_cyclically_4_connected_cubic",
    "is_isomorphic", "is_k_connected", "is_k_contractible", "is_quasi_k_connected", "join", "line_graph",
    "min_degree", "min_degree_pretest", "neighborhood", "quasi_atom", "quasi_contractible_edges",
    "quasi_fragments", "vertex_connectivity",
]
