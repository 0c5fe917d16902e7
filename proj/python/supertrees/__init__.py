"""Spectral toolkit for k-uniform supertrees."""

from ._core import (
    BFSOrdering,
    BFSSupertree,
    ConvergenceError,
    DegreeSequence,
    Error,
    Hypergraph,
    RankedEntry,
    Report,
    SpectralResult,
    Supertree,
    apply_A,
    apply_Q,
    bfs_clause_a,
    bfs_clause_b,
    bfs_clause_c,
    bfs_clause_d,
    bfs_heights_consistent,
    bfs_supertree,
    branch_collapse,
    canonical_code,
    canonical_code_marked,
    conjecture_scan,
    diameter,
    distances_from,
    edge_release,
    enumerate_supertrees,
    graft_step,
    graph_from_json,
    graph_to_json,
    hyperstar,
    is_bfs_ordering,
    is_pendent_edge,
    is_power_hypertree,
    isomorphic,
    known_claims,
    load_graph,
    loose_path,
    matrix_oracle_q,
    move_edges,
    oracle_rayleigh_max,
    pendant_degree_sequence,
    pendent_counts,
    power_k,
    rank_by_q,
    rayleigh,
    relabel,
    s1,
    s2,
    s3,
    s4,
    save_graph,
    spectral_radius,
    t1,
    two_switch,
    validate_supertree,
    verify,
    vertex_orbits,
)

__all__ = [
    "BFSOrdering",
    "BFSSupertree",
    "ConvergenceError",
    "DegreeSequence",
    "Error",
    "Hypergraph",
    "RankedEntry",
    "Report",
    "SpectralResult",
    "Supertree",
    "apply_A",
    "apply_Q",
    "bfs_clause_a",
    "bfs_clause_b",
    "bfs_clause_c",
    "bfs_clause_d",
    "bfs_heights_consistent",
    "bfs_supertree",
    "branch_collapse",
    "canonical_code",
    "canonical_code_marked",
    "conjecture_scan",
    "diameter",
    "distances_from",
    "edge_release",
    "enumerate_supertrees",
    "graft_step",
    "graph_from_json",
    "graph_to_json",
    "hyperstar",
    "is_bfs_ordering",
    "is_pendent_edge",
    "is_power_hypertree",
    "isomorphic",
    "known_claims",
    "load_graph",
    "loose_path",
    "matrix_oracle_q",
    "move_edges",
    "oracle_rayleigh_max",
    "pendant_degree_sequence",
    "pendent_counts",
    "power_k",
    "rank_by_q",
    "rayleigh",
    "relabel",
    "s1",
    "s2",
    "s3",
    "s4",
    "save_graph",
    "spectral_radius",
    "t1",
    "two_switch",
    "validate_supertree",
    "verify",
    "vertex_orbits",
]
