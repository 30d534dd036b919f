"""Connectivity-preserving Hamiltonian cycles in dense graphs."""

from ._hampreserve import (
    BoundViolationError,
    DomainError,
    ExceptionalInputError,
    ExtractionFailureError,
    Graph,
    InfeasibleError,
    InternalConsistencyError,
    NotApplicableError,
    ParseError,
    PreserveCertificate,
    SizeError,
    StaleCertificateError,
    brute_ham_enum,
    brute_kappa,
    brute_max_pairs,
    brute_preserving_exists,
    can_decompose,
    ch_sufficient,
    decompose_into_pairs,
    disjoint_paths,
    edge_disjoint_ham_paths,
    gen_barbell_dirac,
    gen_ch_tightness,
    gen_dirac,
    graph_hash,
    ham_cycle_backtracking,
    ham_cycle_dirac,
    ham_path_between,
    is_connected,
    is_k_connected,
    kappa,
    max_edge_disjoint_pairs,
    min_vertex_cut,
    phi,
    preserve_exact,
    preserve_many,
    preserve_one,
    read_graph,
    read_graph_file,
    remove_edges,
    verify_certificate,
    write_edge_list,
)

__all__ = [name for name in dir() if not name.startswith("_")]
