"""Cayley graphs of symmetric groups generated by transposition graphs:
construction, structure checks, restricted vertex connectivity with
certificates, and an executable claim harness."""

from .permutation import (
    apply_transposition,
    format_permutation,
    identity,
    parity,
    parse_permutation,
    rank,
    unrank,
)
from .gengraph import (
    GenGraph,
    KTreeBuildTrace,
    build_k_tree,
    build_named,
    edge_count_formula_check,
    find_triangle,
    format_edgelist,
    is_connected_gengraph,
    is_k_tree,
    parse_edgelist,
)
from .cayley import (
    CapacityError,
    CayleyGraph,
    CopyDecomposition,
    FourCycle,
    common_neighbors,
    cross_edges,
    decompose,
    decomposition_summary,
    find_type_a_cycle,
    find_type_b_cycle,
    girth,
    k24_free_check,
    outsider_neighbors,
)
from .connectivity import (
    CutCertificate,
    SearchReport,
    brute_force_min_rk_cut,
    components,
    is_rk_cut,
    kappa1_search,
    min_rk_cut_search,
    neighborhood_cut_of_cycle,
    verify_certificate,
    vertex_connectivity,
)
from .claims import (
    CheckResult,
    ConjectureDataPoint,
    explore_conjecture,
    run_suite,
    theorem2_property_test,
    verify_corollary10,
    verify_corollary_kappa1,
    verify_lemma1,
    verify_main_theorem,
)

__version__ = "0.1.0"
