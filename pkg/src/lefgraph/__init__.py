"""Exact Lefschetz fixed-point invariants of finite simple graphs.

Everything is computed over arbitrary-precision rationals: clique complexes,
simplicial cohomology, fixed-simplex indices, Lefschetz numbers by several
independent routes, automorphism averages and curvature, and dynamical zeta
functions with their orbit-census factorizations.
"""

from .complexes import CliqueComplex, Simplex, build_complex, euler_characteristic
from .cohomology import (
    CochainSpaces,
    betti_numbers,
    coboundary_matrix,
    pullback,
    pullback_matrix,
)
from .dynamics import (
    Attractor,
    BrouwerReport,
    FixedSimplexRecord,
    GraphMap,
    MapError,
    attractor,
    brouwer_check,
    fixed_index_sum,
    fixed_simplices,
    identity_map,
    is_star_shaped,
    lefschetz_chain,
    lefschetz_cohomological,
    random_endomorphism,
    validate_map,
)
from .experiments import expectation_exhaustive, expectation_sampled
from .graphs import (
    Graph,
    GraphError,
    GraphFormatError,
    all_graphs,
    connected_components,
    disjoint_union,
    format_edge_list,
    graph_count,
    named_graph,
    parse_edge_list,
    random_graph,
    read_graph,
)
from .linalg import (
    RationalMatrix,
    det_one_minus_z,
    nullspace,
    rank,
    solve_in_span,
)
from .reporting import TheoremCheck
from .symmetry import (
    AutomorphismGroup,
    CurvatureTable,
    Orbigraph,
    SymmetryError,
    automorphism_group,
    average_lefschetz,
    lefschetz_curvature,
    lefschetz_multiset,
    orbigraph,
    simplex_orbits,
    stabilizer,
    verify_averaging_theorems,
)
from .zeta import (
    OrbitCensus,
    RationalFunctionZ,
    ZetaError,
    graph_zeta,
    orbit_census,
    series_consistency,
    zeta_det,
    zeta_product,
)

__version__ = "0.1.0"
