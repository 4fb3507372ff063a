"""cyclehit: t-factors of regular multigraphs meeting prescribed cycle sets.

Constructive pipelines (vertex expansion by gadget trees, even-indegree
orientations, vertex splitting), explicit counterexample family generators,
and an independent exact brute-force oracle.
"""

from .cycles import (
    CycleSet,
    cycle_decomposition,
    cycle_vertices,
    parse_cycles,
    serialize_cycles,
)
from .expansion import (
    ExpansionMap,
    cubic_expansion,
    project_factor,
    serialize_expansion_map,
    split_expansion,
)
from .factors import (
    MODES,
    Factor,
    first_unbalanced_vertex,
    parse_factor,
    serialize_factor,
    two_factorization,
    verify_factor,
    verify_intersections,
)
from .families import (
    FamilyInstance,
    gen_doubled,
    gen_sec6_2k,
    gen_thm4,
    gen_thm5,
    petersen,
    petersen_cycles,
)
from .gadgets import (
    GadgetTree,
    build_even_leaf_tree,
    build_gadget_tree,
    lonely_pendant_edges,
    matched_leaf_count,
    serialize_gadget_tree,
)
from .instances import pack_cycles, random_regular_multigraph
from .multigraph import (
    FormatError,
    GraphError,
    Multigraph,
    parse_multigraph,
    serialize_multigraph,
    two_edge_cut_sides,
    vertex_connectivity,
)
from .orientation import (
    Orientation,
    parse_orientation,
    serialize_orientation,
    verify_orientation,
)
from .pipelines import (
    PipelineReport,
    extend_factor,
    half_arbitrary_pipeline,
    half_pipeline,
    orient_even_indegree,
    third_arbitrary_pipeline,
    third_pipeline,
)
from .solver import (
    BUDGET_EXCEEDED,
    SAT,
    UNSAT,
    BudgetExceededError,
    OracleVerdict,
    SearchBudget,
    bipartite_alternating_matching,
    constrained_perfect_matching,
    enumerate_t_factors,
    t_factor_oracle,
    two_cut_recursion,
)

__version__ = "1.0.0"
