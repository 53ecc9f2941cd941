"""Defective Ramsey numbers and defective cocoloring in graph classes."""

from .canon import canonical_form, canonical_key, graph_from_key
from .cocolor import (
    Cocoloring,
    CocolorParams,
    Flavor,
    NeedsCandidatesError,
    cocolorable,
    disjoint_cliques,
    find_cocoloring,
    find_witnesses,
    formula_c_oracle,
    search_c_value,
    star,
    straight_lower_bound,
    straight_upper_bound,
    verify_c_value,
)
from .defect import (
    DefectParams,
    brute_force_forbidden,
    find_bounded_degree_set,
    find_k_defective_set,
    has_forbidden_set_through,
    is_k_dense,
    is_k_sparse,
)
from .generate import (
    LevelSet,
    RamseyResult,
    ResourceStop,
    SearchParams,
    extend_level,
    formula_oracle,
    read_level,
    run_ramsey,
    run_seeded,
    singleton_level,
    triangle_chain,
    write_level,
)
from .graph import (
    CapacityError,
    Graph,
    Graph6Error,
    complement,
    complete_graph,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    extend_with_vertex,
    from_edges,
    from_graph6,
    induced_subgraph,
    path_graph,
    to_graph6,
)
from .recognition import (
    GraphClass,
    enumerate_cliques,
    in_class,
    is_bipartite,
    is_chordal,
    is_cograph,
    is_perfect,
    remains_perfect_after_extension,
)

__version__ = "0.1.0"
