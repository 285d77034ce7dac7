"""Source-target-aware spherical partitioning for point-to-point routing.

The router cuts a query inside the last nonempty overlap of hop spheres
grown around the two terminals, recursing until every induced sphere fits
a radius cap; the resulting independent subproblems are solved with a
pluggable shortest-path solver and concatenated at their anchors into a
feasible route. An exact Dijkstra reference, two partition baselines, and
a seeded benchmark harness round out the package.
"""

__version__ = "0.1.0"

from .baselines import (
    BaselineStats,
    CellPartition,
    CommunityPartition,
    cells_from_labels,
    corridor_route,
    dijkstra_full,
    grow_cells,
    louvain,
    louvain_route,
    modularity,
)
from .bench import (
    AggregateRow,
    DominanceReport,
    ExperimentConfig,
    ExperimentRecord,
    ProfileCurve,
    accuracy_profile,
    aggregate,
    dominance_table,
    gap,
    pareto_dominance,
    performance_profile,
    profiles_from_aggregate,
    run_experiment,
    sample_st,
)
from .errors import (
    DisconnectedError,
    GraphParseError,
    IncompleteRunError,
    InvariantError,
    RuleViolationError,
    SphereRouteError,
    StalledRuleError,
)
from .graph import (
    Graph,
    SubgraphView,
    extract_largest_component,
    induced_subgraph,
    is_connected,
    load_graph,
    parse_dimacs_gr,
    read_dimacs,
    walk_cost,
    write_dimacs,
)
from .kernels import backend_name
from .partition import (
    CutResult,
    PartitionConfig,
    RadiusPair,
    RuleSet,
    TaskTriple,
    anchor_uniform,
    default_decru,
    default_rules,
    default_staru,
    partition_cut,
    sph_partition,
)
from .router import Route, RunStats, SolverSpec, register_solver, route, solve_tasks
from .search import HopDistances, Path, bfs_hops, dijkstra, hop_distance
from .sphere import SphereSet, induced_sphere, overlap, sphere, spherical_subgraph

__all__ = [
    "AggregateRow",
    "BaselineStats",
    "CellPartition",
    "CommunityPartition",
    "CutResult",
    "DisconnectedError",
    "DominanceReport",
    "ExperimentConfig",
    "ExperimentRecord",
    "Graph",
    "GraphParseError",
    "HopDistances",
    "IncompleteRunError",
    "InvariantError",
    "PartitionConfig",
    "Path",
    "ProfileCurve",
    "RadiusPair",
    "Route",
    "RuleSet",
    "RuleViolationError",
    "RunStats",
    "SolverSpec",
    "SphereRouteError",
    "SphereSet",
    "StalledRuleError",
    "SubgraphView",
    "TaskTriple",
    "accuracy_profile",
    "aggregate",
    "anchor_uniform",
    "backend_name",
    "bfs_hops",
    "cells_from_labels",
    "corridor_route",
    "default_decru",
    "default_rules",
    "default_staru",
    "dijkstra",
    "dijkstra_full",
    "dominance_table",
    "extract_largest_component",
    "gap",
    "grow_cells",
    "hop_distance",
    "induced_sphere",
    "induced_subgraph",
    "is_connected",
    "load_graph",
    "louvain",
    "louvain_route",
    "modularity",
    "overlap",
    "pareto_dominance",
    "parse_dimacs_gr",
    "partition_cut",
    "performance_profile",
    "profiles_from_aggregate",
    "read_dimacs",
    "register_solver",
    "route",
    "run_experiment",
    "sample_st",
    "solve_tasks",
    "sph_partition",
    "sphere",
    "spherical_subgraph",
    "walk_cost",
    "write_dimacs",
]
