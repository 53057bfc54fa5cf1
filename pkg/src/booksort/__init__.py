"""Exact toolkit for the one-dimensional book-shifting (mixing) problem.

Four equivalent views of the same sorting task: binary densities under
elementary block transpositions, signed run-length series under pair
permutations, admissible (non-crossing) rooted trees with an exact cost
functional, and layered branched transport graphs.  All arithmetic is
exact rational.
"""

from .density import (
    BinaryDensity,
    ElementaryOp,
    FlowMap,
    SortingPlan,
    apply_elementary,
    density_to_series,
    flow_map_apply,
    flow_map_cost,
    is_kappa_mixed,
    mass_bounds_check,
    prefix_mass,
    proof_lower_bound,
    series_plan_to_sorting_plan,
    series_to_density,
    terminal_density,
    total_mass,
    validate_plan,
)
from .errors import (
    BooksortError,
    CapacityError,
    NotMixedError,
    OperationRejectedError,
    PlanError,
)
from .graphio import (
    GraphEdge,
    GraphVertex,
    TransportGraph,
    build_graph,
    crossing_free,
    graph_cost,
    kirchhoff_check,
    to_dot,
)
from .rational import format_rational, parse_rational
from .series import (
    AlternatingSeries,
    Instance,
    SeriesPlan,
    instance_to_series,
    permute,
    replay,
    replay_steps,
    to_instance,
    uniform_alternating_instance,
)
from .solver import (
    BenchRow,
    BoundReport,
    Solution,
    compare_bound,
    scaling_experiment,
    solve_bruteforce,
    solve_dp,
)
from .trees import (
    DepthVector,
    ParentFunction,
    catalan,
    depth_to_parent,
    enumerate_admissible,
    generation,
    is_admissible,
    plan_to_tree,
    tree_cost,
    tree_cost_coefficients,
    tree_to_plan,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingSeries",
    "BenchRow",
    "BinaryDensity",
    "BooksortError",
    "BoundReport",
    "CapacityError",
    "DepthVector",
    "ElementaryOp",
    "FlowMap",
    "GraphEdge",
    "GraphVertex",
    "Instance",
    "NotMixedError",
    "OperationRejectedError",
    "ParentFunction",
    "PlanError",
    "SeriesPlan",
    "Solution",
    "SortingPlan",
    "TransportGraph",
    "apply_elementary",
    "build_graph",
    "catalan",
    "compare_bound",
    "crossing_free",
    "density_to_series",
    "depth_to_parent",
    "enumerate_admissible",
    "flow_map_apply",
    "flow_map_cost",
    "format_rational",
    "generation",
    "graph_cost",
    "instance_to_series",
    "is_admissible",
    "is_kappa_mixed",
    "kirchhoff_check",
    "mass_bounds_check",
    "parse_rational",
    "permute",
    "plan_to_tree",
    "prefix_mass",
    "proof_lower_bound",
    "replay",
    "replay_steps",
    "scaling_experiment",
    "series_plan_to_sorting_plan",
    "series_to_density",
    "solve_bruteforce",
    "solve_dp",
    "terminal_density",
    "to_dot",
    "to_instance",
    "total_mass",
    "tree_cost",
    "tree_cost_coefficients",
    "tree_to_plan",
    "uniform_alternating_instance",
    "validate_plan",
]
