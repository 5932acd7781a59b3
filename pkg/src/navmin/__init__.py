"""Navigation-graph minimization for position-based predictability."""

from ._kernels import KERNEL_KIND
from .candidates import CandidatePool, InfeasibleTaskError, build_candidates
from .conflict import (
    ConflictFixture,
    builtin_fixture,
    earliest_collision,
    reachable_positions,
)
from .graph import (
    DirectedGraph,
    GraphError,
    make_grid_graph,
    path_cost,
    shortest_path,
    union_subgraph,
)
from .hillclimb import (
    SearchConfig,
    SearchTrace,
    brute_force_min,
    drop_redundant_paths,
    hc_search,
    minimize,
    replace_path,
)
from .instances import (
    InfeasibleInstanceError,
    ProblemInstance,
    ResultRow,
    SweepConfig,
    random_instance,
    run_sweep,
)
from .measures import (
    PredictabilityReport,
    Solution,
    Task,
    bvc,
    gsc,
    min_wpc_shortest_path,
    nv_nbv,
    report,
    wpc,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_KIND", "CandidatePool", "InfeasibleTaskError", "build_candidates",
    "ConflictFixture", "builtin_fixture", "earliest_collision",
    "reachable_positions", "DirectedGraph", "GraphError", "make_grid_graph",
    "path_cost", "shortest_path", "union_subgraph", "SearchConfig",
    "SearchTrace", "brute_force_min", "drop_redundant_paths", "hc_search",
    "minimize", "replace_path", "InfeasibleInstanceError", "ProblemInstance",
    "ResultRow", "SweepConfig", "random_instance", "run_sweep",
    "PredictabilityReport", "Solution", "Task", "bvc", "gsc",
    "min_wpc_shortest_path", "nv_nbv", "report", "wpc",
]
