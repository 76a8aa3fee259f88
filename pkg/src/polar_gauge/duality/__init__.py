# duality/__init__.py

from .instances import (
    BUNDLED_INSTANCE,
    SparseInstance,
    load_descriptor,
    load_problem,
    make_sparse_instance,
    problem_from_descriptor,
)
from .problem import (
    GaugeDualProblem,
    constraint_margin,
    dual_objective,
    dual_start,
    dual_value,
    feasibility_residual,
    primal_objective,
    project_dual_feasible,
)
from .solvers import (
    lagrange_dual_value,
    recover_primal,
    solve_gauge_dual,
    solve_lagrange_baseline,
)

__all__ = [
    # instances
    "BUNDLED_INSTANCE",
    "SparseInstance",
    "load_descriptor",
    "load_problem",
    "make_sparse_instance",
    "problem_from_descriptor",
    # problem
    "GaugeDualProblem",
    "constraint_margin",
    "dual_objective",
    "dual_start",
    "dual_value",
    "feasibility_residual",
    "primal_objective",
    "project_dual_feasible",
    # solvers
    "lagrange_dual_value",
    "recover_primal",
    "solve_gauge_dual",
    "solve_lagrange_baseline",
]
