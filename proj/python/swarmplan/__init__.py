"""B-spline swarm trajectory optimization toolkit.

Python bindings over the C++ core: PE-PSO trajectory planning, GA task
allocation, mission simulation, and the analytic benchmark harness.
"""

from ._core import (  # noqa: F401
    BSpline,
    Scenario,
    SwarmplanError,
    __version__,
    adapt_params,
    arc_length,
    basis,
    benchmark_names,
    brute_force_allocation,
    clearance,
    compute_entropy,
    evaluate_benchmark,
    is_legal,
    load_scenario,
    load_scenario_file,
    make_clamped_knots,
    minimize,
    minimize_benchmark,
    plan_leg,
    run_mission,
    save_scenario,
    select_worst,
    solve_allocation,
    trajectory_cost,
)
