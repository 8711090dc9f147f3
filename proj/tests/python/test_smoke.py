"""Smoke tests for the swarmplan python module (run under ctest)."""

import json
import math
import sys

import swarmplan as sp

SCENARIO = {
    "bounds": {"min": [0, 0, 0], "max": [100, 100, 100]},
    "obstacles": [{"center": [50, 50, 50], "radius": 8}],
    "uavs": [{"start": [10, 50, 50], "energy_budget": 1000}],
    "tasks": [[90, 50, 50], [90, 80, 50]],
    "r_safe": 1.5,
    "cruise_speed": 5.0,
    "weights": {"trajectory": [1, 50, 5, 0.01, 1], "allocation": [1, 1, 1]},
    "energy_coeffs": {"alpha": 1.0, "beta": 0.01},
}


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_geometry():
    assert sp.make_clamped_knots(5, 4) == [0, 0, 0, 0, 0.5, 1, 1, 1, 1]
    approx(sp.basis(0, 2, 0.25, [0, 0, 1, 1]), 0.75)
    spline = sp.BSpline(2, [[0, 0, 0], [2, 0, 0]])
    approx(spline.evaluate(0.5)[0], 1.0)
    approx(spline.velocity(0.25)[0], 2.0)
    sampled = spline.sample(9, with_velocity=True)
    assert len(sampled["positions"]) == 9
    approx(sp.arc_length([0, 1], [[0, 0, 0], [3, 4, 0]]), 5.0)
    try:
        sp.make_clamped_knots(3, 4)
    except sp.SwarmplanError:
        pass
    else:
        raise AssertionError("expected SwarmplanError")


def test_entropy_and_selection():
    approx(sp.compute_entropy([1.0, 1.0, 2.0, 2.0], 2), math.log(2))
    assert sp.compute_entropy([5.0, 5.0, 5.0], 10) == 0.0
    assert sp.select_worst(list(range(1, 11)), 0.5) == [5, 6, 7, 8, 9]
    assert sp.adapt_params(0.0) == (0.4, 2.0, 1.0)
    w, c1, c2 = sp.adapt_params(math.log(10) / 2)
    approx(w, 0.65)
    approx(c1, 1.5)
    approx(c2, 1.5)


def test_objectives():
    scenario = sp.load_scenario(json.dumps(SCENARIO))
    n = 25
    params = [i / (n - 1) for i in range(n)]
    positions = [[10 + 10 * t, 80, 50] for t in params]
    velocities = [[10, 0, 0]] * n
    cost = sp.trajectory_cost(scenario, params, positions, velocities)
    approx(cost["distance"], 10.0)
    assert cost["safety"] == 0.0
    assert cost["collision"] == 0.0
    approx(cost["time"], 2.0)
    assert sp.is_legal(scenario, params, positions, positions[0], positions[-1])
    # a peer sitting on the same corridor saturates the collision clamp
    cost_peer = sp.trajectory_cost(scenario, params, positions, velocities, peers=[positions])
    approx(cost_peer["collision"], 10.0)


def test_scenario_roundtrip():
    scenario = sp.load_scenario(json.dumps(SCENARIO))
    assert scenario.uav_count == 1
    assert scenario.task_count == 2
    approx(sp.clearance([10, 50, 50], scenario), math.hypot(40, 0) - 8)
    again = sp.load_scenario(sp.save_scenario(scenario))
    assert sp.save_scenario(again) == sp.save_scenario(scenario)


def test_optimizer():
    best_x, best_f = sp.minimize_benchmark("sphere", 6, iterations=100, seed=3)
    assert best_f < 1e-2, best_f
    assert len(best_x) == 6
    # custom python objective
    _, f = sp.minimize(lambda x: (x[0] - 1) ** 2 + x[1] ** 2, [-5, -5], [5, 5],
                       iterations=60, seed=1, particles=30)
    assert f < 1e-3, f
    # deterministic under seed
    _, f2 = sp.minimize_benchmark("sphere", 6, iterations=100, seed=3)
    assert f2 == best_f


def test_allocation():
    scenario = sp.load_scenario(json.dumps(SCENARIO))
    ga = sp.solve_allocation(scenario, seed=1, population=30, generations=60)
    exact = sp.brute_force_allocation(scenario)
    assert ga["total"] >= exact["total"] - 1e-9
    covered = sorted(t for tour in ga["tours"] for t in tour)
    assert covered == [0, 1]


def test_planning():
    scenario = sp.load_scenario(json.dumps(SCENARIO))
    result = sp.plan_leg(scenario, 0, 0, iterations=60, seed=5)
    assert result["found"], result
    assert result["legal"]
    end = result["path"]["positions"][-1]
    assert math.dist(end, [90, 50, 50]) < 1e-6


def test_mission():
    config = {
        "scenario": SCENARIO,
        "replan_iterations": 30,
        "max_sim_time": 120.0,
        "ga": {"population": 20, "generations": 30},
    }
    summary = sp.run_mission(json.dumps(config), seed=11)
    assert summary["completed"], summary
    assert summary["accepted"] >= 2  # two tasks, at least one leg each


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
