#pragma once

#include <vector>

namespace swarmplan {

// Task-to-UAV mapping: one ordered task-index tour per UAV (open tours,
// flown from the UAV start without returning). Empty tours are allowed.
struct Assignment {
    std::vector<std::vector<int>> tours;
};

// Throws AssignmentError unless every index in [0, n_tasks) appears in
// exactly one tour exactly once.
void validate_assignment(const Assignment& assignment, int n_tasks);

} // namespace swarmplan
