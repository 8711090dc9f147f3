#include "swarmplan/util.hpp"

#include <cstdlib>
#include <thread>

namespace swarmplan {

int thread_budget() {
    if (const char* env = std::getenv("SWARMPLAN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace swarmplan
