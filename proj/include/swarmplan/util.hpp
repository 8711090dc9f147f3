#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace swarmplan {

// Deterministic seed mixing for deriving sub-seeds (per UAV, per leg, per run).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Shortest representation that round-trips a double exactly; used for all
// CSV/report output so identical values always serialize to identical bytes.
inline std::string format_double(double v) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

// Thread budget for internal parallelism: SWARMPLAN_THREADS, 0 or unset = auto.
int thread_budget();

} // namespace swarmplan
