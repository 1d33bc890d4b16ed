#pragma once

#include <cstdint>
#include <span>

#include "pushopt/interpreter.hpp"

namespace pushopt {

struct ThroughputResult {
    std::size_t steps = 0;
    std::size_t moves = 0;
    double seconds = 0.0;

    double steps_per_second() const { return seconds > 0.0 ? static_cast<double>(steps) / seconds : 0.0; }
};

/// Runs moves of `programs` (round robin, one interpreter state each) on a
/// single thread until at least `min_steps` instructions have executed. The
/// states are fed like swarm members: a search point, its value and the
/// move counters, and see a small swarm of random points.
ThroughputResult measure_throughput(std::span<const Program> programs, std::size_t dim, std::size_t min_steps,
                                    std::uint64_t seed, const ExecutionLimits& limits = {});

/// Fixed workload of random default-instruction-set programs at the size limit.
std::vector<Program> throughput_workload(std::size_t count, std::uint64_t seed, const ExecutionLimits& limits = {});

} // namespace pushopt
