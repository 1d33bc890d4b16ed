#include "pushopt/throughput.hpp"

#include <chrono>

#include "pushopt/evolve.hpp"

namespace pushopt {

ThroughputResult measure_throughput(std::span<const Program> programs, std::size_t dim, std::size_t min_steps,
                                    std::uint64_t seed, const ExecutionLimits& limits)
{
    ThroughputResult result;
    if (programs.empty()) return result;

    Rng rng = make_rng(seed, {0});
    constexpr std::size_t swarm = 8;
    std::vector<SearchVector> points(swarm, SearchVector(dim));
    for (auto& p : points)
        for (double& x : p) x = uniform_real(rng, -5.0, 5.0);
    const std::vector<SearchVector> bests = points;

    std::vector<InterpreterState> states;
    states.reserve(programs.size());
    for (std::size_t i = 0; i < programs.size(); ++i) {
        InterpreterState st(dim, derive_seed(seed, {1, i}), limits);
        st.vectors.push(points[i % swarm]);
        st.floats.push(1.0);
        st.booleans.push(true);
        st.inputs = {-5.0, 5.0};
        states.push_back(std::move(st));
    }

    const auto start = std::chrono::steady_clock::now();
    std::int64_t move = 0;
    while (result.steps < min_steps) {
        ++move;
        for (std::size_t i = 0; i < programs.size(); ++i) {
            InterpreterState& st = states[i];
            st.integers.push(move);
            st.integers.push(static_cast<std::int64_t>(i % swarm));
            st.integers.push(0);
            run_move(st, programs[i], SwarmView{points, bests, i % swarm});
            result.steps += st.executions;
            ++result.moves;
            st.booleans.push(move % 2 == 0);
            st.floats.push(static_cast<double>(move));
        }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<Program> throughput_workload(std::size_t count, std::uint64_t seed, const ExecutionLimits& limits)
{
    const GeneSet genes(default_instruction_set_names());
    Rng rng = make_rng(seed, {2});
    std::vector<Program> programs;
    programs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) programs.push_back(random_program(rng, limits.max_program_size, genes));
    return programs;
}

} // namespace pushopt
