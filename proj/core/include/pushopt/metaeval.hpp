#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "pushopt/interpreter.hpp"
#include "pushopt/landscape.hpp"

namespace pushopt {

/// Population size and number of moves for one optimisation run; their
/// product is the FE budget (initial evaluations are charged on top).
struct RunConfig {
    std::size_t popsize = 50;
    std::size_t moves = 20;
    std::size_t repeats = 10;
    bool transforms = true;
    std::uint64_t seed = 1;
    ExecutionLimits limits;

    std::size_t budget() const { return popsize * moves; }
    void validate() const;
};

/// Pushed to the float stack after an out-of-bounds proposal. Finite so no
/// stack ever holds an infinity, but worse than any objective value.
inline constexpr double out_of_bounds_value = std::numeric_limits<double>::max();

struct MemberState {
    InterpreterState program;
    double value;   // objective at the current point
    double bestval; // objective at the member's best point
};

/// State of one optimisation run. Points live in `points` / `bests` (one
/// entry per member) so that the swarm view can reference them directly.
struct SwarmRun {
    std::vector<MemberState> members;
    std::vector<SearchVector> points;
    std::vector<SearchVector> bests;
    double pbest = std::numeric_limits<double>::infinity();
    std::size_t pbest_index = 0;
    std::size_t move = 0;
    std::size_t evaluations = 0;

    std::size_t popsize() const { return members.size(); }
    SwarmView view_for(std::size_t member) const { return {points, bests, member}; }
};

struct TraceRecord {
    std::size_t repeat = 0;
    std::size_t move = 0; // 0 for the initial point
    std::size_t member = 0;
    SearchVector point;
    double value = 0.0; // out_of_bounds_value when not evaluated
    bool improved = false;
    bool in_bounds = false;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using TraceSink = std::vector<TraceRecord>;

/// Appends a member starting at `point`: fresh stacks, the point evaluated
/// (1 FE) and handed to the program together with its value, `true`, and
/// the search bounds on the input stack.
void init_member(SwarmRun& run, const Landscape& landscape, SearchVector point, std::uint64_t program_seed,
                 const ExecutionLimits& limits, TraceSink* trace = nullptr, std::size_t repeat = 0);

/// Same, with a uniformly random in-bounds starting point.
void init_member(SwarmRun& run, const Landscape& landscape, Rng& rng, const ExecutionLimits& limits,
                 TraceSink* trace = nullptr, std::size_t repeat = 0);

/// One sweep over all members in index order: each runs the program once
/// and its proposal (the top of its vector stack) is evaluated if in bounds.
void swarm_move(SwarmRun& run, const Program& program, const Landscape& landscape, TraceSink* trace = nullptr,
                std::size_t repeat = 0);

struct RepeatResult {
    double pbest = 0.0;
    std::size_t evaluations = 0;
    SearchVector best_point;
    std::uint64_t seed = 0;

    friend bool operator==(const RepeatResult&, const RepeatResult&) = default;
};

struct EvalReport {
    std::vector<RepeatResult> repeats;
    double fitness = 0.0; // mean pbest over repeats

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Mean best error of `program` over config.repeats independent runs. Each
/// repeat draws its own stream from (config.seed, repeat) and, with
/// transforms on, a fresh random transform of `landscape`.
EvalReport evaluate_optimiser(const Program& program, const LandscapePtr& landscape, const RunConfig& config,
                              TraceSink* trace = nullptr);

/// Repeat `repeat` of evaluate_optimiser on its own; repeats are independent.
RepeatResult run_repeat(const Program& program, const LandscapePtr& landscape, const RunConfig& config,
                        std::size_t repeat, TraceSink* trace = nullptr);

/// Same report as evaluate_optimiser, with repeats spread over `jobs` threads.
EvalReport evaluate_optimiser_parallel(const Program& program, const LandscapePtr& landscape,
                                       const RunConfig& config, std::size_t jobs);

struct TraceResult {
    EvalReport report;
    TraceSink records;
};

TraceResult trace_run(const Program& program, const LandscapePtr& landscape, const RunConfig& config);

} // namespace pushopt
