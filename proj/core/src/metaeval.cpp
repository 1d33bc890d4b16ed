#include "pushopt/metaeval.hpp"

#include <stdexcept>

#include "pushopt/parallel.hpp"

namespace pushopt {

void RunConfig::validate() const
{
    if (popsize == 0) throw std::invalid_argument("popsize must be positive");
    if (moves == 0) throw std::invalid_argument("moves must be positive");
    if (repeats == 0) throw std::invalid_argument("repeats must be positive");
    limits.validate();
}

namespace {

void record(TraceSink* trace, std::size_t repeat, std::size_t move, std::size_t member, std::span<const double> point,
            double value, bool improved, bool in_bounds)
{
    if (!trace) return;
    trace->push_back({repeat, move, member, SearchVector(point.begin(), point.end()), value, improved, in_bounds});
}

} // namespace

void init_member(SwarmRun& run, const Landscape& landscape, SearchVector point, std::uint64_t program_seed,
                 const ExecutionLimits& limits, TraceSink* trace, std::size_t repeat)
{
    if (point.size() != landscape.dimension()) throw std::invalid_argument("initial point has the wrong dimension");
    const double value = landscape.evaluate(point);
    ++run.evaluations;

    MemberState member{InterpreterState(landscape.dimension(), program_seed, limits), value, value};
    auto& st = member.program;
    st.vectors.push(point);
    st.floats.push(value);
    st.booleans.push(true);
    // Boxes are uniform for every supported landscape: one lower and one
    // upper bound describe all axes.
    st.inputs = {landscape.lower()[0], landscape.upper()[0]};

    const std::size_t index = run.members.size();
    record(trace, repeat, 0, index, point, value, true, true);

    run.members.push_back(std::move(member));
    run.points.push_back(point);
    run.bests.push_back(std::move(point));
    if (value < run.pbest) {
        run.pbest = value;
        run.pbest_index = index;
    }
}

void init_member(SwarmRun& run, const Landscape& landscape, Rng& rng, const ExecutionLimits& limits,
                 TraceSink* trace, std::size_t repeat)
{
    SearchVector point(landscape.dimension());
    for (std::size_t i = 0; i < point.size(); ++i)
        point[i] = uniform_real(rng, landscape.lower()[i], landscape.upper()[i]);
    const std::uint64_t seed = rng();
    init_member(run, landscape, std::move(point), seed, limits, trace, repeat);
}

void swarm_move(SwarmRun& run, const Program& program, const Landscape& landscape, TraceSink* trace,
                std::size_t repeat)
{
    ++run.move;
    const auto m = static_cast<std::int64_t>(run.move);
    for (std::size_t p = 0; p < run.popsize(); ++p) {
        MemberState& member = run.members[p];
        InterpreterState& st = member.program;
        st.integers.push(m);
        st.integers.push(static_cast<std::int64_t>(p));
        st.integers.push(static_cast<std::int64_t>(run.pbest_index));
        const double previous = member.value;

        run_move(st, program, run.view_for(p));

        bool in_bounds = false;
        if (!st.vectors.empty()) {
            const auto proposal = st.vectors.top();
            run.points[p].assign(proposal.begin(), proposal.end());
            in_bounds = landscape.in_bounds(proposal);
        }

        if (in_bounds) {
            member.value = landscape.evaluate(run.points[p]);
            ++run.evaluations;
            if (member.value < member.bestval) {
                member.bestval = member.value;
                run.bests[p] = run.points[p];
            }
            const bool improved = member.value < previous;
            st.booleans.push(improved);
            if (!improved) st.vectors.push(run.bests[p]);
            st.floats.push(member.value);
            record(trace, repeat, run.move, p, run.points[p], member.value, improved, true);
        } else {
            st.booleans.push(false);
            st.floats.push(out_of_bounds_value);
            record(trace, repeat, run.move, p, run.points[p], out_of_bounds_value, false, false);
        }

        if (member.bestval < run.pbest) {
            run.pbest = member.bestval;
            run.pbest_index = p;
        }
    }
}

RepeatResult run_repeat(const Program& program, const LandscapePtr& landscape, const RunConfig& config,
                        std::size_t repeat, TraceSink* trace)
{
    const std::uint64_t seed = derive_seed(config.seed, {repeat});
    Rng rng(seed);
    LandscapePtr target = landscape;
    if (config.transforms)
        target = std::make_shared<TransformedLandscape>(landscape, sample_transform(rng, *landscape));

    SwarmRun run;
    run.members.reserve(config.popsize);
    for (std::size_t p = 0; p < config.popsize; ++p) init_member(run, *target, rng, config.limits, trace, repeat);
    for (std::size_t m = 0; m < config.moves; ++m) swarm_move(run, program, *target, trace, repeat);
    return {run.pbest, run.evaluations, run.bests[run.pbest_index], seed};
}

namespace {

double mean_pbest(const std::vector<RepeatResult>& repeats)
{
    double total = 0.0;
    for (const auto& r : repeats) total += r.pbest;
    return total / static_cast<double>(repeats.size());
}

} // namespace

EvalReport evaluate_optimiser(const Program& program, const LandscapePtr& landscape, const RunConfig& config,
                              TraceSink* trace)
{
    config.validate();
    EvalReport report;
    report.repeats.reserve(config.repeats);
    for (std::size_t r = 0; r < config.repeats; ++r)
        report.repeats.push_back(run_repeat(program, landscape, config, r, trace));
    report.fitness = mean_pbest(report.repeats);
    return report;
}

EvalReport evaluate_optimiser_parallel(const Program& program, const LandscapePtr& landscape,
                                       const RunConfig& config, std::size_t jobs)
{
    config.validate();
    EvalReport report;
    report.repeats.resize(config.repeats);
    parallel_for(config.repeats, jobs,
                 [&](std::size_t r) { report.repeats[r] = run_repeat(program, landscape, config, r); });
    report.fitness = mean_pbest(report.repeats);
    return report;
}

TraceResult trace_run(const Program& program, const LandscapePtr& landscape, const RunConfig& config)
{
    TraceResult result;
    result.records.reserve(config.repeats * config.popsize * (config.moves + 1));
    result.report = evaluate_optimiser(program, landscape, config, &result.records);
    return result;
}

} // namespace pushopt
