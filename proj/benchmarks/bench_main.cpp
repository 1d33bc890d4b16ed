#include <map>
#include <string>

#include <benchmark/benchmark.h>

#include "pushopt/evolve.hpp"
#include "pushopt/throughput.hpp"

using namespace pushopt;

namespace {

std::string fixture(const char* name)
{
    static const std::map<std::string, std::string> programs{
        {"f1", "(exec.dup float.- vector.- float.pop vector.zip vector.zip integer.swap float.cos float.- float.cos "
               "float.- float.yank vector.best vector.wrand float.abs float.dup float.frominteger vector.- vector.dim*)"},
        {"f14", "(float.< float./ vector.best vector.yankdup float.ln float.max float.stackdepth 0.48999998 float.abs "
                "vector.between vector.wrand vector.scale integer.yank input.index vector.- float.rand float.neg "
                "0.97999996 float.- 0.97999996 vector.wrand vector.scale vector.-)"},
    };
    return programs.at(name);
}

// Instructions per second over random default-set genomes.
void BM_InterpreterSteps(benchmark::State& state)
{
    const auto workload = throughput_workload(64, 1);
    const auto dim = static_cast<std::size_t>(state.range(0));
    std::size_t steps = 0;
    for (auto _ : state) {
        const auto r = measure_throughput(workload, dim, 200'000, 1);
        steps += r.steps;
    }
    state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_InterpreterSteps)->Arg(2)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Landscape(benchmark::State& state, const char* name)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto l = make_landscape(name, dim);
    Rng rng = make_rng(1, {0});
    std::vector<std::vector<double>> points(256, std::vector<double>(dim));
    for (auto& p : points)
        for (std::size_t i = 0; i < dim; ++i) p[i] = uniform_real(rng, l->lower()[i], l->upper()[i]);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(l->evaluate(points[k++ & 255]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_Landscape, f1, "f1")->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_Landscape, f9, "f9")->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_Landscape, f12, "f12")->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_Landscape, f13, "f13")->Arg(10)->Arg(30);
BENCHMARK_CAPTURE(BM_Landscape, f14, "f14")->Arg(10)->Arg(30);

// One full sweep of a 50-member swarm at D=10.
void BM_SwarmMove(benchmark::State& state, const char* name)
{
    const Program program = parse_program(fixture(name));
    const auto l = make_landscape(name, 10);
    Rng rng = make_rng(2, {0});
    SwarmRun run;
    for (int p = 0; p < 50; ++p) init_member(run, *l, rng, {});
    for (auto _ : state) swarm_move(run, program, *l);
    state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK_CAPTURE(BM_SwarmMove, f1, "f1");
BENCHMARK_CAPTURE(BM_SwarmMove, f14, "f14");

// Fitness of one genome: 10 repeats of a 50 x 20 run at D=10.
void BM_FitnessEvaluation(benchmark::State& state)
{
    const Program program = parse_program(fixture("f14"));
    const auto l = make_landscape("f14", 10);
    RunConfig run;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        run.seed = seed++;
        benchmark::DoNotOptimize(evaluate_optimiser(program, l, run).fitness);
    }
}
BENCHMARK(BM_FitnessEvaluation)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
