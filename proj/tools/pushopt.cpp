// pushopt: evolve, evaluate, trace and inspect Push-coded optimisers.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pushopt/evolve.hpp"
#include "pushopt/report_io.hpp"
#include "pushopt/throughput.hpp"

namespace fs = std::filesystem;
using namespace pushopt;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_data = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flags shared by the run-style subcommands. Values are only applied when
// the flag was given, so a --config document supplies everything else.
struct ProfileFlags {
    std::string landscape;
    std::size_t dim = 0;
    std::size_t budget = 0;
    std::string split;
    std::size_t repeats = 0;
    std::string transforms;
    std::uint64_t seed = 0;
    std::uint64_t landscape_seed = 0;
    std::size_t exec_limit = 0;
    std::string config_path;
    std::string out_dir;
    std::size_t jobs = 1;

    CLI::Option* o_landscape = nullptr;
    CLI::Option* o_dim = nullptr;
    CLI::Option* o_budget = nullptr;
    CLI::Option* o_split = nullptr;
    CLI::Option* o_repeats = nullptr;
    CLI::Option* o_transforms = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_landscape_seed = nullptr;
    CLI::Option* o_exec_limit = nullptr;
    CLI::Option* o_out_dir = nullptr;

    void attach(CLI::App& app)
    {
        o_landscape = app.add_option("-l,--landscape", landscape, "Benchmark landscape: f1, f9, f12, f13, f14");
        o_dim = app.add_option("-d,--dim", dim, "Search-space dimension")->check(CLI::PositiveNumber);
        o_budget = app.add_option("-b,--budget", budget, "Function-evaluation budget (popsize x moves)")
                       ->check(CLI::PositiveNumber);
        o_split = app.add_option("--split", split, "Budget split as POPSIZExMOVES, e.g. 50x20");
        o_repeats = app.add_option("-r,--repeats", repeats, "Optimisation runs per evaluation")
                        ->check(CLI::PositiveNumber);
        o_transforms = app.add_option("--transforms", transforms, "Random landscape transforms")
                           ->check(CLI::IsMember({"on", "off"}));
        o_seed = app.add_option("-s,--seed", seed, "Master seed");
        o_landscape_seed = app.add_option("--landscape-seed", landscape_seed, "Instance seed for f12 data");
        o_exec_limit = app.add_option("--exec-limit", exec_limit, "Instruction executions per move")
                           ->check(CLI::PositiveNumber);
        app.add_option("-c,--config", config_path, "JSON profile; flags override its values");
        o_out_dir = app.add_option("-o,--out-dir", out_dir, "Output directory (default: $PUSHOPT_OUTPUT_DIR)");
        app.add_option("-j,--jobs", jobs, "Worker threads; never changes results")->check(CLI::PositiveNumber);
    }
};

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw DataError("cannot write '" + path.string() + "'");
}

std::pair<std::size_t, std::size_t> parse_split(const std::string& text)
{
    const auto x = text.find_first_of("xX*");
    std::size_t pop = 0;
    std::size_t moves = 0;
    try {
        if (x == std::string::npos) throw std::invalid_argument("no separator");
        std::size_t used = 0;
        pop = std::stoul(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("trailing text");
        moves = std::stoul(text.substr(x + 1), &used);
        if (used != text.size() - x - 1) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
        throw UsageError("--split must look like POPSIZExMOVES, got '" + text + "'");
    }
    if (pop == 0 || moves == 0) throw UsageError("--split factors must be positive");
    return {pop, moves};
}

// Budget and split must agree; either one alone determines the other only
// through the defaults already in `config`.
void apply_budget(const ProfileFlags& f, std::size_t& popsize, std::size_t& moves)
{
    if (f.o_split->count() > 0) std::tie(popsize, moves) = parse_split(f.split);
    const std::size_t budget = f.o_budget->count() > 0 ? f.budget : popsize * moves;
    if (popsize * moves != budget) {
        throw UsageError("split " + std::to_string(popsize) + "x" + std::to_string(moves) + " = " +
                         std::to_string(popsize * moves) + " does not match budget " + std::to_string(budget));
    }
}

EvolutionConfig load_profile(const ProfileFlags& f)
{
    EvolutionConfig c;
    if (!f.config_path.empty()) {
        try {
            c = evolution_config_from_json(read_file(f.config_path));
        } catch (const FormatError& e) {
            throw DataError(f.config_path + ": " + e.what());
        }
    }
    if (f.o_landscape->count() > 0) c.landscape = f.landscape;
    if (f.o_dim->count() > 0) c.dimension = f.dim;
    if (f.o_seed->count() > 0) c.seed = f.seed;
    if (f.o_landscape_seed->count() > 0) c.landscape_seed = f.landscape_seed;
    if (f.o_exec_limit->count() > 0) c.limits.max_executions_per_move = f.exec_limit;
    if (f.o_transforms->count() > 0) c.transforms = f.transforms == "on";
    apply_budget(f, c.swarm_size, c.moves);
    return c;
}

fs::path output_dir(const ProfileFlags& f, const char* fallback)
{
    if (f.o_out_dir->count() > 0) return f.out_dir;
    if (const char* env = std::getenv("PUSHOPT_OUTPUT_DIR"); env && *env) return env;
    return fallback ? fs::path(fallback) : fs::path();
}

void ensure_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("cannot create '" + dir.string() + "': " + ec.message());
}

LandscapePtr landscape_for(const EvolutionConfig& c)
{
    try {
        return make_landscape(c.landscape, c.dimension, c.landscape_seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Program load_program(const std::string& path)
{
    const std::string text = read_file(path);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw DataError(path + ": empty program file");
    try {
        return parse_program(text);
    } catch (const ParseError& e) {
        throw DataError(path + ": " + e.what());
    }
}

struct GpFlags {
    std::size_t population = 0, generations = 0, tournament = 0, max_size = 0, reeval = 0;
    double crossover = 0, mutation = 0, reproduction = 0;
    CLI::Option *o_population = nullptr, *o_generations = nullptr, *o_tournament = nullptr, *o_max_size = nullptr,
                *o_reeval = nullptr, *o_crossover = nullptr, *o_mutation = nullptr, *o_reproduction = nullptr;

    void attach(CLI::App& app)
    {
        o_population = app.add_option("--gp-popsize", population, "GP population size (200)");
        o_generations = app.add_option("--generations", generations, "GP generations (50)");
        o_tournament = app.add_option("--tournament", tournament, "Tournament size (5)");
        o_max_size = app.add_option("--max-size", max_size, "Maximum program size (100)");
        o_reeval = app.add_option("--reeval-repeats", reeval, "Untransformed runs for the final reevaluation (25)");
        o_crossover = app.add_option("--crossover", crossover, "Crossover rate (0.5)");
        o_mutation = app.add_option("--mutation", mutation, "Mutation rate (0.4)");
        o_reproduction = app.add_option("--reproduction", reproduction, "Reproduction rate (0.1)");
    }

    void apply(EvolutionConfig& c) const
    {
        if (o_population->count() > 0) c.population_size = population;
        if (o_generations->count() > 0) c.generations = generations;
        if (o_tournament->count() > 0) c.tournament_size = tournament;
        if (o_max_size->count() > 0) c.limits.max_program_size = max_size;
        if (o_reeval->count() > 0) c.reevaluation_repeats = reeval;
        if (o_crossover->count() > 0) c.crossover_rate = crossover;
        if (o_mutation->count() > 0) c.mutation_rate = mutation;
        if (o_reproduction->count() > 0) c.reproduction_rate = reproduction;
    }
};

int cmd_evolve(const ProfileFlags& f, const GpFlags& gp)
{
    EvolutionConfig c = load_profile(f);
    if (f.o_repeats->count() > 0) c.repeats = f.repeats;
    gp.apply(c);
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const fs::path dir = output_dir(f, "pushopt-out");
    ensure_dir(dir);
    write_file(dir / "config.json", to_json(c) + "\n");

    std::ofstream log(dir / "generations.jsonl", std::ios::binary);
    if (!log) throw DataError("cannot write '" + (dir / "generations.jsonl").string() + "'");
    const EvolutionResult result = evolve(c, f.jobs, [&](const GenerationRecord& r) {
        log << to_json_line(r) << '\n';
        log.flush();
        std::cerr << "gen " << r.generation << "  best " << format_double(r.best_fitness) << "  mean "
                  << format_double(r.mean_fitness) << '\n';
    });

    write_file(dir / "best.push", print_program(result.best) + "\n");
    const EvalContext context{c.landscape, c.dimension, print_program(result.best), reevaluation_run_config(c)};
    write_file(dir / "report.json", report_to_json(result.reevaluation, context) + "\n");
    write_file(dir / "summary.json", evolution_summary_to_json(result, c) + "\n");

    std::cout << "best genome:        " << print_program(result.best) << '\n'
              << "training fitness:   " << format_double(result.best_fitness) << '\n'
              << "reevaluated error:  " << format_double(result.reevaluation.fitness) << " (mean of "
              << result.reevaluation.repeats.size() << " untransformed runs)\n"
              << "artifacts:          " << dir.string() << '\n';
    return 0;
}

// eval and trace measure an existing program with untransformed runs unless
// told otherwise. A config document supplies the eval repeat count through
// its reevaluation setting.
EvolutionConfig measure_profile(const ProfileFlags& f, std::size_t default_repeats)
{
    EvolutionConfig c = load_profile(f);
    if (f.o_repeats->count() > 0) c.repeats = f.repeats;
    else if (!f.config_path.empty() && default_repeats > 1) c.repeats = c.reevaluation_repeats;
    else c.repeats = default_repeats;
    if (f.o_transforms->count() == 0) c.transforms = false;
    try {
        training_run_config(c, c.seed).validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return c;
}

int cmd_eval(const ProfileFlags& f, const std::string& program_path)
{
    const Program program = load_program(program_path);
    const EvolutionConfig c = measure_profile(f, 25);
    const LandscapePtr landscape = landscape_for(c);
    const RunConfig run = training_run_config(c, c.seed);
    const EvalReport report = evaluate_optimiser_parallel(program, landscape, run, f.jobs);

    std::cout << "program:    " << print_program(program) << '\n'
              << "landscape:  " << c.landscape << " D=" << c.dimension << "  split " << run.popsize << "x"
              << run.moves << "  transforms " << (run.transforms ? "on" : "off") << "  seed " << run.seed << '\n'
              << "mean error: " << format_double(report.fitness) << " over " << report.repeats.size() << " runs\n";
    for (std::size_t r = 0; r < report.repeats.size(); ++r) {
        std::cout << "  run " << r << ": error " << format_double(report.repeats[r].pbest) << "  FEs "
                  << report.repeats[r].evaluations << '\n';
    }

    const fs::path dir = output_dir(f, nullptr);
    if (!dir.empty()) {
        ensure_dir(dir);
        write_file(dir / "report.json",
                   report_to_json(report, {c.landscape, c.dimension, print_program(program), run}) + "\n");
    }
    return 0;
}

int cmd_trace(const ProfileFlags& f, const std::string& program_path)
{
    const Program program = load_program(program_path);
    const EvolutionConfig c = measure_profile(f, 1);
    const LandscapePtr landscape = landscape_for(c);
    const RunConfig run = training_run_config(c, c.seed);
    const TraceResult trace = trace_run(program, landscape, run);

    const fs::path dir = output_dir(f, "pushopt-out");
    ensure_dir(dir);
    {
        std::ofstream csv(dir / "trace.csv", std::ios::binary);
        if (!csv) throw DataError("cannot write '" + (dir / "trace.csv").string() + "'");
        write_trace_csv(csv, trace.records, c.dimension);
    }
    write_file(dir / "report.json",
               report_to_json(trace.report, {c.landscape, c.dimension, print_program(program), run}) + "\n");

    const TraceRecord* best = nullptr;
    for (const auto& rec : trace.records) {
        if (rec.in_bounds && (!best || rec.value < best->value)) best = &rec;
    }
    std::cout << "records:    " << trace.records.size() << '\n' << "best value: ";
    if (best) {
        std::cout << format_double(best->value) << " (repeat " << best->repeat << ", move " << best->move
                  << ", member " << best->member << ")\n"
                  << "best point:";
        for (double x : best->point) std::cout << ' ' << format_double(x);
        std::cout << '\n';
    } else {
        std::cout << "none\n";
    }
    std::cout << "trace:      " << (dir / "trace.csv").string() << '\n';
    return 0;
}

void histogram(const Atom& atom, std::map<std::string, std::size_t>& counts)
{
    switch (atom.kind) {
    case AtomKind::instruction: ++counts[std::string(instruction_name(atom.op))]; break;
    case AtomKind::real: ++counts["<float literal>"]; break;
    case AtomKind::integer: ++counts["<integer literal>"]; break;
    case AtomKind::boolean: ++counts[atom.boolean ? "true" : "false"]; break;
    case AtomKind::block:
        ++counts["<block>"];
        for (const auto& inner : *atom.block) histogram(inner, counts);
        break;
    }
}

int cmd_show(const std::string& program_path)
{
    const Program program = load_program(program_path);
    std::map<std::string, std::size_t> counts;
    for (const auto& atom : program.items()) histogram(atom, counts);
    std::cout << print_program(program) << '\n' << "atoms: " << program.size() << '\n';
    for (const auto& [name, n] : counts) std::cout << "  " << name << ' ' << n << '\n';
    return 0;
}

int cmd_bench(std::size_t steps, std::size_t dim, std::uint64_t seed)
{
    const auto workload = throughput_workload(64, seed);
    const ThroughputResult r = measure_throughput(workload, dim, steps, seed);
    std::cout << "steps:          " << r.steps << '\n'
              << "moves:          " << r.moves << '\n'
              << "seconds:        " << format_double(r.seconds) << '\n'
              << "steps per sec:  " << format_double(std::round(r.steps_per_second())) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Evolve and run Push-coded population-based optimisers"};
    app.require_subcommand(1);

    ProfileFlags evolve_flags, eval_flags, trace_flags;
    GpFlags gp;
    std::string eval_program, trace_program, show_program;
    std::size_t bench_steps = 20'000'000, bench_dim = 10;
    std::uint64_t bench_seed = 1;

    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve an optimiser; writes log, best genome and reports");
    evolve_flags.attach(*evolve_cmd);
    gp.attach(*evolve_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a program (25 untransformed runs by default)");
    eval_flags.attach(*eval_cmd);
    eval_cmd->add_option("-p,--program", eval_program, "Program file")->required();

    auto* trace_cmd = app.add_subcommand("trace", "Write a per-member trajectory CSV for a program");
    trace_flags.attach(*trace_cmd);
    trace_cmd->add_option("-p,--program", trace_program, "Program file")->required();

    auto* show_cmd = app.add_subcommand("show", "Print a program in canonical form with statistics");
    show_cmd->add_option("-p,--program,program", show_program, "Program file")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Measure single-threaded interpreter throughput");
    bench_cmd->add_option("--steps", bench_steps, "Minimum instruction executions")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--dim", bench_dim, "Vector dimension")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "Workload seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (evolve_cmd->parsed()) return cmd_evolve(evolve_flags, gp);
        if (eval_cmd->parsed()) return cmd_eval(eval_flags, eval_program);
        if (trace_cmd->parsed()) return cmd_trace(trace_flags, trace_program);
        if (show_cmd->parsed()) return cmd_show(show_program);
        if (bench_cmd->parsed()) return cmd_bench(bench_steps, bench_dim, bench_seed);
    } catch (const UsageError& e) {
        std::cerr << "pushopt: " << e.what() << '\n';
        return exit_usage;
    } catch (const DataError& e) {
        std::cerr << "pushopt: " << e.what() << '\n';
        return exit_data;
    } catch (const std::exception& e) {
        std::cerr << "pushopt: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}
