#include "pushopt/report_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace pushopt {

using json = nlohmann::ordered_json;

namespace {

json parse_object(std::string_view text, const char* what)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
    if (!doc.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
    return doc;
}

template <class T>
T get(const json& value, const std::string& key)
{
    try {
        return value.get<T>();
    } catch (const json::exception&) {
        throw FormatError("bad value for '" + key + "'");
    }
}

json limits_json(const ExecutionLimits& l)
{
    return {{"exec_limit", l.max_executions_per_move},
            {"max_program_size", l.max_program_size},
            {"max_stack_depth", l.max_stack_depth}};
}

bool read_limit(ExecutionLimits& l, const std::string& key, const json& value)
{
    if (key == "exec_limit") l.max_executions_per_move = get<std::size_t>(value, key);
    else if (key == "max_program_size") l.max_program_size = get<std::size_t>(value, key);
    else if (key == "max_stack_depth") l.max_stack_depth = get<std::size_t>(value, key);
    else return false;
    return true;
}

json run_config_json(const RunConfig& c)
{
    json j = {{"popsize", c.popsize},
              {"moves", c.moves},
              {"repeats", c.repeats},
              {"transforms", c.transforms},
              {"seed", c.seed}};
    j.update(limits_json(c.limits));
    return j;
}

RunConfig run_config_from(const json& doc)
{
    RunConfig c;
    for (const auto& [key, value] : doc.items()) {
        if (key == "popsize") c.popsize = get<std::size_t>(value, key);
        else if (key == "moves") c.moves = get<std::size_t>(value, key);
        else if (key == "repeats") c.repeats = get<std::size_t>(value, key);
        else if (key == "transforms") c.transforms = get<bool>(value, key);
        else if (key == "seed") c.seed = get<std::uint64_t>(value, key);
        else if (!read_limit(c.limits, key, value)) throw FormatError("unknown run config key '" + key + "'");
    }
    return c;
}

json report_json(const EvalReport& report)
{
    json repeats = json::array();
    for (const auto& r : report.repeats) {
        repeats.push_back(
            {{"pbest", r.pbest}, {"evaluations", r.evaluations}, {"seed", r.seed}, {"best_point", r.best_point}});
    }
    return {{"mean", report.fitness}, {"repeats", std::move(repeats)}};
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string to_json(const EvolutionConfig& c)
{
    json j = {{"population_size", c.population_size},
              {"generations", c.generations},
              {"tournament_size", c.tournament_size},
              {"crossover_rate", c.crossover_rate},
              {"mutation_rate", c.mutation_rate},
              {"reproduction_rate", c.reproduction_rate},
              {"instruction_set", c.instruction_set},
              {"landscape", c.landscape},
              {"dimension", c.dimension},
              {"landscape_seed", c.landscape_seed},
              {"swarm_size", c.swarm_size},
              {"moves", c.moves},
              {"repeats", c.repeats},
              {"transforms", c.transforms},
              {"reevaluation_repeats", c.reevaluation_repeats},
              {"seed", c.seed}};
    j.update(limits_json(c.limits));
    return j.dump(2);
}

EvolutionConfig evolution_config_from_json(std::string_view text)
{
    const json doc = parse_object(text, "evolution config");
    EvolutionConfig c;
    for (const auto& [key, value] : doc.items()) {
        if (key == "population_size") c.population_size = get<std::size_t>(value, key);
        else if (key == "generations") c.generations = get<std::size_t>(value, key);
        else if (key == "tournament_size") c.tournament_size = get<std::size_t>(value, key);
        else if (key == "crossover_rate") c.crossover_rate = get<double>(value, key);
        else if (key == "mutation_rate") c.mutation_rate = get<double>(value, key);
        else if (key == "reproduction_rate") c.reproduction_rate = get<double>(value, key);
        else if (key == "instruction_set") c.instruction_set = get<std::vector<std::string>>(value, key);
        else if (key == "landscape") c.landscape = get<std::string>(value, key);
        else if (key == "dimension") c.dimension = get<std::size_t>(value, key);
        else if (key == "landscape_seed") c.landscape_seed = get<std::uint64_t>(value, key);
        else if (key == "swarm_size") c.swarm_size = get<std::size_t>(value, key);
        else if (key == "moves") c.moves = get<std::size_t>(value, key);
        else if (key == "repeats") c.repeats = get<std::size_t>(value, key);
        else if (key == "transforms") c.transforms = get<bool>(value, key);
        else if (key == "reevaluation_repeats") c.reevaluation_repeats = get<std::size_t>(value, key);
        else if (key == "seed") c.seed = get<std::uint64_t>(value, key);
        else if (!read_limit(c.limits, key, value)) throw FormatError("unknown config key '" + key + "'");
    }
    return c;
}

std::string to_json(const RunConfig& config)
{
    return run_config_json(config).dump(2);
}

RunConfig run_config_from_json(std::string_view text)
{
    return run_config_from(parse_object(text, "run config"));
}

std::string report_to_json(const EvalReport& report, const EvalContext& context)
{
    json j = report_json(report);
    j["landscape"] = context.landscape;
    j["dimension"] = context.dimension;
    j["program"] = context.program;
    j["config"] = run_config_json(context.config);
    return j.dump(2);
}

EvalReport report_from_json(std::string_view text, EvalContext* context)
{
    const json doc = parse_object(text, "report");
    EvalReport report;
    try {
        report.fitness = doc.at("mean").get<double>();
        for (const auto& r : doc.at("repeats")) {
            report.repeats.push_back({r.at("pbest").get<double>(), r.at("evaluations").get<std::size_t>(),
                                      r.at("best_point").get<SearchVector>(), r.at("seed").get<std::uint64_t>()});
        }
        if (context) {
            context->landscape = doc.at("landscape").get<std::string>();
            context->dimension = doc.at("dimension").get<std::size_t>();
            context->program = doc.at("program").get<std::string>();
            context->config = run_config_from(doc.at("config"));
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("report: ") + e.what());
    }
    return report;
}

std::string to_json_line(const GenerationRecord& r)
{
    const json j = {{"gen", r.generation},
                    {"best_fitness", r.best_fitness},
                    {"generation_best", r.generation_best},
                    {"mean_fitness", r.mean_fitness},
                    {"best_genome", r.best_genome}};
    return j.dump();
}

GenerationRecord generation_record_from_json(std::string_view line)
{
    const json doc = parse_object(line, "generation record");
    try {
        return {doc.at("gen").get<std::size_t>(), doc.at("best_fitness").get<double>(),
                doc.at("generation_best").get<double>(), doc.at("mean_fitness").get<double>(),
                doc.at("best_genome").get<std::string>()};
    } catch (const json::exception& e) {
        throw FormatError(std::string("generation record: ") + e.what());
    }
}

std::string evolution_summary_to_json(const EvolutionResult& result, const EvolutionConfig& config)
{
    const json j = {{"best_genome", print_program(result.best)},
                    {"best_fitness", result.best_fitness},
                    {"evaluations", result.evaluations},
                    {"generations", result.history.size()},
                    {"reevaluation", report_json(result.reevaluation)},
                    {"config", json::parse(to_json(config))}};
    return j.dump(2);
}

std::string trace_csv_header(std::size_t dim)
{
    std::string header = "repeat,move,member,value,improved,in_bounds";
    for (std::size_t i = 0; i < dim; ++i) header += ",x" + std::to_string(i);
    return header;
}

void write_trace_csv(std::ostream& out, const TraceSink& records, std::size_t dim)
{
    out << trace_csv_header(dim) << '\n';
    for (const auto& r : records) {
        if (r.point.size() != dim) throw std::invalid_argument("trace record has the wrong dimension");
        out << r.repeat << ',' << r.move << ',' << r.member << ',' << format_double(r.value) << ','
            << (r.improved ? 1 : 0) << ',' << (r.in_bounds ? 1 : 0);
        for (double x : r.point) out << ',' << format_double(x);
        out << '\n';
    }
}

namespace {

template <class T>
T parse_field(std::string_view field, std::size_t line)
{
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw FormatError("trace line " + std::to_string(line) + ": bad field '" + std::string(field) + "'");
    return value;
}

std::vector<std::string_view> split_commas(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

} // namespace

TraceSink read_trace_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw FormatError("trace: missing header");
    const auto header = split_commas(line);
    if (header.size() < 6 || line.rfind(trace_csv_header(0), 0) != 0) throw FormatError("trace: bad header");
    const std::size_t dim = header.size() - 6;
    if (line != trace_csv_header(dim)) throw FormatError("trace: bad header");

    TraceSink records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split_commas(line);
        if (f.size() != dim + 6) throw FormatError("trace line " + std::to_string(lineno) + ": wrong field count");
        TraceRecord r;
        r.repeat = parse_field<std::size_t>(f[0], lineno);
        r.move = parse_field<std::size_t>(f[1], lineno);
        r.member = parse_field<std::size_t>(f[2], lineno);
        r.value = parse_field<double>(f[3], lineno);
        r.improved = parse_field<int>(f[4], lineno) != 0;
        r.in_bounds = parse_field<int>(f[5], lineno) != 0;
        r.point.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) r.point.push_back(parse_field<double>(f[6 + i], lineno));
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace pushopt
