#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pushopt/evolve.hpp"
#include "pushopt/metaeval.hpp"

namespace pushopt {

/// Thrown for malformed config, report, log or trace documents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Configs are JSON objects. Missing keys keep their defaults; unknown keys
// are rejected so that typos do not silently fall back to defaults.
std::string to_json(const EvolutionConfig& config);
EvolutionConfig evolution_config_from_json(std::string_view text);

std::string to_json(const RunConfig& config);
RunConfig run_config_from_json(std::string_view text);

/// What was evaluated, alongside the outcome.
struct EvalContext {
    std::string landscape;
    std::size_t dimension = 0;
    std::string program;
    RunConfig config;

    friend bool operator==(const EvalContext&, const EvalContext&) = default;
};

std::string report_to_json(const EvalReport& report, const EvalContext& context);
EvalReport report_from_json(std::string_view text, EvalContext* context = nullptr);

/// One JSON object per line; doubles print in shortest round-trip form so
/// equal runs produce byte-identical logs.
std::string to_json_line(const GenerationRecord& record);
GenerationRecord generation_record_from_json(std::string_view line);

std::string evolution_summary_to_json(const EvolutionResult& result, const EvolutionConfig& config);

/// Header: repeat,move,member,value,improved,in_bounds,x0,x1,...
std::string trace_csv_header(std::size_t dim);
void write_trace_csv(std::ostream& out, const TraceSink& records, std::size_t dim);
TraceSink read_trace_csv(std::istream& in);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

} // namespace pushopt
