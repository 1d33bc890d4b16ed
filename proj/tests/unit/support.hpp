#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "pushopt/interpreter.hpp"
#include "pushopt/program.hpp"

#ifndef PUSHOPT_FIXTURE_DIR
#error "PUSHOPT_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace testing {

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture_text(std::string_view name)
{
    return read_text(std::string(PUSHOPT_FIXTURE_DIR) + "/" + std::string(name) + "_best.push");
}

inline pushopt::InterpreterState fresh(std::size_t dim = 2, std::uint64_t seed = 1)
{
    return pushopt::InterpreterState(dim, seed);
}

// Runs `text` as one move with no swarm attached.
inline void run(pushopt::InterpreterState& s, std::string_view text, const pushopt::SwarmView& view = {})
{
    pushopt::run_move(s, pushopt::parse_program(text), view);
}

inline const char* const fixture_names[] = {"f1", "f9", "f12", "f13", "f14"};

} // namespace testing
