#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pushopt {

// Generic stack operations share one layout per typed stack so the
// interpreter can dispatch them with a single template.
enum class GenericOp : std::uint8_t {
    dup, flush, pop, rand, rot, shove, stackdepth, swap, yank, yankdup,
};
inline constexpr std::size_t generic_op_count = 10;

enum class StackType : std::uint8_t { boolean, real, integer, vector, exec, input };

enum class Op : std::uint16_t {
    // generic: boolean, float, integer, vector (same order as GenericOp)
    boolean_dup, boolean_flush, boolean_pop, boolean_rand, boolean_rot,
    boolean_shove, boolean_stackdepth, boolean_swap, boolean_yank, boolean_yankdup,
    float_dup, float_flush, float_pop, float_rand, float_rot,
    float_shove, float_stackdepth, float_swap, float_yank, float_yankdup,
    integer_dup, integer_flush, integer_pop, integer_rand, integer_rot,
    integer_shove, integer_stackdepth, integer_swap, integer_yank, integer_yankdup,
    vector_dup, vector_flush, vector_pop, vector_rand, vector_rot,
    vector_shove, vector_stackdepth, vector_swap, vector_yank, vector_yankdup,

    boolean_eq, boolean_and, boolean_fromfloat, boolean_frominteger,
    boolean_not, boolean_or, boolean_xor,

    exec_eq, exec_do_count, exec_do_range, exec_do_times, exec_if, exec_iflt,
    exec_noop, exec_dup,

    float_mod, float_mul, float_add, float_sub, float_div, float_lt, float_eq,
    float_gt, float_abs, float_cos, float_erc, float_exp, float_fromboolean,
    float_frominteger, float_ln, float_log, float_max, float_min, float_neg,
    float_pow, float_sin, float_tan,

    input_inall, input_inallrev, input_index, input_stackdepth,

    integer_mod, integer_mul, integer_add, integer_sub, integer_div, integer_lt,
    integer_eq, integer_gt, integer_abs, integer_erc, integer_fromboolean,
    integer_fromfloat, integer_ln, integer_log, integer_max, integer_min,
    integer_neg, integer_pow,

    vector_mul, vector_div, vector_add, vector_sub, vector_apply, vector_between,
    vector_dim_add, vector_dim_mul, vector_dprod, vector_mag, vector_scale,
    vector_urand, vector_wrand, vector_zip, vector_current, vector_best,

    count_
};

inline constexpr std::size_t op_count = static_cast<std::size_t>(Op::count_);

struct InstructionInfo {
    Op op;
    std::string_view name;
    // Part of the default instruction set used to generate genomes. The two
    // extra entries (exec.dup, input.stackdepth) are executable but only
    // appear when a program text names them.
    bool generative;
};

/// Immutable registry of every executable instruction, indexed by Op.
std::span<const InstructionInfo> instruction_registry();

std::string_view instruction_name(Op op);
std::optional<Op> find_instruction(std::string_view name);

/// Names of the default generation set: every generative instruction plus
/// the `true` / `false` literals.
std::vector<std::string> default_instruction_set_names();

/// For generic ops, the stack they act on and the operation; nullopt otherwise.
struct GenericInfo {
    StackType stack;
    GenericOp op;
};
std::optional<GenericInfo> generic_info(Op op);

} // namespace pushopt
