#include "pushopt/instruction_set.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace pushopt {

namespace {

constexpr std::array<InstructionInfo, op_count> registry{{
    {Op::boolean_dup, "boolean.dup", true},
    {Op::boolean_flush, "boolean.flush", true},
    {Op::boolean_pop, "boolean.pop", true},
    {Op::boolean_rand, "boolean.rand", true},
    {Op::boolean_rot, "boolean.rot", true},
    {Op::boolean_shove, "boolean.shove", true},
    {Op::boolean_stackdepth, "boolean.stackdepth", true},
    {Op::boolean_swap, "boolean.swap", true},
    {Op::boolean_yank, "boolean.yank", true},
    {Op::boolean_yankdup, "boolean.yankdup", true},
    {Op::float_dup, "float.dup", true},
    {Op::float_flush, "float.flush", true},
    {Op::float_pop, "float.pop", true},
    {Op::float_rand, "float.rand", true},
    {Op::float_rot, "float.rot", true},
    {Op::float_shove, "float.shove", true},
    {Op::float_stackdepth, "float.stackdepth", true},
    {Op::float_swap, "float.swap", true},
    {Op::float_yank, "float.yank", true},
    {Op::float_yankdup, "float.yankdup", true},
    {Op::integer_dup, "integer.dup", true},
    {Op::integer_flush, "integer.flush", true},
    {Op::integer_pop, "integer.pop", true},
    {Op::integer_rand, "integer.rand", true},
    {Op::integer_rot, "integer.rot", true},
    {Op::integer_shove, "integer.shove", true},
    {Op::integer_stackdepth, "integer.stackdepth", true},
    {Op::integer_swap, "integer.swap", true},
    {Op::integer_yank, "integer.yank", true},
    {Op::integer_yankdup, "integer.yankdup", true},
    {Op::vector_dup, "vector.dup", true},
    {Op::vector_flush, "vector.flush", true},
    {Op::vector_pop, "vector.pop", true},
    {Op::vector_rand, "vector.rand", true},
    {Op::vector_rot, "vector.rot", true},
    {Op::vector_shove, "vector.shove", true},
    {Op::vector_stackdepth, "vector.stackdepth", true},
    {Op::vector_swap, "vector.swap", true},
    {Op::vector_yank, "vector.yank", true},
    {Op::vector_yankdup, "vector.yankdup", true},

    {Op::boolean_eq, "boolean.=", true},
    {Op::boolean_and, "boolean.and", true},
    {Op::boolean_fromfloat, "boolean.fromfloat", true},
    {Op::boolean_frominteger, "boolean.frominteger", true},
    {Op::boolean_not, "boolean.not", true},
    {Op::boolean_or, "boolean.or", true},
    {Op::boolean_xor, "boolean.xor", true},

    {Op::exec_eq, "exec.=", true},
    {Op::exec_do_count, "exec.do*count", true},
    {Op::exec_do_range, "exec.do*range", true},
    {Op::exec_do_times, "exec.do*times", true},
    {Op::exec_if, "exec.if", true},
    {Op::exec_iflt, "exec.iflt", true},
    {Op::exec_noop, "exec.noop", true},
    {Op::exec_dup, "exec.dup", false},

    {Op::float_mod, "float.%", true},
    {Op::float_mul, "float.*", true},
    {Op::float_add, "float.+", true},
    {Op::float_sub, "float.-", true},
    {Op::float_div, "float./", true},
    {Op::float_lt, "float.<", true},
    {Op::float_eq, "float.=", true},
    {Op::float_gt, "float.>", true},
    {Op::float_abs, "float.abs", true},
    {Op::float_cos, "float.cos", true},
    {Op::float_erc, "float.erc", true},
    {Op::float_exp, "float.exp", true},
    {Op::float_fromboolean, "float.fromboolean", true},
    {Op::float_frominteger, "float.frominteger", true},
    {Op::float_ln, "float.ln", true},
    {Op::float_log, "float.log", true},
    {Op::float_max, "float.max", true},
    {Op::float_min, "float.min", true},
    {Op::float_neg, "float.neg", true},
    {Op::float_pow, "float.pow", true},
    {Op::float_sin, "float.sin", true},
    {Op::float_tan, "float.tan", true},

    {Op::input_inall, "input.inall", true},
    {Op::input_inallrev, "input.inallrev", true},
    {Op::input_index, "input.index", true},
    {Op::input_stackdepth, "input.stackdepth", false},

    {Op::integer_mod, "integer.%", true},
    {Op::integer_mul, "integer.*", true},
    {Op::integer_add, "integer.+", true},
    {Op::integer_sub, "integer.-", true},
    {Op::integer_div, "integer./", true},
    {Op::integer_lt, "integer.<", true},
    {Op::integer_eq, "integer.=", true},
    {Op::integer_gt, "integer.>", true},
    {Op::integer_abs, "integer.abs", true},
    {Op::integer_erc, "integer.erc", true},
    {Op::integer_fromboolean, "integer.fromboolean", true},
    {Op::integer_fromfloat, "integer.fromfloat", true},
    {Op::integer_ln, "integer.ln", true},
    {Op::integer_log, "integer.log", true},
    {Op::integer_max, "integer.max", true},
    {Op::integer_min, "integer.min", true},
    {Op::integer_neg, "integer.neg", true},
    {Op::integer_pow, "integer.pow", true},

    {Op::vector_mul, "vector.*", true},
    {Op::vector_div, "vector./", true},
    {Op::vector_add, "vector.+", true},
    {Op::vector_sub, "vector.-", true},
    {Op::vector_apply, "vector.apply", true},
    {Op::vector_between, "vector.between", true},
    {Op::vector_dim_add, "vector.dim+", true},
    {Op::vector_dim_mul, "vector.dim*", true},
    {Op::vector_dprod, "vector.dprod", true},
    {Op::vector_mag, "vector.mag", true},
    {Op::vector_scale, "vector.scale", true},
    {Op::vector_urand, "vector.urand", true},
    {Op::vector_wrand, "vector.wrand", true},
    {Op::vector_zip, "vector.zip", true},
    {Op::vector_current, "vector.current", true},
    {Op::vector_best, "vector.best", true},
}};

constexpr bool registry_is_ordered()
{
    for (std::size_t i = 0; i < registry.size(); ++i) {
        if (static_cast<std::size_t>(registry[i].op) != i) return false;
    }
    return true;
}
static_assert(registry_is_ordered(), "instruction registry must be indexed by Op");

const std::unordered_map<std::string_view, Op>& name_index()
{
    static const auto index = [] {
        std::unordered_map<std::string_view, Op> m;
        for (const auto& info : registry) m.emplace(info.name, info.op);
        return m;
    }();
    return index;
}

} // namespace

std::span<const InstructionInfo> instruction_registry() { return registry; }

std::string_view instruction_name(Op op)
{
    const auto i = static_cast<std::size_t>(op);
    if (i >= registry.size()) throw std::out_of_range("invalid instruction op");
    return registry[i].name;
}

std::optional<Op> find_instruction(std::string_view name)
{
    const auto& index = name_index();
    if (auto it = index.find(name); it != index.end()) return it->second;
    return std::nullopt;
}

std::vector<std::string> default_instruction_set_names()
{
    std::vector<std::string> names;
    for (const auto& info : registry) {
        if (info.generative) names.emplace_back(info.name);
    }
    names.emplace_back("true");
    names.emplace_back("false");
    return names;
}

std::optional<GenericInfo> generic_info(Op op)
{
    const auto i = static_cast<std::size_t>(op);
    if (i >= 4 * generic_op_count) return std::nullopt;
    static constexpr std::array stacks{StackType::boolean, StackType::real, StackType::integer,
                                       StackType::vector};
    return GenericInfo{stacks[i / generic_op_count], static_cast<GenericOp>(i % generic_op_count)};
}

} // namespace pushopt
