#include "pushopt/interpreter.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace pushopt {

// ---------------------------------------------------------------------------
// VectorStack

void VectorStack::push(std::span<const double> v)
{
    if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    const double* base = data_.data();
    if (!data_.empty() && v.data() >= base && v.data() < base + data_.size()) {
        const auto offset = static_cast<std::size_t>(v.data() - base);
        data_.resize(data_.size() + dim_);
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(offset), dim_, data_.end() - static_cast<std::ptrdiff_t>(dim_));
        return;
    }
    data_.insert(data_.end(), v.begin(), v.end());
}

void VectorStack::rotate_range(std::size_t first_item, std::size_t middle_item)
{
    std::rotate(data_.begin() + static_cast<std::ptrdiff_t>(first_item * dim_),
                data_.begin() + static_cast<std::ptrdiff_t>(middle_item * dim_), data_.end());
}

void VectorStack::dup() { yankdup(0); }
void VectorStack::swap() { rotate_range(size() - 2, size() - 1); }
void VectorStack::rot() { rotate_range(size() - 3, size() - 2); }

void VectorStack::yank(std::size_t depth)
{
    const std::size_t i = size() - 1 - depth;
    rotate_range(i, i + 1);
}

void VectorStack::yankdup(std::size_t depth)
{
    const std::size_t offset = (size() - 1 - depth) * dim_;
    data_.resize(data_.size() + dim_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(offset), dim_, data_.end() - static_cast<std::ptrdiff_t>(dim_));
}

void VectorStack::shove(std::size_t depth) { rotate_range(size() - 1 - depth, size() - 1); }

void VectorStack::keep_newest(std::size_t n)
{
    if (size() > n) data_.erase(data_.begin(), data_.end() - static_cast<std::ptrdiff_t>(n * dim_));
}

std::vector<std::vector<double>> VectorStack::to_vector() const
{
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        auto v = peek(size() - 1 - i);
        out.emplace_back(v.begin(), v.end());
    }
    return out;
}

void InterpreterState::clear_stacks()
{
    booleans.clear();
    floats.clear();
    integers.clear();
    vectors.clear();
    exec.clear();
    inputs.clear();
    executions = 0;
}

SearchVector swarm_view_lookup(const SwarmView& view, PointKind which, std::int64_t index)
{
    if (view.empty()) throw std::invalid_argument("swarm view is empty");
    auto p = view.point(which, view.resolve(index));
    return {p.begin(), p.end()};
}

// ---------------------------------------------------------------------------
// Instruction semantics

namespace {

constexpr double float_rand_lo = -1.0;
constexpr double float_rand_hi = 1.0;
constexpr std::int64_t integer_rand_lo = -10;
constexpr std::int64_t integer_rand_hi = 10;

bool finite(double v) { return std::isfinite(v); }

std::uint64_t magnitude(std::int64_t i)
{
    return i < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(i) : static_cast<std::uint64_t>(i);
}

// |i| clamped to the valid depth range [0, n - 1]
std::size_t clamp_depth(std::int64_t i, std::size_t n)
{
    const std::uint64_t a = magnitude(i);
    return a >= n ? n - 1 : static_cast<std::size_t>(a);
}

std::vector<double>& scratch(std::size_t n)
{
    thread_local std::vector<double> buf;
    buf.resize(n);
    return buf;
}

void push_input(InterpreterState& s, const InputValue& v)
{
    std::visit(
        [&](auto x) {
            using T = decltype(x);
            if constexpr (std::is_same_v<T, bool>) s.booleans.push(x);
            else if constexpr (std::is_same_v<T, std::int64_t>) s.integers.push(x);
            else s.floats.push(x);
        },
        v);
}

// Search bounds are the first two float inputs; [-1, 1] when absent.
std::pair<double, double> input_bounds(const InterpreterState& s)
{
    double found[2];
    int n = 0;
    for (const auto& v : s.inputs) {
        if (const double* d = std::get_if<double>(&v)) {
            found[n++] = *d;
            if (n == 2) return {std::min(found[0], found[1]), std::max(found[0], found[1])};
        }
    }
    return {-1.0, 1.0};
}

template <class Stack, class Rand>
void generic_op(InterpreterState& s, Stack& st, GenericOp op, Rand&& rand)
{
    const bool indexes_itself = static_cast<const void*>(&st) == static_cast<const void*>(&s.integers);
    switch (op) {
    case GenericOp::dup:
        if (!st.empty()) st.dup();
        break;
    case GenericOp::flush: st.clear(); break;
    case GenericOp::pop:
        if (!st.empty()) st.pop();
        break;
    case GenericOp::rand: rand(); break;
    case GenericOp::rot:
        if (st.size() >= 3) st.rot();
        break;
    case GenericOp::stackdepth: s.integers.push(static_cast<std::int64_t>(st.size())); break;
    case GenericOp::swap:
        if (st.size() >= 2) st.swap();
        break;
    case GenericOp::shove:
    case GenericOp::yank:
    case GenericOp::yankdup: {
        const std::size_t needed = indexes_itself ? 2 : 1;
        if (s.integers.empty() || st.size() < needed) break;
        const std::int64_t index = s.integers.pop();
        const std::size_t depth = clamp_depth(index, st.size());
        if (op == GenericOp::shove) st.shove(depth);
        else if (op == GenericOp::yank) st.yank(depth);
        else st.yankdup(depth);
        break;
    }
    }
}

template <class F>
void float_unary(InterpreterState& s, F f)
{
    if (s.floats.empty()) return;
    const double r = f(s.floats.top());
    if (finite(r)) s.floats.set_top(r);
}

// Stack [a b] with b on top computes f(a, b).
template <class F>
void float_binary(InterpreterState& s, F f)
{
    if (s.floats.size() < 2) return;
    const double r = f(s.floats.peek(1), s.floats.peek(0));
    if (!finite(r)) return;
    s.floats.pop();
    s.floats.set_top(r);
}

template <class F>
void float_compare(InterpreterState& s, F f)
{
    if (s.floats.size() < 2) return;
    const double b = s.floats.pop();
    const double a = s.floats.pop();
    s.booleans.push(f(a, b));
}

// `f` returns false when the result is undefined or overflows.
template <class F>
void integer_binary(InterpreterState& s, F f)
{
    if (s.integers.size() < 2) return;
    std::int64_t r = 0;
    if (!f(s.integers.peek(1), s.integers.peek(0), r)) return;
    s.integers.pop();
    s.integers.set_top(r);
}

template <class F>
void integer_compare(InterpreterState& s, F f)
{
    if (s.integers.size() < 2) return;
    const std::int64_t b = s.integers.pop();
    const std::int64_t a = s.integers.pop();
    s.booleans.push(f(a, b));
}

template <class F>
void boolean_binary(InterpreterState& s, F f)
{
    if (s.booleans.size() < 2) return;
    const bool b = s.booleans.pop();
    const bool a = s.booleans.pop();
    s.booleans.push(f(a, b));
}

bool integer_pow(std::int64_t base, std::int64_t exponent, std::int64_t& out)
{
    if (exponent < 0) {
        if (base == 0) return false;
        if (base == 1) out = 1;
        else if (base == -1) out = (exponent % 2 == 0) ? 1 : -1;
        else out = 0;
        return true;
    }
    std::int64_t result = 1;
    std::int64_t b = base;
    std::uint64_t e = static_cast<std::uint64_t>(exponent);
    while (e) {
        if (e & 1u) {
            if (__builtin_mul_overflow(result, b, &result)) return false;
        }
        e >>= 1u;
        if (e && __builtin_mul_overflow(b, b, &b)) return false;
    }
    out = result;
    return true;
}

bool fits_int64(double v)
{
    return v >= -9.2233720368547758e18 && v < 9.2233720368547758e18;
}

// ---- vector instructions --------------------------------------------------

template <class F>
void vector_binary(InterpreterState& s, F f)
{
    if (s.vectors.size() < 2) return;
    const auto a = s.vectors.peek(1);
    const auto b = s.vectors.peek(0);
    auto& out = scratch(s.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f(a[i], b[i]);
        if (!finite(out[i])) return;
    }
    s.vectors.pop();
    std::copy(out.begin(), out.end(), s.vectors.top().begin());
}

void vector_dim(InterpreterState& s, bool multiply)
{
    if (s.vectors.empty() || s.floats.empty() || s.integers.empty()) return;
    const double f = s.floats.top();
    const std::size_t i = static_cast<std::size_t>(magnitude(s.integers.top()) % s.dim());
    const double old = s.vectors.top()[i];
    const double r = multiply ? old * f : old + f;
    if (!finite(r)) return;
    s.floats.pop();
    s.integers.pop();
    s.vectors.top()[i] = r;
}

// Runs one exec item to completion (or until the move's budget runs out).
void run_nested(InterpreterState& s, const SwarmView& view, const Atom& body)
{
    const std::size_t base = s.exec.size();
    s.exec.push_back(body);
    while (s.exec.size() > base && s.executions < s.limits.max_executions_per_move) step(s, view);
    if (s.exec.size() > base) s.exec.erase(s.exec.begin() + static_cast<std::ptrdiff_t>(base), s.exec.end());
}

// Pushes `operands` to the float stack, runs `body`, and returns the new
// float-stack top if the stack ended up deeper than before the push.
// The float stack is restored to its pre-push depth in that case.
template <std::size_t N>
double run_on_components(InterpreterState& s, const SwarmView& view, const Atom& body,
                         const std::array<double, N>& operands, double unchanged)
{
    const std::size_t depth = s.floats.size();
    for (double v : operands) s.floats.push(v);
    run_nested(s, view, body);
    if (s.floats.size() <= depth) return unchanged;
    const double r = s.floats.top();
    while (s.floats.size() > depth) s.floats.pop();
    return r;
}

void vector_apply(InterpreterState& s, const SwarmView& view)
{
    if (s.vectors.empty() || s.exec.empty()) return;
    const auto top = s.vectors.top();
    std::vector<double> v(top.begin(), top.end());
    s.vectors.pop();
    const Atom body = std::move(s.exec.back());
    s.exec.pop_back();
    for (double& c : v) c = run_on_components<1>(s, view, body, {c}, c);
    s.vectors.push(v);
}

void vector_zip(InterpreterState& s, const SwarmView& view)
{
    if (s.vectors.size() < 2 || s.exec.empty()) return;
    const auto pa = s.vectors.peek(1);
    const auto pb = s.vectors.peek(0);
    std::vector<double> a(pa.begin(), pa.end());
    std::vector<double> b(pb.begin(), pb.end());
    s.vectors.pop();
    s.vectors.pop();
    const Atom body = std::move(s.exec.back());
    s.exec.pop_back();
    // a's component ends on top, so a body that leaves the pair alone keeps a.
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = run_on_components<2>(s, view, body, {b[i], a[i]}, a[i]);
    s.vectors.push(a);
}

void vector_between(InterpreterState& s)
{
    if (s.vectors.size() < 2 || s.floats.empty()) return;
    const double t = std::clamp(s.floats.top(), 0.0, 1.0);
    const auto a = s.vectors.peek(1);
    const auto b = s.vectors.peek(0);
    auto& out = scratch(s.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::lerp(a[i], b[i], t);
        if (!finite(out[i])) return;
    }
    s.floats.pop();
    s.vectors.pop();
    std::copy(out.begin(), out.end(), s.vectors.top().begin());
}

void vector_scale(InterpreterState& s)
{
    if (s.vectors.empty() || s.floats.empty()) return;
    const double k = s.floats.top();
    const auto v = s.vectors.top();
    auto& out = scratch(s.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = v[i] * k;
        if (!finite(out[i])) return;
    }
    s.floats.pop();
    std::copy(out.begin(), out.end(), s.vectors.top().begin());
}

void vector_dprod(InterpreterState& s)
{
    if (s.vectors.size() < 2) return;
    const auto a = s.vectors.peek(1);
    const auto b = s.vectors.peek(0);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    if (!finite(sum)) return;
    s.vectors.pop();
    s.vectors.pop();
    s.floats.push(sum);
}

void vector_mag(InterpreterState& s)
{
    if (s.vectors.empty()) return;
    const auto v = s.vectors.top();
    double scale = 0.0;
    for (double c : v) scale = std::max(scale, std::fabs(c));
    double r = 0.0;
    if (scale > 0.0) {
        double sum = 0.0;
        for (double c : v) sum += (c / scale) * (c / scale);
        r = scale * std::sqrt(sum);
    }
    if (!finite(r)) return;
    s.vectors.pop();
    s.floats.push(r);
}

void vector_rand(InterpreterState& s)
{
    const auto [lo, hi] = input_bounds(s);
    auto out = s.vectors.push_slot();
    for (double& c : out) c = std::lerp(lo, hi, uniform_real(s.rng, 0.0, 1.0));
}

void vector_urand(InterpreterState& s)
{
    auto out = s.vectors.push_slot();
    double norm = 0.0;
    while (norm == 0.0) {
        double sum = 0.0;
        for (double& c : out) {
            c = gaussian(s.rng, 0.0, 1.0);
            sum += c * c;
        }
        norm = std::sqrt(sum);
    }
    for (double& c : out) c /= norm;
}

void vector_wrand(InterpreterState& s)
{
    if (s.floats.empty()) return;
    const double w = std::fabs(s.floats.pop());
    auto out = s.vectors.push_slot();
    for (double& c : out) c = w * uniform_real(s.rng, -1.0, 1.0);
}

void vector_lookup(InterpreterState& s, const SwarmView& view, PointKind which)
{
    if (view.empty()) return;
    std::int64_t index = -1;
    if (!s.integers.empty()) index = s.integers.pop();
    const auto p = view.point(which, view.resolve(index));
    if (p.size() == s.dim()) s.vectors.push(p);
}

// ---- exec instructions ----------------------------------------------------

Atom pop_exec(InterpreterState& s)
{
    Atom a = std::move(s.exec.back());
    s.exec.pop_back();
    return a;
}

void exec_do_range(InterpreterState& s)
{
    if (s.integers.size() < 2 || s.exec.empty()) return;
    const std::int64_t dest = s.integers.pop();
    const std::int64_t current = s.integers.pop();
    Atom body = pop_exec(s);
    if (current != dest) {
        const std::int64_t next = current + (dest > current ? 1 : -1);
        s.exec.push_back(Atom::code_block(
            {Atom::literal(next), Atom::literal(dest), Atom::instruction(Op::exec_do_range), body}));
    }
    s.integers.push(current);
    s.exec.push_back(std::move(body));
}

void exec_do_count(InterpreterState& s, bool push_index)
{
    if (s.integers.empty() || s.exec.empty()) return;
    const std::int64_t n = s.integers.pop();
    Atom body = pop_exec(s);
    if (n <= 0) return;
    if (!push_index) body = Atom::code_block({Atom::instruction(Op::integer_pop), std::move(body)});
    s.exec.push_back(Atom::code_block({Atom::literal(std::int64_t{0}), Atom::literal(n - 1),
                                       Atom::instruction(Op::exec_do_range), std::move(body)}));
}

// Keeps the top exec item when `first` holds, otherwise the one below it.
void exec_branch(InterpreterState& s, bool first)
{
    Atom a = pop_exec(s);
    Atom b = pop_exec(s);
    s.exec.push_back(first ? std::move(a) : std::move(b));
}

void execute_instruction(InterpreterState& s, Op op, const SwarmView& view)
{
    if (auto g = generic_info(op)) {
        switch (g->stack) {
        case StackType::boolean:
            generic_op(s, s.booleans, g->op, [&] { s.booleans.push(coin(s.rng)); });
            break;
        case StackType::real:
            generic_op(s, s.floats, g->op, [&] { s.floats.push(uniform_real(s.rng, float_rand_lo, float_rand_hi)); });
            break;
        case StackType::integer:
            generic_op(s, s.integers, g->op,
                       [&] { s.integers.push(uniform_int(s.rng, integer_rand_lo, integer_rand_hi)); });
            break;
        case StackType::vector: generic_op(s, s.vectors, g->op, [&] { vector_rand(s); }); break;
        default: break;
        }
        return;
    }

    switch (op) {
    // boolean
    case Op::boolean_eq: boolean_binary(s, [](bool a, bool b) { return a == b; }); break;
    case Op::boolean_and: boolean_binary(s, [](bool a, bool b) { return a && b; }); break;
    case Op::boolean_or: boolean_binary(s, [](bool a, bool b) { return a || b; }); break;
    case Op::boolean_xor: boolean_binary(s, [](bool a, bool b) { return a != b; }); break;
    case Op::boolean_not:
        if (!s.booleans.empty()) s.booleans.set_top(!s.booleans.top());
        break;
    case Op::boolean_fromfloat:
        if (!s.floats.empty()) s.booleans.push(s.floats.pop() != 0.0);
        break;
    case Op::boolean_frominteger:
        if (!s.integers.empty()) s.booleans.push(s.integers.pop() != 0);
        break;

    // exec
    case Op::exec_eq:
        if (s.exec.size() >= 2) {
            Atom a = pop_exec(s);
            Atom b = pop_exec(s);
            s.booleans.push(a == b);
        }
        break;
    case Op::exec_dup:
        if (!s.exec.empty()) s.exec.push_back(s.exec.back());
        break;
    case Op::exec_do_range: exec_do_range(s); break;
    case Op::exec_do_count: exec_do_count(s, true); break;
    case Op::exec_do_times: exec_do_count(s, false); break;
    case Op::exec_if:
        if (!s.booleans.empty() && s.exec.size() >= 2) exec_branch(s, s.booleans.pop());
        break;
    case Op::exec_iflt:
        if (s.floats.size() >= 2 && s.exec.size() >= 2) {
            const double b = s.floats.pop();
            const double a = s.floats.pop();
            exec_branch(s, a < b);
        }
        break;
    case Op::exec_noop: break;

    // float
    case Op::float_mod: float_binary(s, [](double a, double b) { return b == 0.0 ? NAN : std::fmod(a, b); }); break;
    case Op::float_mul: float_binary(s, [](double a, double b) { return a * b; }); break;
    case Op::float_add: float_binary(s, [](double a, double b) { return a + b; }); break;
    case Op::float_sub: float_binary(s, [](double a, double b) { return a - b; }); break;
    case Op::float_div: float_binary(s, [](double a, double b) { return b == 0.0 ? NAN : a / b; }); break;
    case Op::float_max: float_binary(s, [](double a, double b) { return std::max(a, b); }); break;
    case Op::float_min: float_binary(s, [](double a, double b) { return std::min(a, b); }); break;
    case Op::float_pow: float_binary(s, [](double a, double b) { return std::pow(a, b); }); break;
    case Op::float_lt: float_compare(s, [](double a, double b) { return a < b; }); break;
    case Op::float_eq: float_compare(s, [](double a, double b) { return a == b; }); break;
    case Op::float_gt: float_compare(s, [](double a, double b) { return a > b; }); break;
    case Op::float_abs: float_unary(s, [](double a) { return std::fabs(a); }); break;
    case Op::float_neg: float_unary(s, [](double a) { return -a; }); break;
    case Op::float_cos: float_unary(s, [](double a) { return std::cos(a); }); break;
    case Op::float_sin: float_unary(s, [](double a) { return std::sin(a); }); break;
    case Op::float_tan: float_unary(s, [](double a) { return std::tan(a); }); break;
    case Op::float_exp: float_unary(s, [](double a) { return std::exp(a); }); break;
    case Op::float_ln: float_unary(s, [](double a) { return a > 0.0 ? std::log(a) : NAN; }); break;
    case Op::float_log: float_unary(s, [](double a) { return a > 0.0 ? std::log10(a) : NAN; }); break;
    case Op::float_erc: s.floats.push(uniform_real(s.rng, float_rand_lo, float_rand_hi)); break;
    case Op::float_fromboolean:
        if (!s.booleans.empty()) s.floats.push(s.booleans.pop() ? 1.0 : 0.0);
        break;
    case Op::float_frominteger:
        if (!s.integers.empty()) s.floats.push(static_cast<double>(s.integers.pop()));
        break;

    // input
    case Op::input_inall:
        for (const auto& v : s.inputs) push_input(s, v);
        break;
    case Op::input_inallrev:
        for (auto it = s.inputs.rbegin(); it != s.inputs.rend(); ++it) push_input(s, *it);
        break;
    case Op::input_index:
        if (!s.integers.empty() && !s.inputs.empty()) {
            const std::uint64_t i = magnitude(s.integers.pop());
            push_input(s, s.inputs[static_cast<std::size_t>(i % s.inputs.size())]);
        }
        break;
    case Op::input_stackdepth: s.integers.push(static_cast<std::int64_t>(s.inputs.size())); break;

    // integer
    case Op::integer_add:
        integer_binary(s, [](std::int64_t a, std::int64_t b, std::int64_t& r) { return !__builtin_add_overflow(a, b, &r); });
        break;
    case Op::integer_sub:
        integer_binary(s, [](std::int64_t a, std::int64_t b, std::int64_t& r) { return !__builtin_sub_overflow(a, b, &r); });
        break;
    case Op::integer_mul:
        integer_binary(s, [](std::int64_t a, std::int64_t b, std::int64_t& r) { return !__builtin_mul_overflow(a, b, &r); });
        break;
    case Op::integer_div:
        integer_binary(s, [](std::int64_t a, std::int64_t b, std::int64_t& r) {
            if (b == 0 || (a == std::numeric_limits<std::int64_t>::min() && b == -1)) return false;
            r = a / b;
            return true;
        });
        break;
    case Op::integer_mod:
        integer_binary(s, [](std::int64_t a, std::int64_t b, std::int64_t& r) {
            if (b == 0 || (a == std::numeric_limits<std::int64_t>::min() && b == -1)) return false;
            r = a % b;
            return true;
        });
        break;
    case Op::integer_max:
        integer_binary(s, [](std::int64_t a, std::int64_t b, std::int64_t& r) { r = std::max(a, b); return true; });
        break;
    case Op::integer_min:
        integer_binary(s, [](std::int64_t a, std::int64_t b, std::int64_t& r) { r = std::min(a, b); return true; });
        break;
    case Op::integer_pow: integer_binary(s, integer_pow); break;
    case Op::integer_lt: integer_compare(s, [](std::int64_t a, std::int64_t b) { return a < b; }); break;
    case Op::integer_eq: integer_compare(s, [](std::int64_t a, std::int64_t b) { return a == b; }); break;
    case Op::integer_gt: integer_compare(s, [](std::int64_t a, std::int64_t b) { return a > b; }); break;
    case Op::integer_abs:
    case Op::integer_neg:
        if (!s.integers.empty() && s.integers.top() != std::numeric_limits<std::int64_t>::min()) {
            const std::int64_t v = s.integers.top();
            s.integers.set_top(op == Op::integer_neg ? -v : (v < 0 ? -v : v));
        }
        break;
    case Op::integer_ln:
    case Op::integer_log:
        if (!s.integers.empty() && s.integers.top() > 0) {
            const double v = static_cast<double>(s.integers.top());
            s.integers.set_top(static_cast<std::int64_t>(op == Op::integer_ln ? std::log(v) : std::log10(v)));
        }
        break;
    case Op::integer_erc: s.integers.push(uniform_int(s.rng, integer_rand_lo, integer_rand_hi)); break;
    case Op::integer_fromboolean:
        if (!s.booleans.empty()) s.integers.push(s.booleans.pop() ? 1 : 0);
        break;
    case Op::integer_fromfloat:
        if (!s.floats.empty() && fits_int64(s.floats.top()))
            s.integers.push(static_cast<std::int64_t>(s.floats.pop()));
        break;

    // vector
    case Op::vector_add: vector_binary(s, [](double a, double b) { return a + b; }); break;
    case Op::vector_sub: vector_binary(s, [](double a, double b) { return a - b; }); break;
    case Op::vector_mul: vector_binary(s, [](double a, double b) { return a * b; }); break;
    case Op::vector_div: vector_binary(s, [](double a, double b) { return b == 0.0 ? NAN : a / b; }); break;
    case Op::vector_scale: vector_scale(s); break;
    case Op::vector_dprod: vector_dprod(s); break;
    case Op::vector_mag: vector_mag(s); break;
    case Op::vector_dim_add: vector_dim(s, false); break;
    case Op::vector_dim_mul: vector_dim(s, true); break;
    case Op::vector_apply: vector_apply(s, view); break;
    case Op::vector_zip: vector_zip(s, view); break;
    case Op::vector_between: vector_between(s); break;
    case Op::vector_urand: vector_urand(s); break;
    case Op::vector_wrand: vector_wrand(s); break;
    case Op::vector_current: vector_lookup(s, view, PointKind::current); break;
    case Op::vector_best: vector_lookup(s, view, PointKind::best); break;

    default: break;
    }
}

void trim(InterpreterState& s)
{
    const std::size_t n = s.limits.max_stack_depth;
    s.booleans.keep_newest(n);
    s.floats.keep_newest(n);
    s.integers.keep_newest(n);
    s.vectors.keep_newest(n);
}

} // namespace

StepResult step(InterpreterState& s, const SwarmView& view)
{
    if (s.exec.empty() || s.executions >= s.limits.max_executions_per_move) return StepResult::halted;
    Atom atom = std::move(s.exec.back());
    s.exec.pop_back();
    ++s.executions;

    switch (atom.kind) {
    case AtomKind::instruction: execute_instruction(s, atom.op, view); break;
    case AtomKind::real: s.floats.push(atom.real); break;
    case AtomKind::integer: s.integers.push(atom.integer); break;
    case AtomKind::boolean: s.booleans.push(atom.boolean); break;
    case AtomKind::block:
        for (auto it = atom.block->rbegin(); it != atom.block->rend(); ++it) s.exec.push_back(*it);
        break;
    }
    return (s.exec.empty() || s.executions >= s.limits.max_executions_per_move) ? StepResult::halted
                                                                                : StepResult::running;
}

void execute_pending(InterpreterState& state, const SwarmView& view)
{
    while (step(state, view) == StepResult::running) {
    }
}

void run_move(InterpreterState& state, const Program& program, const SwarmView& view)
{
    state.exec.clear();
    state.executions = 0;
    const auto& items = program.items();
    state.exec.insert(state.exec.end(), items.rbegin(), items.rend());
    execute_pending(state, view);
    trim(state);
}

} // namespace pushopt
