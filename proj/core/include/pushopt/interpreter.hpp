#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

#include "pushopt/program.hpp"
#include "pushopt/random.hpp"
#include "pushopt/swarm.hpp"

namespace pushopt {

struct ExecutionLimits {
    std::size_t max_executions_per_move = 100;
    std::size_t max_program_size = 100;
    // Data stacks are trimmed to this depth (oldest items dropped) after
    // every move, bounding memory over long runs.
    std::size_t max_stack_depth = 1000;

    void validate() const
    {
        if (max_executions_per_move == 0 || max_program_size == 0 || max_stack_depth == 0)
            throw std::invalid_argument("execution limits must be strictly positive");
    }
};

/// Stack of scalars; index 0 of the storage is the bottom.
template <class T>
class ScalarStack {
    using Storage = std::conditional_t<std::is_same_v<T, bool>, std::uint8_t, T>;

public:
    using value_type = T;

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    void clear() { items_.clear(); }

    void push(T v) { items_.push_back(static_cast<Storage>(v)); }
    T top() const { return static_cast<T>(items_.back()); }
    /// Element `depth` positions below the top.
    T peek(std::size_t depth) const { return static_cast<T>(items_[items_.size() - 1 - depth]); }
    T pop()
    {
        T v = static_cast<T>(items_.back());
        items_.pop_back();
        return v;
    }
    void set_top(T v) { items_.back() = static_cast<Storage>(v); }

    void dup() { items_.push_back(items_.back()); }
    void swap() { std::swap(items_[size() - 1], items_[size() - 2]); }
    // third item to the top: [a b c] -> [b c a]
    void rot() { std::rotate(items_.end() - 3, items_.end() - 2, items_.end()); }
    void yank(std::size_t depth)
    {
        auto it = items_.end() - 1 - static_cast<std::ptrdiff_t>(depth);
        std::rotate(it, it + 1, items_.end());
    }
    void yankdup(std::size_t depth) { items_.push_back(items_[size() - 1 - depth]); }
    void shove(std::size_t depth)
    {
        auto it = items_.end() - 1 - static_cast<std::ptrdiff_t>(depth);
        std::rotate(it, items_.end() - 1, items_.end());
    }
    void keep_newest(std::size_t n)
    {
        if (items_.size() > n) items_.erase(items_.begin(), items_.end() - static_cast<std::ptrdiff_t>(n));
    }

    /// Contents from bottom to top.
    std::vector<T> to_vector() const { return {items_.begin(), items_.end()}; }

    friend bool operator==(const ScalarStack&, const ScalarStack&) = default;

private:
    std::vector<Storage> items_;
};

/// Stack of fixed-dimension vectors stored contiguously.
class VectorStack {
public:
    explicit VectorStack(std::size_t dim = 1) : dim_(dim)
    {
        if (dim == 0) throw std::invalid_argument("vector dimension must be positive");
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return data_.size() / dim_; }
    bool empty() const { return data_.empty(); }
    void clear() { data_.clear(); }

    std::span<const double> peek(std::size_t depth) const
    {
        return {data_.data() + (size() - 1 - depth) * dim_, dim_};
    }
    std::span<const double> top() const { return peek(0); }
    std::span<double> top() { return {data_.data() + data_.size() - dim_, dim_}; }

    void push(std::span<const double> v);
    /// Pushes an uninitialised slot and returns it for writing.
    std::span<double> push_slot()
    {
        data_.resize(data_.size() + dim_);
        return top();
    }
    void pop() { data_.resize(data_.size() - dim_); }

    void dup();
    void swap();
    void rot();
    void yank(std::size_t depth);
    void yankdup(std::size_t depth);
    void shove(std::size_t depth);
    void keep_newest(std::size_t n);

    std::vector<std::vector<double>> to_vector() const;

    friend bool operator==(const VectorStack&, const VectorStack&) = default;

private:
    void rotate_range(std::size_t first_item, std::size_t middle_item);

    std::size_t dim_;
    std::vector<double> data_;
};

using InputValue = std::variant<bool, std::int64_t, double>;

/// Typed stacks of one population member. Data stacks persist across moves;
/// the exec stack is reseeded with the program at every move.
struct InterpreterState {
    InterpreterState(std::size_t dim, std::uint64_t seed, ExecutionLimits limits = {})
        : vectors(dim), rng(seed), limits(limits)
    {
    }

    ScalarStack<bool> booleans;
    ScalarStack<double> floats;
    ScalarStack<std::int64_t> integers;
    VectorStack vectors;
    AtomList exec; // back() is the top
    // Run constants; instructions only read them.
    std::vector<InputValue> inputs;
    std::size_t executions = 0;

    Rng rng;
    ExecutionLimits limits;

    std::size_t dim() const { return vectors.dim(); }
    void clear_stacks();
};

enum class StepResult : std::uint8_t { running, halted };

/// Pops and executes one exec-stack item. Instructions with insufficient
/// operands, or whose result would be non-finite, leave the data stacks
/// untouched.
StepResult step(InterpreterState& state, const SwarmView& view);

/// Executes one move: reseeds the exec stack with `program`, resets the
/// execution counter and steps until the exec stack empties or the limit
/// is reached. Data stacks are then trimmed to limits.max_stack_depth.
void run_move(InterpreterState& state, const Program& program, const SwarmView& view);

/// Steps whatever is already on the exec stack until it empties or the
/// execution limit is reached. The counter is not reset.
void execute_pending(InterpreterState& state, const SwarmView& view);

} // namespace pushopt
