#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pushopt/instruction_set.hpp"

namespace pushopt {

enum class AtomKind : std::uint8_t { instruction, real, integer, boolean, block };

struct Atom;
using AtomList = std::vector<Atom>;

/// One item of a Push program: a named instruction, a literal, or a nested
/// code block. Blocks are immutable and shared, so copying an Atom is cheap.
struct Atom {
    AtomKind kind = AtomKind::instruction;
    Op op = Op::exec_noop;
    bool boolean = false;
    std::int64_t integer = 0;
    double real = 0.0;
    std::shared_ptr<const AtomList> block;

    static Atom instruction(Op op)
    {
        Atom a;
        a.op = op;
        return a;
    }
    static Atom literal(double v)
    {
        Atom a;
        a.kind = AtomKind::real;
        a.real = v;
        return a;
    }
    static Atom literal(std::int64_t v)
    {
        Atom a;
        a.kind = AtomKind::integer;
        a.integer = v;
        return a;
    }
    static Atom literal(bool v)
    {
        Atom a;
        a.kind = AtomKind::boolean;
        a.boolean = v;
        return a;
    }
    static Atom code_block(AtomList items)
    {
        Atom a;
        a.kind = AtomKind::block;
        a.block = std::make_shared<const AtomList>(std::move(items));
        return a;
    }

    /// Points covered by this atom: 1, plus the contents of a block.
    std::size_t size() const;

    friend bool operator==(const Atom& a, const Atom& b);
};

/// A linear Push program: the evolvable genome and the executable optimiser.
class Program {
public:
    Program() = default;
    explicit Program(AtomList items) : items_(std::move(items)) {}

    const AtomList& items() const { return items_; }
    AtomList& items() { return items_; }
    bool empty() const { return items_.empty(); }

    /// Number of points, counting nested blocks as one plus their contents.
    /// For flat programs this is the number of printed tokens.
    std::size_t size() const;

    friend bool operator==(const Program&, const Program&) = default;

private:
    AtomList items_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    /// Byte offset of the offending token in the input text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses a single parenthesized program, e.g. "(float.sin vector.wrand)".
/// Throws ParseError on unknown instructions, malformed literals, unbalanced
/// parentheses, or text outside the outer list.
Program parse_program(std::string_view text);

/// Canonical text form; parse_program(print_program(p)) == p.
std::string print_program(const Program& p);
std::string print_atom(const Atom& a);

} // namespace pushopt
