#include "pushopt/program.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

namespace pushopt {

std::size_t Atom::size() const
{
    if (kind != AtomKind::block) return 1;
    return std::accumulate(block->begin(), block->end(), std::size_t{1},
                           [](std::size_t n, const Atom& a) { return n + a.size(); });
}

bool operator==(const Atom& a, const Atom& b)
{
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case AtomKind::instruction: return a.op == b.op;
    case AtomKind::real: return a.real == b.real;
    case AtomKind::integer: return a.integer == b.integer;
    case AtomKind::boolean: return a.boolean == b.boolean;
    case AtomKind::block: return a.block == b.block || *a.block == *b.block;
    }
    return false;
}

std::size_t Program::size() const
{
    return std::accumulate(items_.begin(), items_.end(), std::size_t{0},
                           [](std::size_t n, const Atom& a) { return n + a.size(); });
}

namespace {

struct Token {
    std::string_view text;
    std::size_t position;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (is_space(c)) {
            ++i;
        } else if (c == '(' || c == ')') {
            tokens.push_back({text.substr(i, 1), i});
            ++i;
        } else {
            const std::size_t start = i;
            while (i < text.size() && !is_space(text[i]) && text[i] != '(' && text[i] != ')') ++i;
            tokens.push_back({text.substr(start, i - start), start});
        }
    }
    return tokens;
}

bool looks_numeric(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    return i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.');
}

Atom parse_atom(const Token& tok)
{
    const std::string_view s = tok.text;
    if (s == "true") return Atom::literal(true);
    if (s == "false") return Atom::literal(false);

    if (looks_numeric(s)) {
        // from_chars rejects a leading '+'
        const std::string_view digits = s[0] == '+' ? s.substr(1) : s;
        const char* first = digits.data();
        const char* last = digits.data() + digits.size();
        if (digits.find_first_of(".eE") == std::string_view::npos) {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{} || ptr != last)
                throw ParseError("malformed integer literal '" + std::string(s) + "'", tok.position);
            return Atom::literal(v);
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || !std::isfinite(v))
            throw ParseError("malformed float literal '" + std::string(s) + "'", tok.position);
        return Atom::literal(v);
    }

    if (auto op = find_instruction(s)) return Atom::instruction(*op);
    throw ParseError("unknown instruction '" + std::string(s) + "'", tok.position);
}

// Parses the list whose opening parenthesis is tokens[pos - 1]; returns the
// index just past the matching ')'.
std::size_t parse_list(const std::vector<Token>& tokens, std::size_t pos, std::size_t open_position,
                       AtomList& out)
{
    while (pos < tokens.size()) {
        const Token& tok = tokens[pos];
        if (tok.text == ")") return pos + 1;
        if (tok.text == "(") {
            AtomList inner;
            pos = parse_list(tokens, pos + 1, tok.position, inner);
            out.push_back(Atom::code_block(std::move(inner)));
        } else {
            out.push_back(parse_atom(tok));
            ++pos;
        }
    }
    throw ParseError("unbalanced parentheses: '(' is never closed", open_position);
}

void print_real(std::string& out, double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string_view s(buf, static_cast<std::size_t>(ptr - buf));
    out += s;
    if (s.find_first_of(".eE") == std::string_view::npos) out += ".0";
}

void print_into(std::string& out, const Atom& a)
{
    switch (a.kind) {
    case AtomKind::instruction: out += instruction_name(a.op); break;
    case AtomKind::real: print_real(out, a.real); break;
    case AtomKind::integer: out += std::to_string(a.integer); break;
    case AtomKind::boolean: out += a.boolean ? "true" : "false"; break;
    case AtomKind::block:
        out += '(';
        for (std::size_t i = 0; i < a.block->size(); ++i) {
            if (i) out += ' ';
            print_into(out, (*a.block)[i]);
        }
        out += ')';
        break;
    }
}

} // namespace

Program parse_program(std::string_view text)
{
    const auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError("empty program text", 0);
    if (tokens.front().text != "(")
        throw ParseError("program must be a parenthesized list, found '" + std::string(tokens.front().text) + "'",
                         tokens.front().position);
    AtomList items;
    const std::size_t end = parse_list(tokens, 1, tokens.front().position, items);
    if (end != tokens.size()) {
        const Token& extra = tokens[end];
        if (extra.text == ")") throw ParseError("unbalanced parentheses: unexpected ')'", extra.position);
        throw ParseError("unexpected text after program: '" + std::string(extra.text) + "'", extra.position);
    }
    return Program(std::move(items));
}

std::string print_atom(const Atom& a)
{
    std::string out;
    print_into(out, a);
    return out;
}

std::string print_program(const Program& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.items().size(); ++i) {
        if (i) out += ' ';
        print_into(out, p.items()[i]);
    }
    out += ')';
    return out;
}

} // namespace pushopt
