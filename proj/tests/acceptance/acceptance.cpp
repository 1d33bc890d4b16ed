// Acceptance suite: one PASS/FAIL line per criterion.
//
//   pushopt_acceptance [N...] [--expect-fail N]...
//
// With no numbers every criterion runs. The exit status is 0 when exactly
// the criteria named by --expect-fail fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pushopt/evolve.hpp"
#include "pushopt/report_io.hpp"
#include "pushopt/throughput.hpp"

using namespace pushopt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int precision = 4)
{
    std::ostringstream ss;
    ss.precision(precision);
    ss << v;
    return ss.str();
}

std::string fixture_text(const std::string& name)
{
    std::ifstream in(std::string(PUSHOPT_FIXTURE_DIR) + "/" + name + "_best.push");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<std::string> fixture_names{"f1", "f9", "f12", "f13", "f14"};

// ---- 1: interpreter fuzz ---------------------------------------------------

// Operands an instruction needs and, when it runs, how each data stack's
// size changes. Instructions whose effect depends on what they execute
// (apply, zip) are marked unchecked; flushes are checked separately.
struct OperandSpec {
    int b = 0, f = 0, i = 0, v = 0, x = 0; // required: bool, float, int, vector, exec items
    int db = 0, df = 0, di = 0, dv = 0;
    bool checked = true;
    bool needs_view = false;
    bool lookup = false; // current/best: pops an integer only when present
    char flush = 0;      // stack emptied by a flush
};

std::map<std::string, OperandSpec> operand_table()
{
    std::map<std::string, OperandSpec> t;
    auto req = [](int b, int f, int i, int v, int x = 0) {
        OperandSpec s;
        s.b = b, s.f = f, s.i = i, s.v = v, s.x = x;
        return s;
    };
    auto with = [](OperandSpec s, int db, int df, int di, int dv) {
        s.db = db, s.df = df, s.di = di, s.dv = dv;
        return s;
    };

    const std::pair<const char*, char> stacks[] = {{"boolean", 'b'}, {"float", 'f'}, {"integer", 'i'}, {"vector", 'v'}};
    for (const auto& [name, c] : stacks) {
        auto on = [&, c = c](int n) {
            OperandSpec s;
            (c == 'b' ? s.b : c == 'f' ? s.f : c == 'i' ? s.i : s.v) = n;
            return s;
        };
        auto delta = [c = c](OperandSpec s, int d) {
            (c == 'b' ? s.db : c == 'f' ? s.df : c == 'i' ? s.di : s.dv) += d;
            return s;
        };
        const std::string p = std::string(name) + ".";
        t[p + "dup"] = delta(on(1), +1);
        t[p + "pop"] = delta(on(1), -1);
        t[p + "swap"] = on(2);
        t[p + "rot"] = on(3);
        t[p + "rand"] = delta(on(0), +1);
        OperandSpec flush;
        flush.flush = c;
        t[p + "flush"] = flush;
        OperandSpec depth;
        depth.di = 1;
        t[p + "stackdepth"] = depth;
        if (c == 'i') {
            t[p + "yank"] = with(req(0, 0, 2, 0), 0, 0, -1, 0);
            t[p + "shove"] = with(req(0, 0, 2, 0), 0, 0, -1, 0);
            t[p + "yankdup"] = with(req(0, 0, 2, 0), 0, 0, 0, 0);
        } else {
            OperandSpec idx = on(1);
            idx.i = 1;
            t[p + "yank"] = delta(with(idx, 0, 0, -1, 0), 0);
            t[p + "shove"] = delta(with(idx, 0, 0, -1, 0), 0);
            t[p + "yankdup"] = delta(with(idx, 0, 0, -1, 0), +1);
        }
    }

    for (const char* op : {"=", "and", "or", "xor"}) t[std::string("boolean.") + op] = with(req(2, 0, 0, 0), -1, 0, 0, 0);
    t["boolean.not"] = req(1, 0, 0, 0);
    t["boolean.fromfloat"] = with(req(0, 1, 0, 0), 1, -1, 0, 0);
    t["boolean.frominteger"] = with(req(0, 0, 1, 0), 1, 0, -1, 0);

    t["exec.="] = with(req(0, 0, 0, 0, 2), 1, 0, 0, 0);
    t["exec.dup"] = req(0, 0, 0, 0, 1);
    t["exec.noop"] = req(0, 0, 0, 0);
    t["exec.if"] = with(req(1, 0, 0, 0, 2), -1, 0, 0, 0);
    t["exec.iflt"] = with(req(0, 2, 0, 0, 2), 0, -2, 0, 0);
    t["exec.do*range"] = with(req(0, 0, 2, 0, 1), 0, 0, -1, 0);
    t["exec.do*count"] = with(req(0, 0, 1, 0, 1), 0, 0, -1, 0);
    t["exec.do*times"] = with(req(0, 0, 1, 0, 1), 0, 0, -1, 0);

    for (const char* op : {"%", "*", "+", "-", "/", "max", "min", "pow"}) {
        t[std::string("float.") + op] = with(req(0, 2, 0, 0), 0, -1, 0, 0);
        t[std::string("integer.") + op] = with(req(0, 0, 2, 0), 0, 0, -1, 0);
    }
    for (const char* op : {"<", "=", ">"}) {
        t[std::string("float.") + op] = with(req(0, 2, 0, 0), 1, -2, 0, 0);
        t[std::string("integer.") + op] = with(req(0, 0, 2, 0), 1, 0, -2, 0);
    }
    for (const char* op : {"abs", "neg", "cos", "sin", "tan", "exp", "ln", "log"}) t[std::string("float.") + op] = req(0, 1, 0, 0);
    for (const char* op : {"abs", "neg", "ln", "log"}) t[std::string("integer.") + op] = req(0, 0, 1, 0);
    t["float.erc"] = with(req(0, 0, 0, 0), 0, 1, 0, 0);
    t["integer.erc"] = with(req(0, 0, 0, 0), 0, 0, 1, 0);
    t["float.fromboolean"] = with(req(1, 0, 0, 0), -1, 1, 0, 0);
    t["float.frominteger"] = with(req(0, 0, 1, 0), 0, 1, -1, 0);
    t["integer.fromboolean"] = with(req(1, 0, 0, 0), -1, 0, 1, 0);
    t["integer.fromfloat"] = with(req(0, 1, 0, 0), 0, -1, 1, 0);

    // input.* deltas depend on the input contents and are filled per state.
    for (const char* op : {"inall", "inallrev", "index", "stackdepth"}) {
        OperandSpec s;
        s.checked = false;
        t[std::string("input.") + op] = s;
    }

    for (const char* op : {"+", "-", "*", "/"}) t[std::string("vector.") + op] = with(req(0, 0, 0, 2), 0, 0, 0, -1);
    t["vector.scale"] = with(req(0, 1, 0, 1), 0, -1, 0, 0);
    t["vector.dprod"] = with(req(0, 0, 0, 2), 0, 1, 0, -2);
    t["vector.mag"] = with(req(0, 0, 0, 1), 0, 1, 0, -1);
    t["vector.dim+"] = with(req(0, 1, 1, 1), 0, -1, -1, 0);
    t["vector.dim*"] = with(req(0, 1, 1, 1), 0, -1, -1, 0);
    t["vector.between"] = with(req(0, 1, 0, 2), 0, -1, 0, -1);
    t["vector.urand"] = with(req(0, 0, 0, 0), 0, 0, 0, 1);
    t["vector.wrand"] = with(req(0, 1, 0, 0), 0, -1, 0, 1);
    OperandSpec apply = req(0, 0, 0, 1, 1);
    apply.checked = false;
    t["vector.apply"] = apply;
    OperandSpec zip = req(0, 0, 0, 2, 1);
    zip.checked = false;
    t["vector.zip"] = zip;
    for (const char* op : {"current", "best"}) {
        OperandSpec s = with(req(0, 0, 0, 0), 0, 0, 0, 1);
        s.needs_view = true;
        s.lookup = true;
        t[std::string("vector.") + op] = s;
    }
    return t;
}

double fuzz_double(Rng& rng)
{
    static const double specials[] = {0.0, -0.0, 1.0, -1.0, 1e300, -1e300, 1e-300, 5e-324,
                                      std::numeric_limits<double>::max(), -std::numeric_limits<double>::max(),
                                      std::numbers::pi, 0.5};
    switch (uniform_index(rng, 4)) {
    case 0: return specials[uniform_index(rng, std::size(specials))];
    case 1: return uniform_real(rng, -1e6, 1e6);
    default: return uniform_real(rng, -10.0, 10.0);
    }
}

std::int64_t fuzz_int(Rng& rng)
{
    static const std::int64_t specials[] = {0, 1, -1, 2, std::numeric_limits<std::int64_t>::max(),
                                            std::numeric_limits<std::int64_t>::min(), 63, 64, -64};
    switch (uniform_index(rng, 4)) {
    case 0: return specials[uniform_index(rng, std::size(specials))];
    case 1: return static_cast<std::int64_t>(rng());
    default: return uniform_int(rng, -20, 20);
    }
}

Atom fuzz_atom(Rng& rng, std::span<const InstructionInfo> registry, int depth = 0)
{
    switch (uniform_index(rng, depth < 1 ? 5 : 4)) {
    case 0: return Atom::literal(fuzz_double(rng));
    case 1: return Atom::literal(fuzz_int(rng));
    case 2: return Atom::literal(coin(rng));
    case 3: return Atom::instruction(registry[uniform_index(rng, registry.size())].op);
    default: {
        AtomList items;
        const std::size_t n = uniform_index(rng, 4);
        for (std::size_t k = 0; k < n; ++k) items.push_back(fuzz_atom(rng, registry, depth + 1));
        return Atom::code_block(std::move(items));
    }
    }
}

struct Snapshot {
    std::vector<bool> b;
    std::vector<double> f;
    std::vector<std::int64_t> i;
    std::vector<std::vector<double>> v;

    explicit Snapshot(const InterpreterState& s)
        : b(s.booleans.to_vector()), f(s.floats.to_vector()), i(s.integers.to_vector()), v(s.vectors.to_vector())
    {
    }
    bool operator==(const Snapshot&) const = default;
};

Outcome criterion_1()
{
    const auto start = Clock::now();
    const auto table = operand_table();
    const auto registry = instruction_registry();
    std::size_t missing = 0, applications = 0, type_violations = 0, nonfinite = 0, input_mutations = 0,
                operand_violations = 0, exceptions = 0;
    for (const auto& info : registry) missing += table.count(std::string(info.name)) == 0;

    Rng rng = make_rng(1, {101});
    const std::size_t target = 1'000'000;
    while (applications < target) {
        const std::size_t dim = std::array<std::size_t, 4>{1, 2, 3, 5}[uniform_index(rng, 4)];
        InterpreterState s(dim, rng());
        for (std::size_t k = uniform_index(rng, 6); k > 0; --k) s.booleans.push(coin(rng));
        for (std::size_t k = uniform_index(rng, 6); k > 0; --k) s.floats.push(fuzz_double(rng));
        for (std::size_t k = uniform_index(rng, 6); k > 0; --k) s.integers.push(fuzz_int(rng));
        for (std::size_t k = uniform_index(rng, 5); k > 0; --k) {
            std::vector<double> vec(dim);
            for (double& c : vec) c = fuzz_double(rng);
            s.vectors.push(vec);
        }
        if (coin(rng, 0.8)) {
            s.inputs = {-5.0, 5.0};
        } else {
            for (std::size_t k = uniform_index(rng, 4); k > 0; --k) {
                switch (uniform_index(rng, 3)) {
                case 0: s.inputs.emplace_back(coin(rng)); break;
                case 1: s.inputs.emplace_back(fuzz_int(rng)); break;
                default: s.inputs.emplace_back(fuzz_double(rng)); break;
                }
            }
        }
        std::vector<SearchVector> current, best;
        if (coin(rng)) {
            for (std::size_t k = 1 + uniform_index(rng, 4); k > 0; --k) {
                SearchVector a(dim), c(dim);
                for (std::size_t d = 0; d < dim; ++d) a[d] = uniform_real(rng, -5, 5), c[d] = uniform_real(rng, -5, 5);
                current.push_back(a);
                best.push_back(c);
            }
        }
        const SwarmView view{current, best, current.empty() ? 0 : uniform_index(rng, current.size())};

        const std::size_t below = uniform_index(rng, 3);
        for (std::size_t k = 0; k < below; ++k) s.exec.push_back(fuzz_atom(rng, registry));
        const InstructionInfo& info = registry[uniform_index(rng, registry.size())];
        s.exec.push_back(Atom::instruction(info.op));

        const auto inputs_before = s.inputs;
        const Snapshot before(s);
        ++applications;
        try {
            step(s, view);
        } catch (const std::exception&) {
            ++exceptions;
            continue;
        }
        const Snapshot after(s);

        for (double x : after.f) nonfinite += !std::isfinite(x);
        for (const auto& vec : after.v) {
            type_violations += vec.size() != dim;
            for (double x : vec) nonfinite += !std::isfinite(x);
        }
        input_mutations += s.inputs != inputs_before;

        const auto it = table.find(std::string(info.name));
        if (it == table.end()) continue;
        OperandSpec spec = it->second;
        const auto nb = static_cast<int>(before.b.size()), nf = static_cast<int>(before.f.size()),
                   ni = static_cast<int>(before.i.size()), nv = static_cast<int>(before.v.size()),
                   nx = static_cast<int>(below);
        const int db = static_cast<int>(after.b.size()) - nb, df = static_cast<int>(after.f.size()) - nf,
                  di = static_cast<int>(after.i.size()) - ni, dv = static_cast<int>(after.v.size()) - nv;

        if (spec.flush) {
            const bool ok = (spec.flush == 'b' ? after.b.empty() && di == 0 && df == 0 && dv == 0
                             : spec.flush == 'f' ? after.f.empty() && db == 0 && di == 0 && dv == 0
                             : spec.flush == 'i' ? after.i.empty() && db == 0 && df == 0 && dv == 0
                                                 : after.v.empty() && db == 0 && df == 0 && di == 0);
            operand_violations += !ok;
            continue;
        }
        if (info.name == "input.stackdepth") {
            operand_violations += !(di == 1 && db == 0 && df == 0 && dv == 0 &&
                                    after.i.back() == static_cast<std::int64_t>(inputs_before.size()));
            continue;
        }
        if (info.name == "input.inall" || info.name == "input.inallrev") {
            int eb = 0, ef = 0, ei = 0;
            for (const auto& in : inputs_before) {
                eb += std::holds_alternative<bool>(in);
                ei += std::holds_alternative<std::int64_t>(in);
                ef += std::holds_alternative<double>(in);
            }
            operand_violations += !(db == eb && df == ef && di == ei && dv == 0);
            continue;
        }
        if (info.name == "input.index") {
            const bool runs = ni >= 1 && !inputs_before.empty();
            operand_violations += runs ? !(di <= 0 && db + df + di == 0 && dv == 0) : !(after == before);
            continue;
        }

        bool sufficient = nb >= spec.b && nf >= spec.f && ni >= spec.i && nv >= spec.v && nx >= spec.x;
        if (spec.needs_view && view.empty()) sufficient = false;
        if (!sufficient) {
            operand_violations += !(after == before);
            continue;
        }
        if (!spec.checked) continue;
        if (spec.lookup && ni > 0) spec.di = -1;
        const bool matches = db == spec.db && df == spec.df && di == spec.di && dv == spec.dv;
        // Protected instructions may refuse to run; they must then leave
        // every data stack as it was.
        operand_violations += !(matches || after == before);
    }
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = missing == 0 && type_violations == 0 && nonfinite == 0 && input_mutations == 0 &&
             operand_violations == 0 && exceptions == 0 && elapsed < 60.0;
    o.detail = std::to_string(applications) + " applications in " + fmt(elapsed, 3) + " s; type violations " +
               std::to_string(type_violations) + ", non-finite " + std::to_string(nonfinite) +
               ", input mutations " + std::to_string(input_mutations) + ", operand-table mismatches " +
               std::to_string(operand_violations) + ", exceptions " + std::to_string(exceptions) +
               ", instructions missing from table " + std::to_string(missing);
    return o;
}

// ---- 2: fixtures -------------------------------------------------------------

Outcome criterion_2()
{
    Outcome o{true, ""};
    for (const auto& name : fixture_names) {
        try {
            const Program p = parse_program(fixture_text(name));
            const std::string printed = print_program(p);
            const Program again = parse_program(printed);
            const bool round_trip = again == p && print_program(again) == printed;

            RunConfig run;
            run.popsize = 50;
            run.moves = 1;
            run.repeats = 1;
            run.transforms = true;
            const auto trace = trace_run(p, make_landscape(name, 2), run);
            const bool moved = trace.records.size() == 100;
            if (!round_trip || !moved) o.pass = false;
            o.detail += name + (round_trip && moved ? " ok (" + std::to_string(p.size()) + " atoms) " : " FAILED ");
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail += name + " threw: " + e.what() + " ";
        }
    }
    return o;
}

// ---- 3: hand-traced Algorithm 1 run -------------------------------------------

Outcome criterion_3()
{
    // Program: look up the population best (its index is the integer on
    // top), add it to the member's own top vector and halve the result, so
    // every proposal is the midpoint of the member's current point and the
    // population best. Members start at (4, 2) and (-2, 6) on 2-D F1.
    const Program program = parse_program("(vector.best vector.+ 0.5 vector.scale)");
    const auto f1 = make_landscape("f1", 2);
    SwarmRun run;
    TraceSink trace;
    init_member(run, *f1, {4, 2}, 11, {}, &trace);
    init_member(run, *f1, {-2, 6}, 12, {}, &trace);
    std::vector<double> pbest;
    for (int m = 0; m < 3; ++m) {
        swarm_move(run, program, *f1, &trace);
        pbest.push_back(run.pbest);
    }

    // repeat, move, member, point, value, improved, in_bounds
    const TraceSink expected{
        {0, 0, 0, {4, 2}, 20, true, true},
        {0, 0, 1, {-2, 6}, 40, true, true},
        // move 1: best index 0 -> both members halve towards (4, 2)
        {0, 1, 0, {4, 2}, 20, false, true},
        {0, 1, 1, {1, 4}, 17, true, true},
        // member 1 now holds the best (17); member 0 was pushed its best
        // (4, 2) after failing to improve, so it adds (1, 4) to that
        {0, 2, 0, {2.5, 3}, 15.25, true, true},
        {0, 2, 1, {1.75, 3.5}, 15.3125, true, true},
        // member 0 holds the best again and re-proposes it (no improvement)
        {0, 3, 0, {2.5, 3}, 15.25, false, true},
        {0, 3, 1, {2.125, 3.25}, 15.078125, true, true},
    };
    const std::vector<double> expected_pbest{17, 15.25, 15.078125};
    Outcome o;
    o.pass = trace == expected && pbest == expected_pbest && run.evaluations == 8;
    std::size_t matching = 0;
    for (std::size_t k = 0; k < std::min(trace.size(), expected.size()); ++k) matching += trace[k] == expected[k];
    o.detail = std::to_string(matching) + "/" + std::to_string(expected.size()) + " records match; pbest " +
               fmt(pbest[0]) + ", " + fmt(pbest[1]) + ", " + fmt(pbest[2], 10) + "; FEs " +
               std::to_string(run.evaluations);
    return o;
}

// ---- 4: landscapes ----------------------------------------------------------

Outcome criterion_4()
{
    Rng rng = make_rng(4, {0});
    std::size_t points = 0, mismatches = 0, identity_failures = 0;
    double worst = 0.0;
    for (const auto& name : fixture_names) {
        for (std::size_t dim : {1, 2, 3, 10, 30}) {
            const auto l = make_landscape(name, dim);
            identity_failures += l->evaluate(l->optimum_location()) != 0.0 || l->optimum_value() != 0.0;
        }
        for (std::size_t k = 0; k < 100'000; ++k) {
            const std::size_t dim = std::array<std::size_t, 3>{2, 10, 30}[k % 3];
            static std::map<std::pair<std::string, std::size_t>, LandscapePtr> cache;
            auto& l = cache[{name, dim}];
            if (!l) l = make_landscape(name, dim);
            std::vector<double> x(dim);
            for (std::size_t d = 0; d < dim; ++d) x[d] = uniform_real(rng, l->lower()[d], l->upper()[d]);

            double ref = 0.0;
            if (name == "f1") ref = oracle::sphere(x);
            else if (name == "f9") ref = oracle::rastrigin(x);
            else if (name == "f13") ref = oracle::griewank_rosenbrock(x);
            else if (name == "f14") ref = oracle::expanded_schaffer(x);
            else {
                static std::map<std::size_t, SchwefelInstance> instances;
                auto found = instances.find(dim);
                if (found == instances.end())
                    found = instances.emplace(dim, SchwefelInstance::generate(dim, default_instance_seed)).first;
                ref = oracle::schwefel_213(x, found->second.a, found->second.b, found->second.alpha);
            }
            const double got = l->evaluate(x);
            const double rel = std::fabs(got - ref) / std::max(std::fabs(ref), std::numeric_limits<double>::min());
            worst = std::max(worst, rel);
            mismatches += !(rel <= 1e-10);
            ++points;
        }
    }
    // Analytic examples.
    const double f8_100 = 100.0 * 100.0 / 4000.0 - std::cos(100.0) + 1.0;
    const double f8_101 = 101.0 * 101.0 / 4000.0 - std::cos(101.0) + 1.0;
    const std::vector<double> x13{0, -1};
    identity_failures += std::fabs(make_landscape("f13", 2)->evaluate(x13) - (f8_100 + f8_101)) > 1e-12;
    identity_failures += make_landscape("f1", 2)->evaluate(std::vector<double>{3, 4}) != 25.0;
    identity_failures += std::fabs(make_landscape("f9", 2)->evaluate(std::vector<double>{1, 1}) - 2.0) > 1e-12;
    const auto hand = make_schwefel_2_13(SchwefelInstance::from_data(1, {2}, {3}, {0}));
    identity_failures += std::fabs(hand->evaluate(std::vector<double>{std::numbers::pi / 2}) - 1.0) > 1e-12;

    Outcome o;
    o.pass = mismatches == 0 && identity_failures == 0;
    o.detail = std::to_string(points) + " points; mismatches " + std::to_string(mismatches) + " (worst relative " +
               fmt(worst, 3) + "); optimum/analytic identity failures " + std::to_string(identity_failures);
    return o;
}

// ---- 5: transforms ------------------------------------------------------------

Outcome criterion_5()
{
    Rng rng = make_rng(5, {0});
    std::size_t checks = 0, value_mismatches = 0, optimum_failures = 0, translation_failures = 0;
    double worst_optimum = 0.0;
    for (const auto& name : fixture_names) {
        for (std::size_t k = 0; k < 1000; ++k) {
            const std::size_t dim = 1 + uniform_index(rng, 10);
            const auto base = make_landscape(name, dim);
            const TransformSpec spec = sample_transform(rng, *base);
            const TransformedLandscape t(base, spec);
            std::vector<double> x(dim), phi(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                x[d] = uniform_real(rng, base->lower()[d], base->upper()[d]);
                phi[d] = spec.flip[d] * (x[d] - spec.translation[d]) / spec.scale[d];
                const double half_range = 0.5 * (base->upper()[d] - base->lower()[d]);
                translation_failures += std::fabs(spec.translation[d]) > 0.5 * half_range;
            }
            const double got = t.evaluate(x);
            const double ref = base->evaluate(phi);
            value_mismatches += std::fabs(got - ref) > 1e-12 * std::max(1.0, std::fabs(ref));
            const double at_optimum = std::fabs(t.evaluate(t.optimum_location()));
            worst_optimum = std::max(worst_optimum, at_optimum);
            optimum_failures += at_optimum > 1e-9;
            ++checks;
        }
    }
    Outcome o;
    o.pass = value_mismatches == 0 && optimum_failures == 0 && translation_failures == 0;
    o.detail = std::to_string(checks) + " spec/point pairs; base-of-phi mismatches " +
               std::to_string(value_mismatches) + "; optimum failures " + std::to_string(optimum_failures) +
               " (worst " + fmt(worst_optimum, 3) + "); translations beyond half of half-range " +
               std::to_string(translation_failures);
    return o;
}

// ---- 6: desk-scale evolution --------------------------------------------------

EvolutionConfig desk_config(const std::string& landscape, std::uint64_t seed)
{
    EvolutionConfig c;
    c.population_size = 50;
    c.generations = 20;
    c.landscape = landscape;
    c.dimension = 2;
    c.swarm_size = 5;
    c.moves = 20;
    c.repeats = 5;
    c.transforms = true;
    c.seed = seed;
    return c;
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome criterion_6()
{
    const auto start = Clock::now();
    std::vector<double> evolved, baseline;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const EvolutionConfig c = desk_config("f9", seed);
        evolved.push_back(evolve(c).reevaluation.fitness);
        const RunConfig re = reevaluation_run_config(c);
        const auto l = make_landscape(c.landscape, c.dimension);
        baseline.push_back(oracle::empty_program_error(
            *l, [&](std::size_t r) { return derive_seed(re.seed, {r}); }, re.popsize, re.repeats));
    }
    const double elapsed = seconds_since(start);
    const double me = median(evolved), mb = median(baseline);
    Outcome o;
    o.pass = me * 10.0 <= mb && elapsed < 300.0;
    o.detail = "median reevaluated error " + fmt(me) + " vs empty-program baseline " + fmt(mb) + " (ratio " +
               fmt(me > 0 ? mb / me : INFINITY, 3) + ", need >= 10); " + fmt(elapsed, 3) + " s";
    return o;
}

// ---- 7: qualitative behaviour ---------------------------------------------------

struct Alignment {
    std::size_t in_bounds = 0, out_of_bounds = 0, aligned = 0;
};

// Counts proposals differing from the member's incumbent best in exactly
// one coordinate.
Alignment axis_alignment(const TraceSink& records)
{
    Alignment a;
    std::map<std::pair<std::size_t, std::size_t>, std::pair<SearchVector, double>> best;
    for (const auto& r : records) {
        const auto key = std::make_pair(r.repeat, r.member);
        if (r.move == 0) {
            best[key] = {r.point, r.value};
            continue;
        }
        if (!r.in_bounds) {
            ++a.out_of_bounds;
            continue;
        }
        ++a.in_bounds;
        auto& [point, value] = best[key];
        std::size_t differing = 0;
        for (std::size_t d = 0; d < point.size(); ++d) differing += r.point[d] != point[d];
        a.aligned += differing == 1;
        if (r.value < value) point = r.point, value = r.value;
    }
    return a;
}

struct Switching {
    std::size_t near = 0, far = 0, switches = 0, moves = 0;
};

// Classifies each proposal of a one-member run as a step near the incumbent
// best (within `radius`) or a distant sample, and counts class changes.
Switching best_vs_random(const TraceSink& records, double radius)
{
    Switching s;
    SearchVector best;
    double best_value = INFINITY;
    int last = -1;
    for (const auto& r : records) {
        if (r.move == 0) {
            best = r.point, best_value = r.value, last = -1;
            continue;
        }
        ++s.moves;
        double d2 = 0.0;
        for (std::size_t k = 0; k < best.size(); ++k) d2 += (r.point[k] - best[k]) * (r.point[k] - best[k]);
        const int cls = r.in_bounds && std::sqrt(d2) <= radius ? 0 : 1;
        (cls == 0 ? s.near : s.far) += 1;
        if (last >= 0 && cls != last) ++s.switches;
        last = cls;
        if (r.in_bounds && r.value < best_value) best = r.point, best_value = r.value;
    }
    return s;
}

Outcome criterion_7()
{
    RunConfig one;
    one.popsize = 1;
    one.moves = 1000;
    one.repeats = 5;
    one.transforms = false;

    // F13: cross-shaped trajectories. Checked on the single-member split and
    // on the default split.
    const Program f13 = parse_program(fixture_text("f13"));
    Alignment a13 = axis_alignment(trace_run(f13, make_landscape("f13", 2), one).records);
    RunConfig split = one;
    split.popsize = 50;
    split.moves = 20;
    const Alignment b13 = axis_alignment(trace_run(f13, make_landscape("f13", 2), split).records);
    a13.in_bounds += b13.in_bounds, a13.out_of_bounds += b13.out_of_bounds, a13.aligned += b13.aligned;
    const bool cross = a13.in_bounds > 0 && a13.aligned == a13.in_bounds;

    // F9: switching between steps around the best point and random samples.
    // Near steps change coordinates by at most |sin| <= 1 each, so lie
    // within sqrt(2) of the best.
    const Program f9 = parse_program(fixture_text("f9"));
    const Switching s9 = best_vs_random(trace_run(f9, make_landscape("f9", 2), one).records, std::sqrt(2.0) + 1e-9);
    const double near_frac = double(s9.near) / double(s9.moves);
    const double far_frac = double(s9.far) / double(s9.moves);
    const double switch_rate = double(s9.switches) / double(s9.moves);
    const bool alternates = near_frac >= 0.2 && far_frac >= 0.2 && switch_rate >= 0.3;

    Outcome o;
    o.pass = cross && alternates;
    o.detail = std::string("F13 axis-aligned ") + (cross ? "PASS" : "FAIL") + ": " + std::to_string(a13.aligned) + "/" +
               std::to_string(a13.in_bounds) + " in-bounds proposals differ from the incumbent best in one coordinate (" +
               std::to_string(a13.out_of_bounds) + " out of bounds); F9 alternation " + (alternates ? "PASS" : "FAIL") +
               ": near-best " + fmt(near_frac, 3) + ", random " + fmt(far_frac, 3) + ", switch rate " +
               fmt(switch_rate, 3);
    return o;
}

// ---- 8: budget accounting ---------------------------------------------------------

Outcome criterion_8()
{
    Rng rng = make_rng(8, {0});
    const GeneSet genes(default_instruction_set_names());
    const auto names = landscape_names();
    std::size_t repeats = 0, over_budget = 0, increases = 0, trace_mismatches = 0;
    for (int k = 0; k < 100; ++k) {
        const Program program = random_program(rng, 100, genes);
        const std::size_t popsize = 1 + uniform_index(rng, 20);
        const std::size_t moves = 1 + uniform_index(rng, 30);
        const std::size_t dim = 1 + uniform_index(rng, 10);
        const auto base = make_landscape(names[uniform_index(rng, names.size())], dim);
        for (int r = 0; r < 2; ++r) {
            LandscapePtr l = base;
            if (coin(rng)) l = std::make_shared<TransformedLandscape>(base, sample_transform(rng, *base));
            SwarmRun run;
            TraceSink trace;
            for (std::size_t p = 0; p < popsize; ++p) init_member(run, *l, rng, {}, &trace);
            double previous = run.pbest;
            for (std::size_t m = 0; m < moves; ++m) {
                swarm_move(run, program, *l, &trace);
                increases += run.pbest > previous;
                previous = run.pbest;
            }
            over_budget += run.evaluations > popsize * (moves + 1);
            const auto evaluated = std::count_if(trace.begin(), trace.end(), [](const auto& t) { return t.in_bounds; });
            trace_mismatches += static_cast<std::size_t>(evaluated) != run.evaluations;
            ++repeats;
        }
    }
    Outcome o;
    o.pass = over_budget == 0 && increases == 0 && trace_mismatches == 0;
    o.detail = std::to_string(repeats) + " repeats of 100 random programs; over budget " + std::to_string(over_budget) +
               ", pbest increases " + std::to_string(increases) + ", FE/trace disagreements " +
               std::to_string(trace_mismatches);
    return o;
}

// ---- 9: reproducibility ---------------------------------------------------------

Outcome criterion_9()
{
    EvolutionConfig c = desk_config("f9", 99);
    c.generations = 10;
    auto run = [&](std::size_t jobs) {
        std::string log;
        const auto result = evolve(c, jobs, [&](const GenerationRecord& r) { log += to_json_line(r) + "\n"; });
        return std::make_pair(log, report_to_json(result.reevaluation, {c.landscape, c.dimension,
                                                                         print_program(result.best),
                                                                         reevaluation_run_config(c)}));
    };
    const auto serial = run(1);
    const auto parallel = run(4);
    Outcome o;
    o.pass = serial == parallel && !serial.first.empty();
    o.detail = std::string("generation logs at jobs 1 and 4 ") + (serial.first == parallel.first ? "identical" : "DIFFER") +
               " (" + std::to_string(serial.first.size()) + " bytes); reevaluation reports " +
               (serial.second == parallel.second ? "identical" : "DIFFER");
    return o;
}

// ---- 10: throughput ----------------------------------------------------------------

Outcome criterion_10()
{
    const auto workload = throughput_workload(64, 1);
    const ThroughputResult r = measure_throughput(workload, 10, 20'000'000, 1);

    // Extrapolate a 200 x 50 training run (10 repeats of 50 x 20 on 10-D F1)
    // from a few random genomes.
    const GeneSet genes(default_instruction_set_names());
    Rng rng = make_rng(10, {0});
    RunConfig run;
    run.popsize = 50;
    run.moves = 20;
    run.repeats = 10;
    const auto f1 = make_landscape("f1", 10);
    const auto start = Clock::now();
    const int sample = 20;
    for (int k = 0; k < sample; ++k) evaluate_optimiser(random_program(rng, 100, genes), f1, run);
    const double per_individual = seconds_since(start) / sample;

    Outcome o;
    o.pass = r.steps_per_second() >= 1e7;
    o.detail = fmt(r.steps_per_second(), 4) + " steps/s over " + std::to_string(r.steps) +
               " steps (need >= 1e7); estimated 200x50 training run at D=10: " +
               fmt(per_individual * 200 * 50 / 60.0, 3) + " min single-threaded";
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
    {"interpreter conformance fuzz", criterion_1},
    {"fixture round-trip and execution", criterion_2},
    {"hand-traced swarm run", criterion_3},
    {"landscape correctness", criterion_4},
    {"transform semantics", criterion_5},
    {"desk-scale evolution efficacy", criterion_6},
    {"qualitative trajectories", criterion_7},
    {"budget accounting", criterion_8},
    {"reproducibility across jobs", criterion_9},
    {"interpreter throughput", criterion_10},
};

} // namespace

int main(int argc, char** argv)
{
    std::set<std::size_t> selected, expected_failures;
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--expect-fail" && k + 1 < argc) expected_failures.insert(std::stoul(argv[++k]));
        else selected.insert(std::stoul(arg));
    }

    bool as_expected = true;
    for (std::size_t n = 1; n <= criteria.size(); ++n) {
        if (!selected.empty() && !selected.count(n)) continue;
        const auto& [title, run] = criteria[n - 1];
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << ": " << o.detail
                  << std::endl;
        const bool expect_fail = expected_failures.count(n) > 0;
        if (o.pass == expect_fail) {
            as_expected = false;
            if (expect_fail) std::cout << "criterion " << n << " passed but was listed as an expected failure\n";
        }
    }
    return as_expected ? EXIT_SUCCESS : EXIT_FAILURE;
}
