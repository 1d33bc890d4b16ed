#include <doctest.h>

#include <cmath>

#include "pushopt/interpreter.hpp"
#include "support.hpp"

using namespace pushopt;
using testing::fresh;
using testing::run;

namespace {

using Vecs = std::vector<std::vector<double>>;

InterpreterState with_vectors(const Vecs& vs, std::uint64_t seed = 1)
{
    InterpreterState s(vs.front().size(), seed);
    for (const auto& v : vs) s.vectors.push(v);
    return s;
}

struct Swarm {
    std::vector<SearchVector> current;
    std::vector<SearchVector> best;
    SwarmView view(std::size_t self) const { return {current, best, self}; }
};

Swarm five_members()
{
    Swarm s;
    for (int i = 0; i < 5; ++i) {
        s.current.push_back({static_cast<double>(i), 10.0 + i});
        s.best.push_back({-static_cast<double>(i), -10.0 - i});
    }
    return s;
}

double norm(std::span<const double> v)
{
    double sum = 0.0;
    for (double c : v) sum += c * c;
    return std::sqrt(sum);
}

} // namespace

TEST_SUITE("vecswarm")
{
    TEST_CASE("componentwise arithmetic")
    {
        auto s = with_vectors({{1, 2}, {3, 4}});
        run(s, "(vector.+)");
        CHECK(s.vectors.to_vector() == Vecs{{4, 6}});

        auto t = with_vectors({{1, 2}, {3, 4}});
        run(t, "(vector.-)");
        CHECK(t.vectors.to_vector() == Vecs{{-2, -2}});

        auto u = with_vectors({{1, 2}, {3, 4}});
        run(u, "(vector.*)");
        CHECK(u.vectors.to_vector() == Vecs{{3, 8}});

        auto v = with_vectors({{3, 8}, {3, 4}});
        run(v, "(vector./)");
        CHECK(v.vectors.to_vector() == Vecs{{1, 2}});

        auto w = with_vectors({{3, 8}, {3, 0}});
        run(w, "(vector./)");
        CHECK(w.vectors.to_vector() == Vecs{{3, 8}, {3, 0}});

        auto x = with_vectors({{1e300, 1}, {1e300, 1}});
        run(x, "(vector.*)");
        CHECK(x.vectors.size() == 2);
    }

    TEST_CASE("between interpolates with t clamped")
    {
        auto s = with_vectors({{1, -2}, {1, -2}});
        run(s, "(0.7 vector.between)");
        CHECK(s.vectors.to_vector() == Vecs{{1, -2}});

        auto t = with_vectors({{0, 0}, {10, 20}});
        run(t, "(0.25 vector.between)");
        CHECK(t.vectors.to_vector() == Vecs{{2.5, 5}});

        auto u = with_vectors({{0, 0}, {10, 20}});
        run(u, "(7.0 vector.between)");
        CHECK(u.vectors.to_vector() == Vecs{{10, 20}});

        auto v = with_vectors({{0, 0}, {10, 20}});
        run(v, "(-7.0 vector.between)");
        CHECK(v.vectors.to_vector() == Vecs{{0, 0}});
    }

    TEST_CASE("mag, dprod, scale")
    {
        auto s = with_vectors({{3, 4}});
        run(s, "(vector.mag)");
        CHECK(s.floats.to_vector() == std::vector<double>{5.0});
        CHECK(s.vectors.empty());

        auto t = with_vectors({{1, 2}, {3, 4}});
        run(t, "(vector.dprod)");
        CHECK(t.floats.to_vector() == std::vector<double>{11.0});

        auto u = with_vectors({{1, -2}});
        run(u, "(-1.5 vector.scale)");
        CHECK(u.vectors.to_vector() == Vecs{{-1.5, 3}});

        auto v = with_vectors({{1e200, 1e200}});
        run(v, "(vector.mag)");
        REQUIRE(v.floats.size() == 1);
        CHECK(v.floats.top() == doctest::Approx(std::sqrt(2.0) * 1e200));
    }

    TEST_CASE("dim+ and dim* use |i| mod D")
    {
        auto s = with_vectors({{0, 0, 0}});
        run(s, "(2.5 4 vector.dim+)");
        CHECK(s.vectors.to_vector() == Vecs{{0, 2.5, 0}});

        auto t = with_vectors({{1, 2, 3}});
        run(t, "(10.0 -2 vector.dim*)");
        CHECK(t.vectors.to_vector() == Vecs{{1, 2, 30}});
        CHECK(t.floats.empty());
        CHECK(t.integers.empty());

        auto u = with_vectors({{1, 2, 3}});
        run(u, "(10.0 vector.dim*)");
        CHECK(u.vectors.to_vector() == Vecs{{1, 2, 3}});
        CHECK(u.floats.size() == 1);
    }

    TEST_CASE("apply maps each component through the body")
    {
        auto s = with_vectors({{1, -2, 3}});
        run(s, "(vector.apply (2.0 float.*))");
        CHECK(s.vectors.to_vector() == Vecs{{2, -4, 6}});
        CHECK(s.floats.empty());

        auto t = with_vectors({{1, -2, 3}});
        run(t, "(vector.apply (float.pop))");
        CHECK(t.vectors.to_vector() == Vecs{{1, -2, 3}});

        auto u = with_vectors({{1, -2, 3}});
        u.floats.push(42.0);
        run(u, "(vector.apply float.abs)");
        CHECK(u.vectors.to_vector() == Vecs{{1, 2, 3}});
        CHECK(u.floats.to_vector() == std::vector<double>{42.0});
    }

    TEST_CASE("apply is charged against the move budget")
    {
        ExecutionLimits limits;
        limits.max_executions_per_move = 10;
        InterpreterState s(4, 1, limits);
        s.vectors.push(std::vector<double>{1, 1, 1, 1});
        run(s, "(vector.apply (2.0 float.*))");
        CHECK(s.executions == 10);
        // apply costs 1 and each component 3 (block, literal, multiply),
        // so the budget runs out before the last component
        const auto v = s.vectors.to_vector();
        REQUIRE(v.size() == 1);
        CHECK(v[0] == std::vector<double>{2, 2, 2, 1});
    }

    TEST_CASE("zip pairs components; a no-op body keeps a")
    {
        auto s = with_vectors({{1, 2}, {10, 20}});
        run(s, "(vector.zip exec.noop)");
        CHECK(s.vectors.to_vector() == Vecs{{1, 2}});

        auto t = with_vectors({{1, 2}, {10, 20}});
        run(t, "(vector.zip float.+)");
        CHECK(t.vectors.to_vector() == Vecs{{11, 22}});

        auto u = with_vectors({{1, 2}, {10, 20}});
        run(u, "(vector.zip float.-)");
        CHECK(u.vectors.to_vector() == Vecs{{9, 18}});
    }

    TEST_CASE("rand reads the bounds from the input stack")
    {
        auto s = fresh(3, 4);
        s.inputs = {-3.0, 1.0};
        for (int i = 0; i < 100; ++i) run(s, "(vector.rand)");
        for (const auto& v : s.vectors.to_vector())
            for (double c : v) CHECK((c >= -3.0 && c <= 1.0));

        auto t = fresh(3, 4);
        for (int i = 0; i < 100; ++i) run(t, "(vector.rand)");
        for (const auto& v : t.vectors.to_vector())
            for (double c : v) CHECK((c >= -1.0 && c <= 1.0));
    }

    TEST_CASE("urand is a unit vector and wrand is bounded by |w|")
    {
        auto s = fresh(5, 8);
        for (int i = 0; i < 200; ++i) run(s, "(vector.urand -0.3 vector.wrand)");
        const auto vs = s.vectors.to_vector();
        for (std::size_t i = 0; i < vs.size(); i += 2) {
            CHECK(std::fabs(norm(vs[i]) - 1.0) < 1e-9);
            for (double c : vs[i + 1]) CHECK(std::fabs(c) <= 0.3);
        }
        auto t = fresh(2, 8);
        run(t, "(vector.wrand)");
        CHECK(t.vectors.empty());
    }

    TEST_CASE("current and best look up members")
    {
        const Swarm sw = five_members();
        auto s = fresh();
        run(s, "(7 vector.current)", sw.view(0));
        CHECK(s.vectors.to_vector() == Vecs{{2, 12}});

        auto t = fresh();
        run(t, "(vector.best)", sw.view(3));
        CHECK(t.vectors.to_vector() == Vecs{{-3, -13}});

        auto u = fresh();
        run(u, "(-1 vector.current)", sw.view(4));
        CHECK(u.vectors.to_vector() == Vecs{{4, 14}});
        CHECK(u.integers.empty());

        auto v = fresh();
        run(v, "(vector.best)");
        CHECK(v.vectors.empty());
    }

    TEST_CASE("swarm_view_lookup")
    {
        const Swarm sw = five_members();
        CHECK(swarm_view_lookup(sw.view(0), PointKind::current, 7) == SearchVector{2, 12});
        CHECK(swarm_view_lookup(sw.view(3), PointKind::best, -1) == SearchVector{-3, -13});

        Swarm one;
        one.current = {{1, 1}};
        one.best = {{0, 0}};
        for (std::int64_t i : {-5, 0, 1, 2, 99}) CHECK(swarm_view_lookup(one.view(0), PointKind::current, i) == SearchVector{1, 1});

        CHECK_THROWS(swarm_view_lookup(SwarmView{}, PointKind::best, 0));
    }

    TEST_CASE("properties over random vectors")
    {
        Rng rng = make_rng(21, {0});
        for (int trial = 0; trial < 2000; ++trial) {
            const std::size_t d = 1 + uniform_index(rng, 6);
            std::vector<double> a(d), b(d);
            for (auto& c : a) c = uniform_real(rng, -50, 50);
            for (auto& c : b) c = uniform_real(rng, -50, 50);
            const double k = uniform_real(rng, -10, 10);

            auto m1 = with_vectors({a});
            run(m1, "(vector.mag)");
            auto m2 = with_vectors({a});
            m2.floats.push(k);
            run(m2, "(vector.scale vector.mag)");
            CHECK(m2.floats.top() == doctest::Approx(std::fabs(k) * m1.floats.top()).epsilon(1e-12));

            auto d1 = with_vectors({a, b});
            run(d1, "(vector.dprod)");
            auto d2 = with_vectors({b, a});
            run(d2, "(vector.dprod)");
            CHECK(d1.floats.top() == d2.floats.top());

            auto b0 = with_vectors({a, b});
            run(b0, "(0.0 vector.between)");
            CHECK(b0.vectors.to_vector() == Vecs{a});
            auto b1 = with_vectors({a, b});
            run(b1, "(1.0 vector.between)");
            CHECK(b1.vectors.to_vector() == Vecs{b});

            auto z = with_vectors({a, b});
            run(z, "(vector.zip (exec.noop))");
            CHECK(z.vectors.to_vector() == Vecs{a});
        }
    }

    TEST_CASE("current and best never change the vector dimension")
    {
        Swarm sw;
        Rng rng = make_rng(5, {0});
        for (int i = 0; i < 7; ++i) {
            sw.current.push_back({uniform_real(rng, -1, 1), uniform_real(rng, -1, 1), uniform_real(rng, -1, 1)});
            sw.best.push_back(sw.current.back());
        }
        auto s = fresh(3, 2);
        for (int i = 0; i < 50; ++i) run(s, "(integer.rand vector.current integer.rand vector.best)", sw.view(i % 7));
        CHECK(s.vectors.size() == 100);
        for (const auto& v : s.vectors.to_vector()) CHECK(v.size() == 3);
    }
}
