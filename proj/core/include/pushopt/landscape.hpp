#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pushopt/random.hpp"
#include "pushopt/swarm.hpp"

namespace pushopt {

// Canonical CEC 2005 function forms without bias terms: every landscape has
// optimum value 0, so an objective value is directly the error.

double sphere(std::span<const double> x);
double rastrigin(std::span<const double> x);
double griewank_rosenbrock(std::span<const double> x);
double schaffer_f6(double u, double v);
double expanded_schaffer_f6(std::span<const double> x);

/// Instance data of Schwefel's problem 2.13: integer matrices a, b in
/// [-100, 100] (row-major, D x D) and the optimum alpha in [-pi, pi]^D.
struct SchwefelInstance {
    std::size_t dim = 0;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> alpha;
    std::vector<double> target; // A_i, precomputed from alpha

    static SchwefelInstance generate(std::size_t dim, std::uint64_t seed);
    static SchwefelInstance from_data(std::size_t dim, std::vector<double> a, std::vector<double> b,
                                      std::vector<double> alpha);
};

double schwefel_2_13(std::span<const double> x, const SchwefelInstance& instance);

/// An objective function over a box-bounded search space.
class Landscape {
public:
    virtual ~Landscape() = default;

    virtual std::string_view name() const = 0;

    std::size_t dimension() const { return lower_.size(); }
    std::span<const double> lower() const { return lower_; }
    std::span<const double> upper() const { return upper_; }
    std::span<const double> optimum_location() const { return optimum_; }
    double optimum_value() const { return optimum_value_; }

    /// Throws std::invalid_argument on a dimension mismatch.
    double evaluate(std::span<const double> x) const;
    /// evaluate(x) - optimum_value()
    double error(std::span<const double> x) const { return evaluate(x) - optimum_value_; }
    bool in_bounds(std::span<const double> x) const;

protected:
    Landscape(std::vector<double> lower, std::vector<double> upper, std::vector<double> optimum, double optimum_value);
    virtual double value(std::span<const double> x) const = 0;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<double> optimum_;
    double optimum_value_;
};

using LandscapePtr = std::shared_ptr<const Landscape>;

inline constexpr std::uint64_t default_instance_seed = 2005;

/// Registry lookup by name: "f1", "f9", "f12", "f13", "f14". The instance
/// seed only affects f12. Throws std::invalid_argument listing valid names.
LandscapePtr make_landscape(std::string_view name, std::size_t dim,
                            std::uint64_t instance_seed = default_instance_seed);
std::vector<std::string> landscape_names();

LandscapePtr make_schwefel_2_13(SchwefelInstance instance);

/// Per-axis translate / scale / flip applied to a landscape.
struct TransformSpec {
    std::vector<double> translation;
    std::vector<double> scale;
    std::vector<double> flip; // each +1 or -1

    static TransformSpec identity(std::size_t dim);
    std::size_t dimension() const { return translation.size(); }
};

/// t_i uniform in +-25% of the axis range (+-50% of the half-range),
/// s_i uniform in [0.5, 2], flip_i = +-1 with equal probability.
TransformSpec sample_transform(Rng& rng, const Landscape& landscape);

/// evaluate(x) = base.evaluate(phi(x)), phi(x)_i = flip_i * (x_i - t_i) / s_i.
/// Same bounds and dimension as the base landscape.
class TransformedLandscape final : public Landscape {
public:
    TransformedLandscape(LandscapePtr base, TransformSpec spec);

    std::string_view name() const override { return base_->name(); }
    const Landscape& base() const { return *base_; }
    const TransformSpec& spec() const { return spec_; }

    void to_base(std::span<const double> x, std::span<double> out) const;

protected:
    double value(std::span<const double> x) const override;

private:
    LandscapePtr base_;
    TransformSpec spec_;
};

} // namespace pushopt
