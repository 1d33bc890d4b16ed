#include "pushopt/landscape.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pushopt {

double sphere(std::span<const double> x)
{
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double rastrigin(std::span<const double> x)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double sum = 0.0;
    for (double v : x) sum += v * v - 10.0 * std::cos(two_pi * v) + 10.0;
    return sum;
}

namespace {

double rosenbrock_pair(double u, double v)
{
    const double a = u * u - v;
    const double b = u - 1.0;
    return 100.0 * a * a + b * b;
}

double griewank_1d(double w) { return w * w / 4000.0 - std::cos(w) + 1.0; }

} // namespace

// Optimum shifted to the origin: z = x + 1.
double griewank_rosenbrock(std::span<const double> x)
{
    const std::size_t d = x.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double zi = x[i] + 1.0;
        const double zn = x[(i + 1) % d] + 1.0;
        sum += griewank_1d(rosenbrock_pair(zi, zn));
    }
    return sum;
}

double schaffer_f6(double u, double v)
{
    const double r2 = u * u + v * v;
    const double s = std::sin(std::sqrt(r2));
    const double denom = 1.0 + 0.001 * r2;
    return 0.5 + (s * s - 0.5) / (denom * denom);
}

double expanded_schaffer_f6(std::span<const double> x)
{
    const std::size_t d = x.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) sum += schaffer_f6(x[i], x[(i + 1) % d]);
    return sum;
}

SchwefelInstance SchwefelInstance::from_data(std::size_t dim, std::vector<double> a, std::vector<double> b,
                                             std::vector<double> alpha)
{
    if (a.size() != dim * dim || b.size() != dim * dim || alpha.size() != dim)
        throw std::invalid_argument("schwefel instance data has the wrong shape");
    SchwefelInstance inst{dim, std::move(a), std::move(b), std::move(alpha), std::vector<double>(dim, 0.0)};
    for (std::size_t i = 0; i < dim; ++i) {
        double t = 0.0;
        for (std::size_t j = 0; j < dim; ++j)
            t += inst.a[i * dim + j] * std::sin(inst.alpha[j]) + inst.b[i * dim + j] * std::cos(inst.alpha[j]);
        inst.target[i] = t;
    }
    return inst;
}

SchwefelInstance SchwefelInstance::generate(std::size_t dim, std::uint64_t seed)
{
    Rng rng = make_rng(seed, {dim});
    std::vector<double> a(dim * dim), b(dim * dim), alpha(dim);
    for (double& v : a) v = static_cast<double>(uniform_int(rng, -100, 100));
    for (double& v : b) v = static_cast<double>(uniform_int(rng, -100, 100));
    for (double& v : alpha) v = uniform_real(rng, -std::numbers::pi, std::numbers::pi);
    return from_data(dim, std::move(a), std::move(b), std::move(alpha));
}

double schwefel_2_13(std::span<const double> x, const SchwefelInstance& inst)
{
    const std::size_t d = inst.dim;
    if (x.size() != d) throw std::invalid_argument("dimension mismatch");
    thread_local std::vector<double> sines, cosines;
    sines.resize(d);
    cosines.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        sines[j] = std::sin(x[j]);
        cosines[j] = std::cos(x[j]);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double bi = 0.0;
        const double* ar = inst.a.data() + i * d;
        const double* br = inst.b.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) bi += ar[j] * sines[j] + br[j] * cosines[j];
        const double diff = inst.target[i] - bi;
        sum += diff * diff;
    }
    return sum;
}

// ---------------------------------------------------------------------------

Landscape::Landscape(std::vector<double> lower, std::vector<double> upper, std::vector<double> optimum,
                     double optimum_value)
    : lower_(std::move(lower)), upper_(std::move(upper)), optimum_(std::move(optimum)), optimum_value_(optimum_value)
{
    if (lower_.empty()) throw std::invalid_argument("landscape dimension must be at least 1");
    if (upper_.size() != lower_.size() || optimum_.size() != lower_.size())
        throw std::invalid_argument("landscape bounds have inconsistent dimensions");
}

double Landscape::evaluate(std::span<const double> x) const
{
    if (x.size() != dimension())
        throw std::invalid_argument("dimension mismatch: expected " + std::to_string(dimension()) + ", got " +
                                    std::to_string(x.size()));
    return value(x);
}

bool Landscape::in_bounds(std::span<const double> x) const
{
    if (x.size() != dimension()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
    }
    return true;
}

namespace {

using Objective = double (*)(std::span<const double>);

class FunctionLandscape final : public Landscape {
public:
    FunctionLandscape(std::string name, std::size_t dim, double lo, double hi, Objective f)
        : Landscape(std::vector<double>(dim, lo), std::vector<double>(dim, hi), std::vector<double>(dim, 0.0), 0.0),
          name_(std::move(name)), f_(f)
    {
    }
    std::string_view name() const override { return name_; }

protected:
    double value(std::span<const double> x) const override { return f_(x); }

private:
    std::string name_;
    Objective f_;
};

class SchwefelLandscape final : public Landscape {
public:
    explicit SchwefelLandscape(SchwefelInstance inst)
        : Landscape(std::vector<double>(inst.dim, -std::numbers::pi), std::vector<double>(inst.dim, std::numbers::pi),
                    inst.alpha, 0.0),
          inst_(std::move(inst))
    {
    }
    std::string_view name() const override { return "f12"; }

protected:
    double value(std::span<const double> x) const override { return schwefel_2_13(x, inst_); }

private:
    SchwefelInstance inst_;
};

} // namespace

std::vector<std::string> landscape_names() { return {"f1", "f9", "f12", "f13", "f14"}; }

LandscapePtr make_schwefel_2_13(SchwefelInstance instance)
{
    return std::make_shared<SchwefelLandscape>(std::move(instance));
}

LandscapePtr make_landscape(std::string_view name, std::size_t dim, std::uint64_t instance_seed)
{
    if (dim == 0) throw std::invalid_argument("landscape dimension must be at least 1");
    if (name == "f1") return std::make_shared<FunctionLandscape>("f1", dim, -100.0, 100.0, sphere);
    if (name == "f9") return std::make_shared<FunctionLandscape>("f9", dim, -5.0, 5.0, rastrigin);
    if (name == "f12") return make_schwefel_2_13(SchwefelInstance::generate(dim, instance_seed));
    if (name == "f13") return std::make_shared<FunctionLandscape>("f13", dim, -3.0, 1.0, griewank_rosenbrock);
    if (name == "f14") return std::make_shared<FunctionLandscape>("f14", dim, -100.0, 100.0, expanded_schaffer_f6);

    std::string valid;
    for (const auto& n : landscape_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown landscape '" + std::string(name) + "' (valid: " + valid + ")");
}

// ---------------------------------------------------------------------------

TransformSpec TransformSpec::identity(std::size_t dim)
{
    return {std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0), std::vector<double>(dim, 1.0)};
}

TransformSpec sample_transform(Rng& rng, const Landscape& landscape)
{
    const std::size_t d = landscape.dimension();
    TransformSpec spec;
    spec.translation.resize(d);
    spec.scale.resize(d);
    spec.flip.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double quarter_range = 0.25 * (landscape.upper()[i] - landscape.lower()[i]);
        spec.translation[i] = uniform_real(rng, -quarter_range, quarter_range);
        spec.scale[i] = uniform_real(rng, 0.5, 2.0);
        spec.flip[i] = coin(rng) ? 1.0 : -1.0;
    }
    return spec;
}

namespace {

std::vector<double> transformed_optimum(const Landscape& base, const TransformSpec& spec)
{
    if (spec.dimension() != base.dimension() || spec.scale.size() != base.dimension() ||
        spec.flip.size() != base.dimension())
        throw std::invalid_argument("transform dimension does not match landscape");
    std::vector<double> x(base.dimension());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = spec.translation[i] + spec.flip[i] * spec.scale[i] * base.optimum_location()[i];
    return x;
}

} // namespace

TransformedLandscape::TransformedLandscape(LandscapePtr base, TransformSpec spec)
    : Landscape({base->lower().begin(), base->lower().end()}, {base->upper().begin(), base->upper().end()},
                transformed_optimum(*base, spec), base->optimum_value()),
      base_(std::move(base)), spec_(std::move(spec))
{
}

void TransformedLandscape::to_base(std::span<const double> x, std::span<double> out) const
{
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = spec_.flip[i] * (x[i] - spec_.translation[i]) / spec_.scale[i];
}

double TransformedLandscape::value(std::span<const double> x) const
{
    constexpr std::size_t inline_dims = 64;
    if (x.size() <= inline_dims) {
        std::array<double, inline_dims> buf;
        std::span<double> phi(buf.data(), x.size());
        to_base(x, phi);
        return base_->evaluate(phi);
    }
    std::vector<double> phi(x.size());
    to_base(x, phi);
    return base_->evaluate(phi);
}

} // namespace pushopt
