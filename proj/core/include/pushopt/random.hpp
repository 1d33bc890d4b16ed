#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pushopt {

using Rng = std::mt19937_64;

/// Derives an independent 64-bit seed from a master seed and a path of
/// stream identifiers (individual id, repeat id, ...). The mapping depends
/// only on its arguments, so streams do not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

inline Rng make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> path)
{
    return Rng(derive_seed(master, path));
}

inline double uniform_real(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

inline double gaussian(Rng& rng, double mean, double sigma)
{
    return std::normal_distribution<double>(mean, sigma)(rng);
}

} // namespace pushopt
