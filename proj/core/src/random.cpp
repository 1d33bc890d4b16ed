#include "pushopt/random.hpp"

#include <array>
#include <vector>

namespace pushopt {

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path)
{
    std::vector<std::uint32_t> words;
    words.reserve(2 * (path.size() + 1) + 1);
    auto append = [&](std::uint64_t v) {
        words.push_back(static_cast<std::uint32_t>(v));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    append(master);
    // Path length disambiguates {a} from {a, 0}.
    words.push_back(static_cast<std::uint32_t>(path.size()));
    for (auto v : path) append(v);

    std::seed_seq seq(words.begin(), words.end());
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

} // namespace pushopt
