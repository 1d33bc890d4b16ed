#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pushopt {

/// A search point: D finite components in problem-space units.
using SearchVector = std::vector<double>;

enum class PointKind : std::uint8_t { current, best };

/// Read-only view of the population's search state, handed to each member's
/// program while it executes a move. Members are updated in index order, so
/// entries before `self` already reflect this move.
struct SwarmView {
    std::span<const SearchVector> current;
    std::span<const SearchVector> best;
    std::size_t self = 0;

    std::size_t popsize() const { return current.size(); }
    bool empty() const { return current.empty(); }

    /// Member addressed by `index`: itself when the index is negative,
    /// otherwise index mod popsize. Requires a non-empty view.
    std::size_t resolve(std::int64_t index) const
    {
        if (index < 0) return self;
        return static_cast<std::size_t>(index) % popsize();
    }

    std::span<const double> point(PointKind which, std::size_t member) const
    {
        return which == PointKind::current ? current[member] : best[member];
    }
};

/// Copy of the current or best point of the addressed member.
SearchVector swarm_view_lookup(const SwarmView& view, PointKind which, std::int64_t index);

} // namespace pushopt
