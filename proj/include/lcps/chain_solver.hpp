#ifndef LCPS_CHAIN_SOLVER_HPP
#define LCPS_CHAIN_SOLVER_HPP

#include "lcps/core.hpp"
#include "lcps/dominance_index.hpp"
#include "lcps/geometry.hpp"
#include "lcps/match_index.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lcps {

/// Points in non-increasing d, grouped by equal d. Inside a group points are
/// ascending by (a, b, c).
struct PointGroups {
    std::vector<Point4> points;
    std::vector<std::size_t> starts; // group g is points[starts[g] .. starts[g + 1])

    std::size_t group_count() const { return starts.empty() ? 0 : starts.size() - 1; }
    std::span<const Point4> group(std::size_t g) const
    {
        return std::span<const Point4>(points).subspan(starts[g], starts[g + 1] - starts[g]);
    }
};

/// Stable LSD counting sort on c, b, a, then d descending. Linear in the
/// number of points plus the coordinate ranges.
PointGroups sort_points(std::vector<Point4> points);

struct ChainNode {
    Point4 point;
    std::int32_t value = 0; // best weighted chain starting here, inclusive
    std::optional<std::size_t> successor; // inner node this one chains to
};

struct Chain {
    std::vector<ChainNode> nodes; // sweep order
    std::optional<std::size_t> best;

    std::int32_t value() const { return best ? nodes[*best].value : 0; }

    /// Node indices from the best node inward along successor links.
    std::vector<std::size_t> walk() const;
};

/// Maximum-weight chain under is_chained. Groups of equal d run all queries
/// before any insertion so equal-d points never chain.
Chain longest_chain(std::vector<Point4> points);

struct GeomLimits {
    std::uint64_t max_matches = kDefaultMaxMatches;
    std::uint64_t max_rects = kDefaultMaxRects;
};

/// Matches → rectangles → 4-D points → longest chain → witness.
/// Throws CapacityExceeded from match or rectangle enumeration.
CpsResult geometric_lcps(const Seq& x, const Seq& y, const GeomLimits& limits = {});

} // namespace lcps

#endif // LCPS_CHAIN_SOLVER_HPP
