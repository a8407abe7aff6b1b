#ifndef LCPS_SOLVER_HPP
#define LCPS_SOLVER_HPP

#include "lcps/core.hpp"
#include "lcps/dp_solver.hpp"
#include "lcps/geometry.hpp"
#include "lcps/match_index.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace lcps {

enum class Algorithm { Auto, Dp, Geom, Oracle };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct Limits {
    std::uint64_t max_dp_cells = kDefaultMaxDpCells;
    std::uint64_t max_rects = kDefaultMaxRects;
    std::uint64_t max_matches = kDefaultMaxMatches;
};

struct SolveOutcome {
    CpsResult result;
    Algorithm algorithm = Algorithm::Dp; // the one that produced result, never Auto
    std::uint64_t matches = 0;
    double elapsed_ms = 0.0;
};

/// Concrete algorithm Auto would try first: DP when its table fits under the
/// cap and the rectangle count times log^3 max(n, m) exceeds the table size,
/// the geometric solver otherwise.
Algorithm choose_algorithm(const Seq& x, const Seq& y, const Limits& limits);

/// Runs one algorithm. Auto falls back to the other solver on
/// CapacityExceeded and rethrows only if both are out of capacity.
SolveOutcome solve(const Seq& x, const Seq& y, Algorithm algo, const Limits& limits = {});

} // namespace lcps

#endif // LCPS_SOLVER_HPP
