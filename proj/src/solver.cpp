#include "lcps/solver.hpp"

#include "lcps/chain_solver.hpp"
#include "lcps/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>

namespace lcps {

std::string_view to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Dp: return "dp";
    case Algorithm::Geom: return "geom";
    case Algorithm::Oracle: return "oracle";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name)
{
    for (Algorithm a : {Algorithm::Auto, Algorithm::Dp, Algorithm::Geom, Algorithm::Oracle})
        if (to_string(a) == name)
            return a;
    return std::nullopt;
}

Algorithm choose_algorithm(const Seq& x, const Seq& y, const Limits& limits)
{
    const std::uint64_t cells = dp_cell_count(static_cast<std::uint64_t>(x.len()), static_cast<std::uint64_t>(y.len()));
    if (cells > limits.max_dp_cells)
        return Algorithm::Geom;
    // geometric cost ~ rects * log^3 max(n, m)
    const std::uint64_t rects = rect_count(build_match_set(x, y, std::numeric_limits<std::uint64_t>::max()));
    const auto depth = static_cast<std::uint64_t>(std::bit_width(static_cast<std::uint32_t>(std::max(x.len(), y.len()))));
    std::uint64_t work = rects;
    for (int t = 0; t < 3; ++t)
        work = work > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(depth, 1)
                   ? std::numeric_limits<std::uint64_t>::max()
                   : work * depth;
    return work > cells ? Algorithm::Dp : Algorithm::Geom;
}

namespace {

CpsResult run(const Seq& x, const Seq& y, Algorithm algo, const Limits& limits)
{
    switch (algo) {
    case Algorithm::Dp: return dp_lcps(x, y, limits.max_dp_cells);
    case Algorithm::Geom: return geometric_lcps(x, y, GeomLimits{limits.max_matches, limits.max_rects});
    case Algorithm::Oracle: return brute_force_lcps(x, y);
    case Algorithm::Auto: break;
    }
    throw std::invalid_argument("run() needs a concrete algorithm");
}

} // namespace

SolveOutcome solve(const Seq& x, const Seq& y, Algorithm algo, const Limits& limits)
{
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome out;
    out.matches = count_matches(x, y);

    if (algo == Algorithm::Auto) {
        const Algorithm first = choose_algorithm(x, y, limits);
        const Algorithm second = first == Algorithm::Dp ? Algorithm::Geom : Algorithm::Dp;
        try {
            out.result = run(x, y, first, limits);
            out.algorithm = first;
        } catch (const CapacityExceeded&) {
            out.result = run(x, y, second, limits);
            out.algorithm = second;
        }
    } else {
        out.result = run(x, y, algo, limits);
        out.algorithm = algo;
    }

    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace lcps
