#ifndef LCPS_GEOMETRY_HPP
#define LCPS_GEOMETRY_HPP

#include "lcps/core.hpp"
#include "lcps/match_index.hpp"

#include <cstdint>
#include <vector>

namespace lcps {

/*
 * A σ-match pair seen as a grid rectangle with lower corner (i, j) and
 * upper corner (k, l). Non-degenerate rectangles (i < k, j < l) contribute
 * σ at both ends of a palindrome and weigh 2. A degenerate rectangle pairs a
 * match with itself, stands for an odd-length centre and weighs 1.
 */
struct Rect {
    Symbol sigma = 0;
    Match lower;
    Match upper;
    int weight = 1;

    bool degenerate() const { return lower == upper; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Image of a rectangle as (i, j, -k, -l). `source` indexes the rectangle
/// list the point was derived from.
struct Point4 {
    std::int32_t a = 0;
    std::int32_t b = 0;
    std::int32_t c = 0;
    std::int32_t d = 0;
    int weight = 1;
    std::size_t source = 0;
};

inline constexpr std::uint64_t kDefaultMaxRects = 5'000'000;

/// Σσ Rσ², the quantity checked against the rectangle cap.
std::uint64_t rect_budget(const MatchSet& ms);

/// Exact number of rectangles enumerate_rectangles would emit.
std::uint64_t rect_count(const MatchSet& ms);

/// For each σ: every pair of σ-matches with i < k and j < l, then one
/// degenerate rectangle per σ-match. Throws CapacityExceeded when
/// rect_budget(ms) > max_rects.
std::vector<Rect> enumerate_rectangles(const MatchSet& ms, std::uint64_t max_rects = kDefaultMaxRects);

Point4 rect_to_point(const Rect& r, std::size_t source = 0);

std::vector<Point4> rects_to_points(const std::vector<Rect>& rects);

/// Strict containment of `inner` inside the open interior of `outer`.
bool is_nested(const Rect& inner, const Rect& outer);

/// p > q in all four coordinates.
bool is_chained(const Point4& p, const Point4& q);

/// Splits a witness into its σ-match pairs, outermost first, pairing
/// position t with u - t + 1. Throws InvalidWitness if r does not validate.
std::vector<Rect> decompose_cps(const CpsResult& r, const Seq& x, const Seq& y);

} // namespace lcps

#endif // LCPS_GEOMETRY_HPP
