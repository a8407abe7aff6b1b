#include "lcps/geometry.hpp"

#include <limits>
#include <string>

namespace lcps {

namespace {

std::uint64_t pairs_of(std::uint64_t count)
{
    return count < 2 ? 0 : count * (count - 1) / 2;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

} // namespace

std::uint64_t rect_budget(const MatchSet& ms)
{
    std::uint64_t total = 0;
    for (const auto& s : ms.per_sigma) {
        const std::uint64_t r = s.r_sigma();
        const std::uint64_t sq = r > std::numeric_limits<std::uint32_t>::max() ? std::numeric_limits<std::uint64_t>::max() : r * r;
        total = saturating_add(total, sq);
    }
    return total;
}

std::uint64_t rect_count(const MatchSet& ms)
{
    std::uint64_t total = 0;
    for (const auto& s : ms.per_sigma)
        total += pairs_of(s.x_occ().size()) * pairs_of(s.y_occ().size()) + s.r_sigma();
    return total;
}

std::vector<Rect> enumerate_rectangles(const MatchSet& ms, std::uint64_t max_rects)
{
    const std::uint64_t budget = rect_budget(ms);
    if (budget > max_rects)
        throw CapacityExceeded("rectangle budget " + std::to_string(budget) + " exceeds cap " +
                               std::to_string(max_rects));

    std::vector<Rect> rects;
    rects.reserve(static_cast<std::size_t>(rect_count(ms)));
    for (const auto& s : ms.per_sigma) {
        const auto& xs = s.x_occ();
        const auto& ys = s.y_occ();
        // pairs sharing a row or column would reuse an input position
        for (std::size_t p = 0; p < xs.size(); ++p)
            for (std::size_t q = 0; q < ys.size(); ++q)
                for (std::size_t p2 = p + 1; p2 < xs.size(); ++p2)
                    for (std::size_t q2 = q + 1; q2 < ys.size(); ++q2)
                        rects.push_back(Rect{s.sigma(), Match{xs[p], ys[q]}, Match{xs[p2], ys[q2]}, 2});
        s.for_each_match([&](Match mt) { rects.push_back(Rect{s.sigma(), mt, mt, 1}); });
    }
    return rects;
}

Point4 rect_to_point(const Rect& r, std::size_t source)
{
    return Point4{r.lower.i, r.lower.j, -r.upper.i, -r.upper.j, r.weight, source};
}

std::vector<Point4> rects_to_points(const std::vector<Rect>& rects)
{
    std::vector<Point4> points;
    points.reserve(rects.size());
    for (std::size_t t = 0; t < rects.size(); ++t)
        points.push_back(rect_to_point(rects[t], t));
    return points;
}

bool is_nested(const Rect& inner, const Rect& outer)
{
    return inner.lower.i > outer.lower.i && inner.lower.j > outer.lower.j && inner.upper.i < outer.upper.i &&
           inner.upper.j < outer.upper.j;
}

bool is_chained(const Point4& p, const Point4& q)
{
    return p.a > q.a && p.b > q.b && p.c > q.c && p.d > q.d;
}

std::vector<Rect> decompose_cps(const CpsResult& r, const Seq& x, const Seq& y)
{
    if (!validate_witness(r, x, y))
        throw InvalidWitness("cannot decompose an invalid witness");

    const std::size_t u = r.length();
    std::vector<Rect> rects;
    for (std::size_t t = 0; t < (u + 1) / 2; ++t) {
        const std::size_t mirror = u - 1 - t;
        Rect rect;
        rect.sigma = static_cast<Symbol>(r.z[t]);
        rect.lower = Match{r.x_indices[t], r.y_indices[t]};
        rect.upper = Match{r.x_indices[mirror], r.y_indices[mirror]};
        rect.weight = t == mirror ? 1 : 2;
        rects.push_back(rect);
    }
    return rects;
}

} // namespace lcps
