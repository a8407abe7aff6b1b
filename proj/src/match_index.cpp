#include "lcps/match_index.hpp"

#include <string>

namespace lcps {

std::vector<Match> SigmaMatchSet::matches() const
{
    std::vector<Match> out;
    out.reserve(static_cast<std::size_t>(r_sigma()));
    for_each_match([&](Match m) { out.push_back(m); });
    return out;
}

std::map<Symbol, Occurrences> build_occurrence_lists(const Seq& x, const Seq& y)
{
    std::map<Symbol, Occurrences> occ;
    for (Pos i = 1; i <= x.len(); ++i)
        occ[x[i]].x_occ.push_back(i);
    for (Pos j = 1; j <= y.len(); ++j)
        occ[y[j]].y_occ.push_back(j);
    return occ;
}

std::uint64_t count_matches(const Seq& x, const Seq& y)
{
    std::array<std::uint64_t, 256> cx{}, cy{};
    for (Pos i = 1; i <= x.len(); ++i)
        ++cx[x[i]];
    for (Pos j = 1; j <= y.len(); ++j)
        ++cy[y[j]];
    std::uint64_t r = 0;
    for (std::size_t s = 0; s < 256; ++s)
        r += cx[s] * cy[s];
    return r;
}

MatchSet build_match_set(const Seq& x, const Seq& y, std::uint64_t max_matches)
{
    const std::uint64_t r = count_matches(x, y);
    if (r > max_matches)
        throw CapacityExceeded("match count " + std::to_string(r) + " exceeds cap " + std::to_string(max_matches));

    MatchSet ms;
    for (auto& [sigma, occ] : build_occurrence_lists(x, y)) {
        if (occ.x_occ.empty() || occ.y_occ.empty())
            continue;
        ms.per_sigma.emplace_back(sigma, std::move(occ));
        ms.r += ms.per_sigma.back().r_sigma();
    }
    return ms;
}

} // namespace lcps
