#ifndef LCPS_MATCH_INDEX_HPP
#define LCPS_MATCH_INDEX_HPP

#include "lcps/core.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace lcps {

struct Match {
    Pos i = 0; // position in X
    Pos j = 0; // position in Y

    friend auto operator<=>(const Match&, const Match&) = default;
};

/// Sorted occurrence positions of one symbol in X and in Y.
struct Occurrences {
    std::vector<Pos> x_occ;
    std::vector<Pos> y_occ;

    friend bool operator==(const Occurrences&, const Occurrences&) = default;
};

/// Matches on a single symbol. The match list itself is the product
/// x_occ × y_occ and is only materialized on request.
class SigmaMatchSet {
public:
    SigmaMatchSet(Symbol sigma, Occurrences occ) : sigma_(sigma), occ_(std::move(occ)) {}

    Symbol sigma() const { return sigma_; }
    const std::vector<Pos>& x_occ() const { return occ_.x_occ; }
    const std::vector<Pos>& y_occ() const { return occ_.y_occ; }
    std::uint64_t r_sigma() const { return static_cast<std::uint64_t>(occ_.x_occ.size()) * occ_.y_occ.size(); }

    /// Row-major over (x_occ, y_occ), i.e. sorted by (i, j).
    template <typename F>
    void for_each_match(F&& f) const
    {
        for (Pos i : occ_.x_occ)
            for (Pos j : occ_.y_occ)
                f(Match{i, j});
    }

    std::vector<Match> matches() const;

private:
    Symbol sigma_;
    Occurrences occ_;
};

/// M partitioned by symbol. Only symbols present in both inputs appear.
struct MatchSet {
    std::vector<SigmaMatchSet> per_sigma; // ascending by symbol
    std::uint64_t r = 0;
};

inline constexpr std::uint64_t kDefaultMaxMatches = 10'000'000;

/// Sorted occurrence lists for every symbol appearing in either input.
std::map<Symbol, Occurrences> build_occurrence_lists(const Seq& x, const Seq& y);

/// R = Σσ |Xσ|·|Yσ|, without materializing anything.
std::uint64_t count_matches(const Seq& x, const Seq& y);

/// Throws CapacityExceeded when R exceeds max_matches.
MatchSet build_match_set(const Seq& x, const Seq& y, std::uint64_t max_matches = kDefaultMaxMatches);

} // namespace lcps

#endif // LCPS_MATCH_INDEX_HPP
