#include "lcps/oracle.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace lcps {

namespace {

std::optional<std::vector<Pos>> greedy_embedding(const std::string& z, const Seq& y)
{
    std::vector<Pos> at;
    at.reserve(z.size());
    Pos p = 1;
    for (char ch : z) {
        while (p <= y.len() && y[p] != static_cast<Symbol>(ch))
            ++p;
        if (p > y.len())
            return std::nullopt;
        at.push_back(p++);
    }
    return at;
}

// next larger integer with the same popcount
std::uint32_t next_combination(std::uint32_t v)
{
    const std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

} // namespace

CpsResult brute_force_lcps(const Seq& x, const Seq& y)
{
    const Pos n = x.len();
    if (n > kOracleMaxLength)
        throw InputTooLarge("oracle accepts |x| <= " + std::to_string(kOracleMaxLength) + ", got " +
                            std::to_string(n));

    const std::uint32_t limit = std::uint32_t{1} << n;
    std::string z;
    for (Pos size = std::min(n, y.len()); size >= 1; --size) {
        for (std::uint32_t mask = (std::uint32_t{1} << size) - 1; mask < limit; mask = next_combination(mask)) {
            z.clear();
            for (Pos b = 0; b < n; ++b)
                if (mask & (std::uint32_t{1} << b))
                    z.push_back(static_cast<char>(x[b + 1]));
            if (!is_palindrome(z))
                continue;
            auto in_y = greedy_embedding(z, y);
            if (!in_y)
                continue;
            CpsResult r;
            r.z = z;
            for (Pos b = 0; b < n; ++b)
                if (mask & (std::uint32_t{1} << b))
                    r.x_indices.push_back(b + 1);
            r.y_indices = std::move(*in_y);
            return r;
        }
    }
    return {};
}

} // namespace lcps
