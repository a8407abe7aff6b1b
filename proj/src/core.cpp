#include "lcps/core.hpp"

#include <algorithm>

namespace lcps {

Symbol Seq::at(Pos pos) const
{
    if (pos < 1 || pos > len())
        throw std::out_of_range("sequence position " + std::to_string(pos) + " outside [1, " +
                                std::to_string(len()) + "]");
    return (*this)[pos];
}

bool is_palindrome(std::string_view z)
{
    return std::equal(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(z.size() / 2), z.rbegin());
}

bool is_subsequence(std::string_view z, std::string_view x)
{
    std::size_t t = 0;
    for (std::size_t p = 0; p < x.size() && t < z.size(); ++p)
        if (x[p] == z[t])
            ++t;
    return t == z.size();
}

namespace {

bool embeds_at(const std::string& z, const std::vector<Pos>& indices, const Seq& s)
{
    Pos prev = 0;
    for (std::size_t t = 0; t < indices.size(); ++t) {
        Pos p = indices[t];
        if (p <= prev || p > s.len())
            return false;
        if (s[p] != static_cast<Symbol>(z[t]))
            return false;
        prev = p;
    }
    return true;
}

} // namespace

bool validate_witness(const CpsResult& r, const Seq& x, const Seq& y)
{
    if (r.x_indices.size() != r.z.size() || r.y_indices.size() != r.z.size())
        return false;
    if (!is_palindrome(r.z))
        return false;
    return embeds_at(r.z, r.x_indices, x) && embeds_at(r.z, r.y_indices, y);
}

} // namespace lcps
