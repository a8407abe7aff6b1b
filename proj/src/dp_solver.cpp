#include "lcps/dp_solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace lcps {

std::uint64_t dp_cell_count(std::uint64_t n, std::uint64_t m)
{
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (std::uint64_t f : {n, n, m, m}) {
        if (f == 0)
            return 0;
        if (total > kMax / f)
            total = kMax;
        else
            total *= f;
    }
    return total;
}

namespace {

// base[len] = sum over shorter lengths of the number of start positions
std::vector<std::size_t> length_bases(Pos len)
{
    std::vector<std::size_t> base(static_cast<std::size_t>(len) + 2, 0);
    for (Pos t = 1; t <= len; ++t)
        base[t + 1] = base[t] + static_cast<std::size_t>(len - t + 1);
    return base;
}

} // namespace

DpTable::DpTable(Pos n, Pos m) : n_(n), m_(m), x_base_(length_bases(n)), y_base_(length_bases(m))
{
    y_block_ = y_base_.back();
    if (n > 0 && m > 0)
        cells_ = std::make_unique_for_overwrite<std::uint16_t[]>(x_base_.back() * y_block_);
}

std::uint16_t DpTable::cell(Pos i, Pos j, Pos k, Pos l) const
{
    if (i > j || k > l)
        return 0;
    if (i < 1 || j > n_ || k < 1 || l > m_)
        throw std::out_of_range("dp cell (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + "," + std::to_string(l) + ") out of range");
    return cells_[offset(j - i + 1, i, l - k + 1, k)];
}

namespace {

// counts[c * (len + 1) + p] = occurrences of compact symbol c in s[1..p]
class PrefixCounts {
public:
    PrefixCounts(const Seq& s, const std::array<int, 256>& compact, int alphabet)
        : stride_(static_cast<std::size_t>(s.len()) + 1), counts_(static_cast<std::size_t>(alphabet) * stride_, 0)
    {
        for (int c = 0; c < alphabet; ++c) {
            std::uint32_t* row = &counts_[static_cast<std::size_t>(c) * stride_];
            for (Pos p = 1; p <= s.len(); ++p)
                row[p] = row[p - 1] + (compact[s[p]] == c ? 1u : 0u);
        }
    }

    bool contains(int c, Pos from, Pos to) const
    {
        const std::uint32_t* row = &counts_[static_cast<std::size_t>(c) * stride_];
        return row[to] > row[from - 1];
    }

private:
    std::size_t stride_;
    std::vector<std::uint32_t> counts_;
};

} // namespace

DpTable fill_table(const Seq& x, const Seq& y, std::uint64_t max_cells)
{
    const Pos n = x.len();
    const Pos m = y.len();
    const std::uint64_t cells = dp_cell_count(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
    if (cells > max_cells)
        throw CapacityExceeded("dp table needs " + std::to_string(cells) + " cells, cap is " +
                               std::to_string(max_cells));
    // lengths are bounded by min(n, m); 16-bit cells must hold them
    if (std::min(n, m) > std::numeric_limits<std::uint16_t>::max())
        throw CapacityExceeded("dp cell width cannot hold lengths above 65535");

    DpTable t(n, m);
    if (cells == 0)
        return t;

    std::array<int, 256> compact;
    compact.fill(-1);
    int alphabet = 0;
    for (const Seq* s : {&x, &y})
        for (Pos p = 1; p <= s->len(); ++p)
            if (compact[(*s)[p]] < 0)
                compact[(*s)[p]] = alphabet++;
    const PrefixCounts in_x(x, compact, alphabet);
    const PrefixCounts in_y(y, compact, alphabet);

    std::uint16_t* c = t.cells_.get();
    for (Pos xl = 1; xl <= n; ++xl) {
        for (Pos i = 1; i + xl - 1 <= n; ++i) {
            const Pos j = i + xl - 1;
            const Symbol xi = x[i];
            const bool ends_equal = xi == x[j];
            for (Pos yl = 1; yl <= m; ++yl) {
                std::uint16_t* row = c + t.offset(xl, i, yl, 1);
                if (xl == 1) {
                    for (Pos k = 1; k + yl - 1 <= m; ++k)
                        row[k - 1] = in_y.contains(compact[xi], k, k + yl - 1) ? 1 : 0;
                    continue;
                }
                if (yl == 1) {
                    for (Pos k = 1; k <= m; ++k)
                        row[k - 1] = in_x.contains(compact[y[k]], i, j) ? 1 : 0;
                    continue;
                }
                const std::uint16_t* drop_first_x = c + t.offset(xl - 1, i + 1, yl, 1);
                const std::uint16_t* drop_last_x = c + t.offset(xl - 1, i, yl, 1);
                const std::uint16_t* shorter_y = c + t.offset(xl, i, yl - 1, 1);
                const std::uint16_t* inner =
                    (xl > 2 && yl > 2) ? c + t.offset(xl - 2, i + 1, yl - 2, 2) : nullptr;
                for (Pos k = 1; k + yl - 1 <= m; ++k) {
                    const Pos l = k + yl - 1;
                    if (ends_equal && y[k] == xi && y[l] == xi) {
                        // inner row starts at k = 2, hence index k - 1 addresses k + 1
                        row[k - 1] = static_cast<std::uint16_t>(2 + (inner ? inner[k - 1] : 0));
                    } else {
                        row[k - 1] = std::max({drop_first_x[k - 1], drop_last_x[k - 1], shorter_y[k], shorter_y[k - 1]});
                    }
                }
            }
        }
    }
    return t;
}

CpsResult traceback(const DpTable& t, const Seq& x, const Seq& y)
{
    std::string left;
    std::vector<Pos> left_x, left_y;
    std::string right; // built outside-in, reversed at the end
    std::vector<Pos> right_x, right_y;
    std::string center;
    Pos center_x = 0, center_y = 0;

    Pos i = 1, j = x.len(), k = 1, l = y.len();
    while (i <= j && k <= l) {
        const std::uint16_t v = t.cell(i, j, k, l);
        if (v == 0)
            break;
        if (i == j || k == l) {
            if (i == j) {
                center_x = i;
                for (Pos p = k; p <= l; ++p)
                    if (y[p] == x[i]) {
                        center_y = p;
                        break;
                    }
            } else {
                center_y = k;
                for (Pos p = i; p <= j; ++p)
                    if (x[p] == y[k]) {
                        center_x = p;
                        break;
                    }
            }
            center.push_back(static_cast<char>(x[center_x]));
            break;
        }
        if (x[i] == x[j] && x[i] == y[k] && x[i] == y[l]) {
            left.push_back(static_cast<char>(x[i]));
            left_x.push_back(i);
            left_y.push_back(k);
            right.push_back(static_cast<char>(x[j]));
            right_x.push_back(j);
            right_y.push_back(l);
            ++i, --j, ++k, --l;
            continue;
        }
        if (t.cell(i + 1, j, k, l) == v)
            ++i;
        else if (t.cell(i, j - 1, k, l) == v)
            --j;
        else if (t.cell(i, j, k + 1, l) == v)
            ++k;
        else
            --l;
    }

    CpsResult r;
    r.z = left + center + std::string(right.rbegin(), right.rend());
    r.x_indices = left_x;
    r.y_indices = left_y;
    if (!center.empty()) {
        r.x_indices.push_back(center_x);
        r.y_indices.push_back(center_y);
    }
    r.x_indices.insert(r.x_indices.end(), right_x.rbegin(), right_x.rend());
    r.y_indices.insert(r.y_indices.end(), right_y.rbegin(), right_y.rend());
    return r;
}

CpsResult dp_lcps(const Seq& x, const Seq& y, std::uint64_t max_cells)
{
    return traceback(fill_table(x, y, max_cells), x, y);
}

} // namespace lcps
