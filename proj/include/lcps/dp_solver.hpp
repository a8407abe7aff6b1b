#ifndef LCPS_DP_SOLVER_HPP
#define LCPS_DP_SOLVER_HPP

#include "lcps/core.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace lcps {

inline constexpr std::uint64_t kDefaultMaxDpCells = std::uint64_t{1} << 26;

/// n·n·m·m, saturating at UINT64_MAX.
std::uint64_t dp_cell_count(std::uint64_t n, std::uint64_t m);

/*
 * LCPS lengths for every substring pair X[i..j], Y[k..l].
 *
 * Storage holds the n(n+1)/2 · m(m+1)/2 non-empty substring pairs as 16-bit
 * cells, laid out by (x-length, i, y-length, k) so the four neighbours read
 * by the recurrence sit in three contiguous rows. cell() returns 0 for any
 * empty substring without touching storage.
 */
class DpTable {
public:
    DpTable() = default;

    Pos n() const { return n_; }
    Pos m() const { return m_; }

    /// Requires 1 <= i, j <= n and 1 <= k, l <= m unless the range is empty.
    std::uint16_t cell(Pos i, Pos j, Pos k, Pos l) const;

    /// cell(1, n, 1, m).
    std::uint16_t lcps_length() const { return cell(1, n_, 1, m_); }

    friend DpTable fill_table(const Seq& x, const Seq& y, std::uint64_t max_cells);

private:
    DpTable(Pos n, Pos m);

    // x_base_[xlen] counts the (xlen', i) rows with xlen' < xlen; y_base_ likewise.
    std::size_t offset(Pos xlen, Pos i, Pos ylen, Pos k) const
    {
        return (x_base_[xlen] + static_cast<std::size_t>(i - 1)) * y_block_ + y_base_[ylen] +
               static_cast<std::size_t>(k - 1);
    }

    Pos n_ = 0;
    Pos m_ = 0;
    std::vector<std::size_t> x_base_;
    std::vector<std::size_t> y_base_;
    std::size_t y_block_ = 0;
    // every cell is written by fill_table, so storage starts uninitialised
    std::unique_ptr<std::uint16_t[]> cells_;
};

/// Fills the table in increasing substring length. Throws CapacityExceeded
/// when n·n·m·m > max_cells.
DpTable fill_table(const Seq& x, const Seq& y, std::uint64_t max_cells = kDefaultMaxDpCells);

/// Reconstructs a witness from a filled table, starting at (1, n, 1, m).
CpsResult traceback(const DpTable& table, const Seq& x, const Seq& y);

CpsResult dp_lcps(const Seq& x, const Seq& y, std::uint64_t max_cells = kDefaultMaxDpCells);

} // namespace lcps

#endif // LCPS_DP_SOLVER_HPP
