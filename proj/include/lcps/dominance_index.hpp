#ifndef LCPS_DOMINANCE_INDEX_HPP
#define LCPS_DOMINANCE_INDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lcps {

struct Key3 {
    std::int32_t a = 0;
    std::int32_t b = 0;
    std::int32_t c = 0;

    friend auto operator<=>(const Key3&, const Key3&) = default;
};

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/*
 * Strict 3-D dominance maximum over a fixed key universe.
 *
 * query_max_strict(q) returns the largest value stored at any key k with
 * k.a > q.a, k.b > q.b and k.c > q.c, together with the node that put it
 * there. Values only ever grow, so the structure is a three-level Fenwick
 * tree of prefix maxima over each coordinate flipped into descending rank
 * order. Levels two and three hold only the coordinates that can reach them,
 * giving O(K log^2 K) memory for K keys and O(log^3 K) per operation.
 *
 * Keys must be declared up front; queries may use any point.
 */
class DominanceMaxIndex {
public:
    struct Entry {
        std::int32_t value = 0;
        NodeId node = kNoNode;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    DominanceMaxIndex() = default;
    explicit DominanceMaxIndex(std::vector<Key3> universe);

    /// (0, kNoNode) when nothing strictly dominates q.
    Entry query_max_strict(const Key3& q) const;

    /// Raises the value stored at key to max(old, value). The node follows
    /// the maximum; on a tie the earlier node is kept. Throws
    /// std::invalid_argument for keys outside the universe.
    void insert_or_raise(const Key3& key, std::int32_t value, NodeId node);

    /// Value currently stored at exactly this key.
    Entry stored(const Key3& key) const;

    std::size_t key_count() const { return keys_.size(); }

private:
    std::size_t key_slot(const Key3& key) const;

    std::vector<std::int32_t> a_desc_;

    // level 2: for Fenwick node u over a, distinct b values (descending) in
    // b_vals_[b_start_[u - 1] .. b_start_[u])
    std::vector<std::size_t> b_start_;
    std::vector<std::int32_t> b_vals_;

    // level 3: for level-2 slot g, distinct c values (descending) and their
    // Fenwick cells in [c_start_[g], c_start_[g + 1])
    std::vector<std::size_t> c_start_;
    std::vector<std::int32_t> c_vals_;
    std::vector<Entry> cells_;

    std::vector<Key3> keys_; // sorted
    std::vector<Entry> key_entries_;
};

} // namespace lcps

#endif // LCPS_DOMINANCE_INDEX_HPP
