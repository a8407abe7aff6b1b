#include "lcps/dominance_index.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <stdexcept>

namespace lcps {

namespace {

inline std::size_t lowbit(std::size_t v)
{
    return v & (~v + 1);
}

// number of entries strictly greater than v in a descending list
inline std::size_t count_greater(std::span<const std::int32_t> desc, std::int32_t v)
{
    return static_cast<std::size_t>(
        std::partition_point(desc.begin(), desc.end(), [v](std::int32_t e) { return e > v; }) - desc.begin());
}

// 1-based rank of v, which must be present, in a descending list
inline std::size_t rank_of(std::span<const std::int32_t> desc, std::int32_t v)
{
    return count_greater(desc, v) + 1;
}

void sort_desc_unique(std::vector<std::int32_t>& v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// concatenates buckets into one array; starts[t] .. starts[t + 1] is bucket t
void flatten(std::vector<std::vector<std::int32_t>>& buckets, std::vector<std::size_t>& starts,
             std::vector<std::int32_t>& flat)
{
    starts.assign(buckets.size() + 1, 0);
    for (std::size_t t = 0; t < buckets.size(); ++t) {
        sort_desc_unique(buckets[t]);
        starts[t + 1] = starts[t] + buckets[t].size();
    }
    flat.reserve(starts.back());
    for (auto& b : buckets) {
        flat.insert(flat.end(), b.begin(), b.end());
        std::vector<std::int32_t>().swap(b);
    }
}

} // namespace

DominanceMaxIndex::DominanceMaxIndex(std::vector<Key3> universe) : keys_(std::move(universe))
{
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    key_entries_.assign(keys_.size(), Entry{});

    a_desc_.reserve(keys_.size());
    for (const auto& k : keys_)
        a_desc_.push_back(k.a);
    sort_desc_unique(a_desc_);
    const std::size_t na = a_desc_.size();

    std::vector<std::vector<std::int32_t>> b_buckets(na);
    for (const auto& k : keys_)
        for (std::size_t u = rank_of(a_desc_, k.a); u <= na; u += lowbit(u))
            b_buckets[u - 1].push_back(k.b);
    flatten(b_buckets, b_start_, b_vals_);

    std::vector<std::vector<std::int32_t>> c_buckets(b_vals_.size());
    for (const auto& k : keys_) {
        for (std::size_t u = rank_of(a_desc_, k.a); u <= na; u += lowbit(u)) {
            const std::span<const std::int32_t> bs(b_vals_.data() + b_start_[u - 1], b_start_[u] - b_start_[u - 1]);
            for (std::size_t v = rank_of(bs, k.b); v <= bs.size(); v += lowbit(v))
                c_buckets[b_start_[u - 1] + v - 1].push_back(k.c);
        }
    }
    flatten(c_buckets, c_start_, c_vals_);
    cells_.assign(c_vals_.size(), Entry{});
}

DominanceMaxIndex::Entry DominanceMaxIndex::query_max_strict(const Key3& q) const
{
    Entry best;
    for (std::size_t u = count_greater(a_desc_, q.a); u > 0; u -= lowbit(u)) {
        const std::size_t b0 = b_start_[u - 1];
        const std::span<const std::int32_t> bs(b_vals_.data() + b0, b_start_[u] - b0);
        for (std::size_t v = count_greater(bs, q.b); v > 0; v -= lowbit(v)) {
            const std::size_t g = b0 + v - 1;
            const std::size_t c0 = c_start_[g];
            const std::span<const std::int32_t> cs(c_vals_.data() + c0, c_start_[g + 1] - c0);
            for (std::size_t w = count_greater(cs, q.c); w > 0; w -= lowbit(w)) {
                const Entry& e = cells_[c0 + w - 1];
                if (e.value > best.value)
                    best = e;
            }
        }
    }
    return best;
}

std::size_t DominanceMaxIndex::key_slot(const Key3& key) const
{
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key)
        throw std::invalid_argument("key is not part of the index universe");
    return static_cast<std::size_t>(it - keys_.begin());
}

void DominanceMaxIndex::insert_or_raise(const Key3& key, std::int32_t value, NodeId node)
{
    Entry& own = key_entries_[key_slot(key)];
    if (value <= own.value)
        return;
    own = Entry{value, node};

    const std::size_t na = a_desc_.size();
    for (std::size_t u = rank_of(a_desc_, key.a); u <= na; u += lowbit(u)) {
        const std::size_t b0 = b_start_[u - 1];
        const std::span<const std::int32_t> bs(b_vals_.data() + b0, b_start_[u] - b0);
        for (std::size_t v = rank_of(bs, key.b); v <= bs.size(); v += lowbit(v)) {
            const std::size_t g = b0 + v - 1;
            const std::size_t c0 = c_start_[g];
            const std::span<const std::int32_t> cs(c_vals_.data() + c0, c_start_[g + 1] - c0);
            for (std::size_t w = rank_of(cs, key.c); w <= cs.size(); w += lowbit(w)) {
                Entry& e = cells_[c0 + w - 1];
                if (value > e.value)
                    e = Entry{value, node};
            }
        }
    }
}

DominanceMaxIndex::Entry DominanceMaxIndex::stored(const Key3& key) const
{
    return key_entries_[key_slot(key)];
}

} // namespace lcps
