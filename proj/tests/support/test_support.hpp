#ifndef LCPS_TESTS_SUPPORT_HPP
#define LCPS_TESTS_SUPPORT_HPP

// Test-only helpers: random inputs and reference implementations that do
// not share code paths with the library under test.

#include "lcps/core.hpp"
#include "lcps/dominance_index.hpp"
#include "lcps/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace lcps::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Seq random_seq(Rng& rng, int len, int alphabet)
{
    std::string s(static_cast<std::size_t>(len), 'a');
    for (auto& ch : s)
        ch = static_cast<char>('a' + uniform(rng, 0, alphabet - 1));
    return Seq(s);
}

/// Naive dominance-max store: linear scan over every key.
class NaiveDominance {
public:
    void insert_or_raise(const Key3& k, std::int32_t value, NodeId node)
    {
        for (auto& e : entries_)
            if (e.key == k) {
                if (value > e.value) {
                    e.value = value;
                    e.node = node;
                }
                return;
            }
        entries_.push_back({k, value, node});
    }

    std::int32_t query_value(const Key3& q) const
    {
        std::int32_t best = 0;
        for (const auto& e : entries_)
            if (e.key.a > q.a && e.key.b > q.b && e.key.c > q.c)
                best = std::max(best, e.value);
        return best;
    }

    /// True if some strictly dominating key holds exactly (value, node).
    bool has_dominating(const Key3& q, std::int32_t value, NodeId node) const
    {
        for (const auto& e : entries_)
            if (e.key.a > q.a && e.key.b > q.b && e.key.c > q.c && e.value == value && e.node == node)
                return true;
        return false;
    }

private:
    struct E {
        Key3 key;
        std::int32_t value;
        NodeId node;
    };
    std::vector<E> entries_;
};

/// O(P^2) maximum-weight chain: value(p) = w(p) + max value(q) over q
/// strictly greater than p in all four coordinates.
inline std::int32_t brute_force_chain_value(const std::vector<Point4>& pts)
{
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    auto sum = [&](std::size_t t) {
        return std::int64_t{pts[t].a} + pts[t].b + pts[t].c + pts[t].d;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return sum(l) > sum(r); });
    std::vector<std::int32_t> value(pts.size(), 0);
    std::int32_t best = 0;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t p = order[oi];
        std::int32_t inner = 0;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const std::size_t q = order[oj];
            const auto& P = pts[p];
            const auto& Q = pts[q];
            if (Q.a > P.a && Q.b > P.b && Q.c > P.c && Q.d > P.d)
                inner = std::max(inner, value[q]);
        }
        value[p] = pts[p].weight + inner;
        best = std::max(best, value[p]);
    }
    return best;
}

inline std::vector<Point4> random_points(Rng& rng, int count, int coord_max)
{
    std::vector<Point4> pts;
    for (int t = 0; t < count; ++t) {
        Point4 p;
        p.a = uniform(rng, 1, coord_max);
        p.b = uniform(rng, 1, coord_max);
        p.c = -uniform(rng, 1, coord_max);
        p.d = -uniform(rng, 1, coord_max);
        p.weight = uniform(rng, 1, 2);
        p.source = static_cast<std::size_t>(t);
        pts.push_back(p);
    }
    return pts;
}

/// Arbitrary rectangles with i <= k and j <= l; equal corners give degenerate ones.
inline Rect random_rect(Rng& rng, int coord_max)
{
    Rect r;
    r.lower.i = uniform(rng, 1, coord_max);
    r.lower.j = uniform(rng, 1, coord_max);
    if (uniform(rng, 0, 4) == 0) {
        r.upper = r.lower;
        r.weight = 1;
    } else {
        r.upper.i = uniform(rng, r.lower.i, coord_max);
        r.upper.j = uniform(rng, r.lower.j, coord_max);
        r.weight = 2;
    }
    return r;
}

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s)
{
    std::string q = "'";
    for (char ch : s) {
        if (ch == '\'')
            q += "'\\''";
        else
            q += ch;
    }
    return q + "'";
}

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs the CLI binary and captures stdout, stderr and the exit status.
inline CliRun run_cli(const std::string& binary, const std::vector<std::string>& args)
{
    static int counter = 0;
    const std::string err_path = "lcps_cli_stderr_" + std::to_string(++counter) + ".txt";
    std::string cmd = shell_quote(binary);
    for (const auto& a : args)
        cmd += " " + shell_quote(a);
    cmd += " 2>" + shell_quote(err_path);

    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    std::remove(err_path.c_str());
    return r;
}

} // namespace lcps::testing

#endif // LCPS_TESTS_SUPPORT_HPP
