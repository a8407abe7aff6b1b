#include <doctest.h>

#include "lcps/dp_solver.hpp"
#include "lcps/oracle.hpp"
#include "test_support.hpp"

using namespace lcps;

TEST_CASE("fill_table examples")
{
    CHECK(fill_table(Seq("a"), Seq("a")).cell(1, 1, 1, 1) == 1);

    // frozen from brute_force_lcps; re-derived below so a broken oracle shows up too
    CHECK(brute_force_lcps(Seq("aab"), Seq("aba")).length() == 2);
    CHECK(fill_table(Seq("aab"), Seq("aba")).cell(1, 3, 1, 3) == 2);

    CHECK(brute_force_lcps(Seq("abcba"), Seq("bacab")).length() == 3);
    CHECK(fill_table(Seq("abcba"), Seq("bacab")).cell(1, 5, 1, 5) == 3);
}

TEST_CASE("empty substrings read as zero without touching storage")
{
    const DpTable t = fill_table(Seq("ab"), Seq("ba"));
    CHECK(t.cell(2, 1, 1, 2) == 0);
    CHECK(t.cell(1, 2, 2, 1) == 0);
    CHECK(t.cell(3, 2, 1, 2) == 0); // i = n + 1, empty
    CHECK_THROWS_AS((void)t.cell(1, 3, 1, 2), std::out_of_range);

    const DpTable empty = fill_table(Seq(""), Seq("abc"));
    CHECK(empty.lcps_length() == 0);
}

TEST_CASE("base cells cover single characters against whole ranges")
{
    // X_{1,1} = "a" against Y_{1,3} = "bab": the match is strictly inside
    const DpTable t = fill_table(Seq("a"), Seq("bab"));
    CHECK(t.cell(1, 1, 1, 3) == 1);
    CHECK(t.cell(1, 1, 1, 1) == 0);
    CHECK(t.cell(1, 1, 2, 2) == 1);

    const DpTable u = fill_table(Seq("cbc"), Seq("b"));
    CHECK(u.cell(1, 3, 1, 1) == 1);
    CHECK(u.cell(1, 1, 1, 1) == 0);
}

TEST_CASE("dp_lcps witnesses")
{
    SUBCASE("empty X")
    {
        const CpsResult r = dp_lcps(Seq(""), Seq("abc"));
        CHECK(r.length() == 0);
        CHECK(r.x_indices.empty());
        CHECK(r.y_indices.empty());
    }
    SUBCASE("aab / aba")
    {
        const CpsResult r = dp_lcps(Seq("aab"), Seq("aba"));
        CHECK(r.z == "aa");
        CHECK(r.x_indices == std::vector<Pos>{1, 2});
        CHECK(r.y_indices == std::vector<Pos>{1, 3});
        CHECK(validate_witness(r, Seq("aab"), Seq("aba")));
    }
    SUBCASE("ab / ba")
    {
        const CpsResult r = dp_lcps(Seq("ab"), Seq("ba"));
        CHECK(r.length() == 1);
        CHECK((r.z == "a" || r.z == "b"));
        CHECK(validate_witness(r, Seq("ab"), Seq("ba")));
    }
    SUBCASE("odd centre inside a pair")
    {
        const CpsResult r = dp_lcps(Seq("abcba"), Seq("bacab"));
        CHECK(r.length() == 3);
        CHECK(validate_witness(r, Seq("abcba"), Seq("bacab")));
    }
}

TEST_CASE("cell cap")
{
    CHECK(dp_cell_count(3, 4) == 144);
    CHECK(dp_cell_count(0, 4) == 0);
    CHECK(dp_cell_count(std::uint64_t{1} << 20, std::uint64_t{1} << 20) == UINT64_MAX);
    CHECK_THROWS_AS(fill_table(Seq("abc"), Seq("abcd"), 143), CapacityExceeded);
    CHECK_NOTHROW(fill_table(Seq("abc"), Seq("abcd"), 144));
    CHECK_THROWS_AS(dp_lcps(Seq("abc"), Seq("abcd"), 10), CapacityExceeded);
}

TEST_CASE("table invariants on random inputs")
{
    testing::Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        const Seq x = testing::random_seq(rng, testing::uniform(rng, 1, 9), testing::uniform(rng, 1, 3));
        const Seq y = testing::random_seq(rng, testing::uniform(rng, 1, 9), testing::uniform(rng, 1, 3));
        const DpTable tab = fill_table(x, y);
        for (Pos i = 1; i <= x.len(); ++i)
            for (Pos j = i; j <= x.len(); ++j)
                for (Pos k = 1; k <= y.len(); ++k)
                    for (Pos l = k; l <= y.len(); ++l) {
                        const int v = tab.cell(i, j, k, l);
                        CHECK(v <= std::min(j - i + 1, l - k + 1));
                        CHECK(v >= tab.cell(i + 1, j, k, l));
                        CHECK(v >= tab.cell(i, j - 1, k, l));
                        CHECK(v >= tab.cell(i, j, k + 1, l));
                        CHECK(v >= tab.cell(i, j, k, l - 1));
                        if (i < j && k < l && x[i] == x[j] && x[i] == y[k] && x[i] == y[l])
                            CHECK(v == 2 + tab.cell(i + 1, j - 1, k + 1, l - 1));
                    }
    }
}

TEST_CASE("cells equal the oracle on their substrings")
{
    testing::Rng rng(99);
    for (int t = 0; t < 25; ++t) {
        const Seq x = testing::random_seq(rng, testing::uniform(rng, 1, 7), testing::uniform(rng, 1, 3));
        const Seq y = testing::random_seq(rng, testing::uniform(rng, 1, 7), testing::uniform(rng, 1, 3));
        const DpTable tab = fill_table(x, y);
        for (Pos i = 1; i <= x.len(); ++i)
            for (Pos j = i; j <= x.len(); ++j)
                for (Pos k = 1; k <= y.len(); ++k)
                    for (Pos l = k; l <= y.len(); ++l) {
                        const Seq xs(x.view().substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1)));
                        const Seq ys(y.view().substr(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - k + 1)));
                        CHECK(tab.cell(i, j, k, l) == brute_force_lcps(xs, ys).length());
                    }
    }
}

TEST_CASE("dp length matches oracle, is symmetric and reversal-invariant")
{
    testing::Rng rng(31337);
    for (int t = 0; t < 400; ++t) {
        const int s = testing::uniform(rng, 1, 4);
        const Seq x = testing::random_seq(rng, testing::uniform(rng, 0, 10), s);
        const Seq y = testing::random_seq(rng, testing::uniform(rng, 0, 10), s);
        const CpsResult r = dp_lcps(x, y);
        CHECK(validate_witness(r, x, y));
        CHECK(r.length() == brute_force_lcps(x, y).length());
        CHECK(dp_lcps(y, x).length() == r.length());
        CHECK(dp_lcps(x.reversed(), y.reversed()).length() == r.length());
    }
}
