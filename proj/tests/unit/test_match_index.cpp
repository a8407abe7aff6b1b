#include <doctest.h>

#include "lcps/match_index.hpp"
#include "test_support.hpp"

using namespace lcps;

TEST_CASE("build_occurrence_lists")
{
    SUBCASE("aab / aba")
    {
        const auto occ = build_occurrence_lists(Seq("aab"), Seq("aba"));
        REQUIRE(occ.size() == 2);
        CHECK(occ.at('a') == Occurrences{{1, 2}, {1, 3}});
        CHECK(occ.at('b') == Occurrences{{3}, {2}});
    }
    SUBCASE("symbol only in Y")
    {
        const auto occ = build_occurrence_lists(Seq(""), Seq("a"));
        REQUIRE(occ.size() == 1);
        CHECK(occ.at('a') == Occurrences{{}, {1}});
        CHECK(build_match_set(Seq(""), Seq("a")).r == 0);
        CHECK(build_match_set(Seq(""), Seq("a")).per_sigma.empty());
    }
    SUBCASE("zz / zz")
    {
        const auto occ = build_occurrence_lists(Seq("zz"), Seq("zz"));
        CHECK(occ.at('z') == Occurrences{{1, 2}, {1, 2}});
    }
}

TEST_CASE("build_match_set")
{
    SUBCASE("aab / aba")
    {
        const MatchSet ms = build_match_set(Seq("aab"), Seq("aba"));
        CHECK(ms.r == 5);
        REQUIRE(ms.per_sigma.size() == 2);
        CHECK(ms.per_sigma[0].sigma() == 'a');
        CHECK(ms.per_sigma[0].matches() == std::vector<Match>{{1, 1}, {1, 3}, {2, 1}, {2, 3}});
        CHECK(ms.per_sigma[1].sigma() == 'b');
        CHECK(ms.per_sigma[1].matches() == std::vector<Match>{{3, 2}});
    }
    SUBCASE("disjoint alphabets")
    {
        CHECK(build_match_set(Seq("ab"), Seq("cd")).r == 0);
    }
    SUBCASE("2x2 product")
    {
        CHECK(build_match_set(Seq("aa"), Seq("aa")).r == 4);
    }
    SUBCASE("cap")
    {
        CHECK_THROWS_AS(build_match_set(Seq("aa"), Seq("aa"), 3), CapacityExceeded);
        CHECK_NOTHROW(build_match_set(Seq("aa"), Seq("aa"), 4));
    }
}

TEST_CASE("match set agrees with the naive double loop")
{
    testing::Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const Seq x = testing::random_seq(rng, testing::uniform(rng, 0, 50), testing::uniform(rng, 1, 6));
        const Seq y = testing::random_seq(rng, testing::uniform(rng, 0, 50), testing::uniform(rng, 1, 6));

        std::vector<Match> naive;
        for (Pos i = 1; i <= x.len(); ++i)
            for (Pos j = 1; j <= y.len(); ++j)
                if (x[i] == y[j])
                    naive.push_back({i, j});

        const MatchSet ms = build_match_set(x, y);
        CHECK(ms.r == naive.size());
        CHECK(count_matches(x, y) == naive.size());

        std::vector<Match> got;
        std::uint64_t sum = 0;
        for (const auto& s : ms.per_sigma) {
            CHECK(s.r_sigma() == s.x_occ().size() * s.y_occ().size());
            sum += s.r_sigma();
            s.for_each_match([&](Match m) {
                CHECK(x[m.i] == s.sigma());
                CHECK(y[m.j] == s.sigma());
                got.push_back(m);
            });
        }
        CHECK(sum == ms.r);
        std::sort(got.begin(), got.end());
        CHECK(got == naive);
    }
}
