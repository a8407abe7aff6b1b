#include <doctest.h>

#include "lcps/oracle.hpp"
#include "test_support.hpp"

using namespace lcps;

TEST_CASE("brute_force_lcps examples")
{
    CHECK(brute_force_lcps(Seq("ab"), Seq("ba")).length() == 1);
    CHECK(brute_force_lcps(Seq("a"), Seq("b")).length() == 0);

    const CpsResult r = brute_force_lcps(Seq("aab"), Seq("aba"));
    CHECK(r.z == "aa");
    CHECK(r.x_indices == std::vector<Pos>{1, 2});
    CHECK(r.y_indices == std::vector<Pos>{1, 3});
}

TEST_CASE("brute_force_lcps length guard")
{
    CHECK_NOTHROW(brute_force_lcps(Seq(std::string(20, 'a')), Seq("a")));
    CHECK_THROWS_AS(brute_force_lcps(Seq(std::string(21, 'a')), Seq("a")), InputTooLarge);
}

TEST_CASE("brute_force_lcps on hand-checked cases")
{
    CHECK(brute_force_lcps(Seq(""), Seq("")).length() == 0);
    CHECK(brute_force_lcps(Seq("aaaa"), Seq("aa")).length() == 2);
    CHECK(brute_force_lcps(Seq("abcba"), Seq("abcba")).z == "abcba");
    // "abab" vs "baba": aba and bab both common, no 4-palindrome
    CHECK(brute_force_lcps(Seq("abab"), Seq("baba")).length() == 3);
}

TEST_CASE("oracle witnesses validate and length is swap-symmetric")
{
    testing::Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        const int s = testing::uniform(rng, 1, 4);
        const Seq x = testing::random_seq(rng, testing::uniform(rng, 0, 9), s);
        const Seq y = testing::random_seq(rng, testing::uniform(rng, 0, 9), s);
        const CpsResult r = brute_force_lcps(x, y);
        CHECK(validate_witness(r, x, y));
        CHECK(brute_force_lcps(y, x).length() == r.length());
    }
}
