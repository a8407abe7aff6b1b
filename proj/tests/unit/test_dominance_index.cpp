#include <doctest.h>

#include "lcps/dominance_index.hpp"
#include "test_support.hpp"

using namespace lcps;

TEST_CASE("query_max_strict")
{
    SUBCASE("empty index")
    {
        const DominanceMaxIndex idx;
        CHECK(idx.query_max_strict(Key3{0, 0, 0}) == DominanceMaxIndex::Entry{0, kNoNode});
        const DominanceMaxIndex declared({Key3{2, 2, 2}});
        CHECK(declared.query_max_strict(Key3{1, 1, 1}) == DominanceMaxIndex::Entry{0, kNoNode});
    }
    SUBCASE("single dominating key")
    {
        DominanceMaxIndex idx({Key3{2, 2, 2}});
        idx.insert_or_raise(Key3{2, 2, 2}, 5, 42);
        CHECK(idx.query_max_strict(Key3{1, 1, 1}) == DominanceMaxIndex::Entry{5, 42});
    }
    SUBCASE("strictness in every coordinate")
    {
        DominanceMaxIndex idx({Key3{2, 2, 2}});
        idx.insert_or_raise(Key3{2, 2, 2}, 5, 42);
        CHECK(idx.query_max_strict(Key3{2, 2, 2}).value == 0);
        CHECK(idx.query_max_strict(Key3{1, 2, 1}).value == 0);
        CHECK(idx.query_max_strict(Key3{1, 1, 2}).value == 0);
        CHECK(idx.query_max_strict(Key3{2, 1, 1}).value == 0);
    }
    SUBCASE("negative coordinates")
    {
        DominanceMaxIndex idx({Key3{3, 4, -5}, Key3{1, 1, -1}});
        idx.insert_or_raise(Key3{3, 4, -5}, 2, 0);
        idx.insert_or_raise(Key3{1, 1, -1}, 9, 1);
        CHECK(idx.query_max_strict(Key3{0, 0, -6}).value == 9);
        CHECK(idx.query_max_strict(Key3{1, 0, -6}).value == 2);
        CHECK(idx.query_max_strict(Key3{0, 0, -1}).value == 0);
    }
}

TEST_CASE("insert_or_raise keeps the maximum")
{
    DominanceMaxIndex idx({Key3{1, 1, 1}, Key3{4, 4, 4}});
    idx.insert_or_raise(Key3{1, 1, 1}, 3, 1);
    CHECK(idx.stored(Key3{1, 1, 1}) == DominanceMaxIndex::Entry{3, 1});
    idx.insert_or_raise(Key3{1, 1, 1}, 2, 2);
    CHECK(idx.stored(Key3{1, 1, 1}) == DominanceMaxIndex::Entry{3, 1});
    idx.insert_or_raise(Key3{1, 1, 1}, 4, 3);
    CHECK(idx.stored(Key3{1, 1, 1}) == DominanceMaxIndex::Entry{4, 3});
    idx.insert_or_raise(Key3{1, 1, 1}, 4, 9);
    CHECK(idx.stored(Key3{1, 1, 1}).node == 3);
    CHECK(idx.query_max_strict(Key3{0, 0, 0}) == DominanceMaxIndex::Entry{4, 3});

    CHECK(idx.stored(Key3{4, 4, 4}) == DominanceMaxIndex::Entry{0, kNoNode});
    idx.insert_or_raise(Key3{4, 4, 4}, 7, 5);
    CHECK(idx.stored(Key3{4, 4, 4}) == DominanceMaxIndex::Entry{7, 5});
    CHECK(idx.key_count() == 2);
}

TEST_CASE("keys outside the universe are rejected")
{
    DominanceMaxIndex idx({Key3{1, 1, 1}});
    CHECK_THROWS_AS(idx.insert_or_raise(Key3{1, 1, 2}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)idx.stored(Key3{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("index agrees with a naive scan")
{
    testing::Rng rng(123);
    for (int seq = 0; seq < 60; ++seq) {
        const int coord = testing::uniform(rng, 2, 64);
        std::vector<Key3> universe;
        const int keys = testing::uniform(rng, 1, 120);
        for (int t = 0; t < keys; ++t)
            universe.push_back(Key3{testing::uniform(rng, 1, coord), testing::uniform(rng, 1, coord),
                                    testing::uniform(rng, 1, coord)});
        DominanceMaxIndex idx(universe);
        testing::NaiveDominance naive;
        for (int op = 0; op < 500; ++op) {
            if (testing::uniform(rng, 0, 1) == 0) {
                const Key3 k = universe[static_cast<std::size_t>(testing::uniform(rng, 0, keys - 1))];
                const int v = testing::uniform(rng, 1, 1000);
                idx.insert_or_raise(k, v, op);
                naive.insert_or_raise(k, v, op);
            } else {
                const Key3 q{testing::uniform(rng, 0, coord), testing::uniform(rng, 0, coord),
                             testing::uniform(rng, 0, coord)};
                const auto got = idx.query_max_strict(q);
                CHECK(got.value == naive.query_value(q));
                if (got.value > 0)
                    CHECK(naive.has_dominating(q, got.value, got.node));
                else
                    CHECK(got.node == kNoNode);
            }
        }
    }
}
