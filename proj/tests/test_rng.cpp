#include <gtest/gtest.h>

#include "tagacl/rng.hpp"

using namespace tagacl;

TEST(rng, deterministic_per_seed) {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
    bool differs = false;
    Rng a2(42);
    for (int i = 0; i < 100; ++i) differs |= (a2.next_u64() != c.next_u64());
    EXPECT_TRUE(differs);
}

TEST(rng, draw_count_restores_position) {
    Rng a(7);
    for (int i = 0; i < 57; ++i) a.next_u64();
    Rng b(a.seed(), a.draws());
    for (int i = 0; i < 20; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
    EXPECT_EQ(a.draws(), b.draws());
}

TEST(rng, below_is_in_range_and_covers) {
    Rng r(1);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 2000; ++i) {
        auto v = r.below(7);
        ASSERT_LT(v, 7u);
        ++seen[static_cast<int>(v)];
    }
    for (int count : seen) EXPECT_GT(count, 0);
    EXPECT_THROW(r.below(0), std::invalid_argument);
}

TEST(rng, between_inclusive) {
    Rng r(2);
    bool lo = false, hi = false;
    for (int i = 0; i < 500; ++i) {
        auto v = r.between(3, 5);
        ASSERT_GE(v, 3u);
        ASSERT_LE(v, 5u);
        lo |= (v == 3);
        hi |= (v == 5);
    }
    EXPECT_TRUE(lo);
    EXPECT_TRUE(hi);
    EXPECT_EQ(r.between(9, 9), 9u);
}

TEST(rng, bytes_draws_accounted) {
    Rng r(3);
    auto b = r.bytes(16);
    EXPECT_EQ(b.size(), 16u);
    EXPECT_EQ(r.draws(), 16u);
    Rng replay(3, 16);
    EXPECT_EQ(r.next_u64(), replay.next_u64());
}

TEST(rng, children_are_independent_streams) {
    Rng master(11);
    Rng c1 = master.child(1);
    Rng c2 = master.child(1); // same salt, later position: different stream
    EXPECT_NE(c1.next_u64(), c2.next_u64());

    Rng master2(11);
    Rng d1 = master2.child(1);
    Rng d1_again(d1.seed());
    EXPECT_EQ(d1.next_u64(), d1_again.next_u64());
}
