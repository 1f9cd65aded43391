#include <gtest/gtest.h>

#include "local_rule.hpp"

using namespace vktest;

TEST(LocalRule, SingleTetMatchesOracle) {
    auto r = run_local_rule_check();
    EXPECT_EQ(r.single_cases, 3 * 64);
    EXPECT_EQ(r.single_mismatch, 0);
    // Four non-pi edges are forced, the two pi edges are free.
    EXPECT_EQ(r.single_accepted, 3 * 4);
    EXPECT_EQ(r.kinds_per_pair_ok, 3);
}

TEST(LocalRule, GluingsMatchOracle) {
    auto r = run_local_rule_check();
    EXPECT_EQ(r.gluing_mismatch, 0);
    EXPECT_GT(r.gluing_accepted, 0);
    // Every kind can sit below some kind and above some kind.
    std::set<TetKind> below, above;
    for (auto& [k, n] : r.arrows) {
        below.insert(k.first);
        above.insert(k.second);
    }
    EXPECT_EQ(below.size(), 4u);
    EXPECT_EQ(above.size(), 4u);
    // Frozen from the enumeration: two arrows out of each kind.
    using K = TetKind;
    std::set<std::pair<K, K>> expect{{K::ToggleRedTop, K::ToggleBlueTop}, {K::ToggleRedTop, K::FanRed},
                                     {K::ToggleBlueTop, K::ToggleRedTop}, {K::ToggleBlueTop, K::FanBlue},
                                     {K::FanRed, K::ToggleBlueTop},       {K::FanRed, K::FanRed},
                                     {K::FanBlue, K::ToggleRedTop},       {K::FanBlue, K::FanBlue}};
    std::set<std::pair<K, K>> got;
    for (auto& [k, n] : r.arrows) got.insert(k);
    EXPECT_EQ(got, expect);
    EXPECT_EQ(r.gluing_cases, 55296);
    EXPECT_EQ(r.gluing_accepted, 4608);
}

TEST(LocalRule, OracleFacesMatchLibraryConvention) {
    for (int f = 0; f < 4; ++f)
        for (int sign : {-1, 1}) {
            auto a = outside_ccw(sign, f);
            auto b = face_vertices_outside_ccw(f, sign);
            // Same cyclic order.
            int k = 0;
            while (b[k] != a[0]) ++k;
            EXPECT_EQ(a[1], b[(k + 1) % 3]);
            EXPECT_EQ(a[2], b[(k + 2) % 3]);
        }
}
