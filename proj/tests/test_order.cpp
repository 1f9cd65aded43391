#include <gtest/gtest.h>

#include "criteria.hpp"

using namespace veerkit;
using namespace vktest;

TEST(CuspName, ParseAndPrint) {
    auto n = CuspName::parse("t1.v3/g0/g2");
    EXPECT_EQ(n.tet, 1);
    EXPECT_EQ(n.vertex, 3);
    EXPECT_EQ(n.faces, (std::vector<int>{0, 2}));
    EXPECT_EQ(n.str(), "t1.v3/g0/g2");
    EXPECT_EQ(CuspName::parse("t0.v0").faces.size(), 0u);
    for (auto bad : {"t0.v4", "x0.v0", "t0.v0/g4", "t0v0", "t0.v0/", ""}) {
        try {
            CuspName::parse(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadCuspName);
        }
    }
}

TEST(CuspName, UnknownTetRejected) {
    Session s(figure_eight());
    EXPECT_THROW(s.cusp(CuspName::parse("t5.v0")), Error);
}

TEST(Order, OneFaceReadsAnticlockwise) {
    Session s(figure_eight());
    auto& dev = s.dev();
    int r = s.root();
    for (int f = 0; f < 4; ++f) {
        FaceView fv = dev.face_view(r, f);
        EXPECT_EQ(s.order(fv.cusp[0], fv.cusp[1], fv.cusp[2]), 1);
        EXPECT_EQ(s.order(fv.cusp[0], fv.cusp[2], fv.cusp[1]), -1);
    }
    auto n = CuspName::parse("t0.v1");
    EXPECT_EQ(s.order(n, n, CuspName::parse("t0.v2")), 0);
}

TEST(Order, Axioms) {
    auto r = order_axioms(figure_eight(), 150, 80, 20, 2, 20, 5, 0);
    EXPECT_EQ(r.range_ok, r.triples);
    EXPECT_EQ(r.cyclic_ok, r.triples);
    EXPECT_EQ(r.antisym_ok, r.triples);
    EXPECT_EQ(r.fresh_ok, r.triples);
    EXPECT_GT(r.quads, 20);
    EXPECT_EQ(r.transitive_ok, r.quads);
    EXPECT_GE(r.compat_size, 20);
    EXPECT_EQ(r.compat_failures, 0);
    EXPECT_EQ(r.deck_checked, 40);
    EXPECT_EQ(r.deck_failures, 0);
    EXPECT_EQ(r.parallel, 0);
}

TEST(Order, DeckLoops) {
    auto& tri = figure_eight()->tri;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto g = random_loop(rng, tri, i % 7);
        EXPECT_TRUE(DeckLoop::is_loop(tri, g.word));
    }
    EXPECT_FALSE(DeckLoop::is_loop(tri, {0}));
}

// A nontrivial deck translation cannot fix all four cusps of a tet.
TEST(Order, DeckMovesRootCusps) {
    Session s(figure_eight());
    std::mt19937_64 rng(5);
    int nontrivial = 0;
    for (int i = 0; i < 20; ++i) {
        DeckLoop g = random_loop(rng, s.vt().tri, 1 + i % 5);
        if (s.tet_at(g.word) == s.root()) continue;
        ++nontrivial;
        int fixed = 0;
        for (int v = 0; v < 4; ++v) {
            CuspName n{0, v, {}};
            fixed += s.cusp(n) == s.cusp(s.apply(g, n));
        }
        EXPECT_LT(fixed, 4);
    }
    EXPECT_GT(nontrivial, 10);
}

TEST(Order, CoastalArc) {
    std::vector<int> coast{4, 7, 1, 9, 3};
    EXPECT_EQ(coastal_arc(coast, 1, 4), (std::vector<int>{1, 9, 3, 4}));
    EXPECT_EQ(coastal_arc(coast, 7, 7), (std::vector<int>{7}));
}
