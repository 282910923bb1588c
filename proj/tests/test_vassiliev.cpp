#include "fixtures.hpp"

using namespace knotpos;
using namespace knotpos::testing;

TEST(Match, TrefoilPatterns) {
    auto g = to_gauss(closure(2, {1, 1, 1}));
    EXPECT_EQ(match_config(g, pattern_linked()).size(), 3u);
    EXPECT_EQ(match_config(g, pattern_33()).size(), 1u);
    GaussDiagram empty;
    EXPECT_TRUE(match_config(empty, pattern_33()).empty());
    EXPECT_TRUE(match_config(empty, pattern_linked()).empty());
}

TEST(GaussSums, Anchors) {
    EXPECT_EQ(v2_gauss(GaussDiagram{}), 0);
    EXPECT_EQ(v3_gauss(GaussDiagram{}), 0);
    EXPECT_EQ(v2_gauss(to_gauss(knot("5_1"))), 3);
    EXPECT_EQ(v2_gauss(to_gauss(knot("!5_2"))), 2);
    EXPECT_EQ(v2_gauss(to_gauss(closure(2, {1, 1, 1}))), 1);
    EXPECT_EQ(v3_gauss(to_gauss(knot("!3_1"))), 4);
    EXPECT_EQ(v3_gauss(to_gauss(knot("3_1"))), -4);
    EXPECT_EQ(v3_gauss(to_gauss(knot("6_2"))), 4);
}

TEST(GaussSums, RejectNonRealizable) {
    GaussDiagram g;
    g.arrows = {{0, 2, 1}, {1, 3, 1}};
    EXPECT_THROW(v2_gauss(g), SemanticError);
}

TEST(ArrowStatistics, TorusAndKink) {
    auto s = arrow_statistics(to_gauss(closure(2, {1, 1, 1, 1, 1})));
    for (int l : s.linked) EXPECT_EQ(l, 4);
    auto k = arrow_statistics(to_gauss(closure(2, {1})));
    EXPECT_EQ(k.linked, std::vector<int>{0});
    EXPECT_EQ(k.distinguished, std::vector<int>{0});
}

TEST(ArrowStatistics, HalfDistinguishedOnPositiveDiagrams) {
    for (auto& item : generate_positive_corpus(2, 40, 3, 12)) {
        auto g = to_gauss(item.diagram);
        for (int b = 0; b < g.point_count(); ++b) {
            auto s = arrow_statistics(g, b);
            for (int i = 0; i < g.arrow_count(); ++i)
                ASSERT_EQ(2 * s.distinguished[i], s.linked[i]) << item.construction << " basepoint " << b;
        }
    }
}

TEST(GaussSums, BasepointIndependence) {
    for (auto& e : fixtures()) {
        auto g = to_gauss(*e.diagram);
        Int v2 = v2_unchecked(g), v3 = v3_unchecked(g);
        for (int b = 1; b < g.point_count(); ++b) {
            ASSERT_EQ(v2_unchecked(g.rotated(b)), v2) << e.name << " basepoint " << b;
            ASSERT_EQ(v3_unchecked(g.rotated(b)), v3) << e.name << " basepoint " << b;
        }
    }
}

TEST(GaussSums, ReidemeisterInvariance) {
    std::mt19937_64 rng(19);
    for (auto& e : fixtures()) {
        if (e.diagram->crossing_count() > 8) continue;
        auto g = to_gauss(*e.diagram);
        for (int i = 0; i < 3; ++i) {
            auto p = to_gauss(reidemeister::perturb(*e.diagram, rng, 1 + i * 2));
            EXPECT_EQ(v2_unchecked(p), v2_unchecked(g)) << e.name;
            EXPECT_EQ(v3_unchecked(p), v3_unchecked(g)) << e.name;
        }
    }
}

TEST(GaussSums, MirrorBehavior) {
    for (auto& e : fixtures()) {
        auto g = to_gauss(*e.diagram);
        EXPECT_EQ(v3_unchecked(g.mirrored()), -v3_unchecked(g)) << e.name;
        EXPECT_EQ(v2_unchecked(g.mirrored()), v2_unchecked(g)) << e.name;
        EXPECT_EQ(v3_unchecked(to_gauss(mirror(*e.diagram))), -v3_unchecked(g)) << e.name;
    }
}

TEST(GaussSums, PolynomialIdentities) {
    for (auto& e : fixtures()) {
        if (e.diagram->crossing_count() > 10) continue;
        auto g = to_gauss(*e.diagram);
        auto V = jones(*e.diagram);
        auto [j2, j3] = vassiliev_from_jones(V);
        EXPECT_EQ(v2_unchecked(g), j2) << e.name;
        EXPECT_EQ(v3_unchecked(g), j3) << e.name;
        auto delta = alexander(conway(*e.diagram));
        EXPECT_EQ(Rat(delta.derivative_at_one(2)) / 2, Rat(j2)) << e.name;
        EXPECT_EQ(conway(*e.diagram).coef(2), j2) << e.name;
    }
}

TEST(GaussSums, AdditiveUnderConnectedSum) {
    const char* names[] = {"!3_1", "4_1", "!5_2", "6_2", "3_1"};
    for (auto a : names)
        for (auto b : names) {
            auto s = to_gauss(connected_sum(knot(a), knot(b)));
            EXPECT_EQ(v3_unchecked(s), v3_unchecked(to_gauss(knot(a))) + v3_unchecked(to_gauss(knot(b))));
            EXPECT_EQ(v2_unchecked(s), v2_unchecked(to_gauss(knot(a))) + v2_unchecked(to_gauss(knot(b))));
        }
}

TEST(GaussSums, SwitchingLowersOnReducedPositive) {
    std::mt19937_64 rng(23);
    for (auto& item : generate_positive_corpus(3, 60, 3, 12)) {
        auto g = to_gauss(item.diagram);
        strip_isolated(g);
        if (g.arrow_count() == 0) continue;
        Int v3 = v3_unchecked(g);
        for (int trial = 0; trial < 4; ++trial) {
            GaussDiagram h = g;
            int switched = 0;
            for (auto& a : h.arrows)
                if (rng() % 3 == 0) {
                    std::swap(a.tail, a.head);
                    a.sign = -a.sign;
                    ++switched;
                }
            if (switched == 0) continue;
            EXPECT_LT(v3_unchecked(h), v3) << item.construction;
        }
    }
}

TEST(GaussSums, BoundsOnPositiveDiagrams) {
    for (auto& item : generate_positive_corpus(4, 80, 3, 14)) {
        auto g = to_gauss(item.diagram);
        strip_isolated(g);
        int c = g.arrow_count();
        Int v2 = v2_unchecked(g), v3 = v3_unchecked(g);
        EXPECT_GE(v3, c) << item.construction;
        EXPECT_GE(4 * v2, c) << item.construction;
        EXPECT_GE(3 * v3, 8 * v2) << item.construction;
        EXPECT_LE(3 * v3, 4 * v2 * c) << item.construction;
        auto b = reduce_diagram(g).result;
        int cb = b.arrow_count();
        if (cb == 0) continue;
        if (!is_composite(b))
            EXPECT_GE(v3, 4 * ((cb - 1) / 2)) << item.construction;
        else
            EXPECT_GE(3 * v3, 4 * cb) << item.construction;
    }
}
