#include "fixtures.hpp"

using namespace knotpos;
using namespace knotpos::testing;

TEST(Seifert, Examples) {
    auto t = seifert_decomposition(closure(2, {1, 1, 1}));
    EXPECT_EQ(t.circles, 2);
    EXPECT_EQ(t.writhe, 3);
    EXPECT_EQ(t.canonical_genus, 1);
    for (int m = 3; m <= 11; m += 2)
        EXPECT_EQ(seifert_decomposition(closure(2, std::vector<int>(m, 1))).canonical_genus, (m - 1) / 2);
    auto k = seifert_decomposition(closure(1, {}));
    EXPECT_EQ(k.canonical_genus, 0);
    auto kink = seifert_decomposition(closure(2, {1}));
    EXPECT_EQ(kink.circles, 2);
    EXPECT_EQ(kink.canonical_genus, 0);
}

TEST(Bennequin, Examples) {
    auto kink = bennequin_check(closure(2, {1}), 0);
    EXPECT_EQ(kink.lhs, 2);
    EXPECT_EQ(kink.rhs, 2);
    EXPECT_TRUE(kink.holds);
    // a 4-braid of writhe 7: 7 + 1 <= 4 + 2u needs u >= 2
    auto b = closure(4, {1, 1, 2, 1, 1, 3, -2, 2, 3, -2, 3});
    ASSERT_EQ(seifert_decomposition(b).writhe, 7);
    EXPECT_FALSE(bennequin_check(b, 1).holds);
    EXPECT_TRUE(bennequin_check(b, 2).holds);
}

TEST(Bennequin, SharpOnPositiveDiagrams) {
    for (auto& item : generate_positive_corpus(5, 60, 3, 14)) {
        auto s = seifert_decomposition(item.diagram);
        auto b = bennequin_check(item.diagram, s.canonical_genus);
        EXPECT_EQ(b.lhs, b.rhs) << item.construction;
        auto delta = seifert_signature(item.diagram).alexander;
        EXPECT_EQ(delta.max_deg(), s.canonical_genus) << item.construction;
    }
}

TEST(Vogel, AlreadyBraided) {
    auto b = BraidWord{3, {1, 2, 1, 2}};
    auto r = vogel_braiding(braid_closure(b));
    EXPECT_EQ(r.moves, 0);
    EXPECT_EQ(r.braid.strands, 3);
    EXPECT_EQ(r.braid.exponent_sum(), b.exponent_sum());
    EXPECT_EQ(jones(braid_closure(r.braid)), jones(braid_closure(b)));
}

TEST(Vogel, FixturesKeepWritheCirclesAndJones) {
    for (auto& e : fixtures()) {
        if (e.diagram->crossing_count() > 8) continue;
        const auto& d = *e.diagram;
        auto s = seifert_decomposition(d);
        auto r = vogel_braiding(d);
        EXPECT_EQ(r.braid.strands, s.circles) << e.name;
        EXPECT_EQ(r.braid.exponent_sum(), s.writhe) << e.name;
        EXPECT_EQ(jones(braid_closure(r.braid)), jones(d)) << e.name;
        EXPECT_TRUE(detail::read_braided(r.diagram).has_value()) << e.name;
    }
    auto fig8 = vogel_braiding(knot("4_1")).braid;
    EXPECT_EQ(fig8.strands, 3);
    EXPECT_EQ(fig8.exponent_sum(), 0);
}

TEST(Markov, Examples) {
    EXPECT_EQ(markov_reduce_positive(BraidWord{4, {1, 2, 3}}).letters.size(), 0u);
    EXPECT_EQ(markov_reduce_positive(BraidWord{4, {1, 2, 3}}).strands, 1);
    auto a = markov_reduce_positive(BraidWord{3, {1, 1, 2}});
    EXPECT_EQ(a.strands, 2);
    EXPECT_EQ(a.letters, (std::vector<int>{1, 1}));
    auto b = markov_reduce_positive(BraidWord{2, {1, 1, 1}});
    EXPECT_EQ(b.strands, 2);
    EXPECT_EQ(b.letters, (std::vector<int>{1, 1, 1}));
    EXPECT_THROW(markov_reduce_positive(BraidWord{2, {1, -1}}), SemanticError);
}

TEST(Markov, KeepsJonesAndLeavesRepeatedGenerators) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        BraidWord b{n, {}};
        int len = n - 1 + static_cast<int>(rng() % 8);
        for (int j = 0; j < len; ++j) b.letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
        if (b.closure_components() != 1) continue;
        auto r = markov_reduce_positive(b);
        EXPECT_EQ(jones(braid_closure(r)), jones(braid_closure(b))) << serialize(b);
        std::map<int, int> count;
        for (int l : r.letters) ++count[l];
        for (auto [g, k] : count) EXPECT_GE(k, 2) << serialize(b);
    }
}

TEST(BraidBounds, Examples) {
    auto t = braid_bounds(BraidWord{2, {1, 1, 1}});
    EXPECT_EQ(t.min_deg_v, Rat(1));
    EXPECT_EQ(t.v2_bound, Rat(1));
    auto f = braid_bounds(BraidWord{2, {1, 1, 1, 1, 1}});
    EXPECT_EQ(f.min_deg_v, Rat(2));
    EXPECT_EQ(f.fiedler, Rat(5, 4));
}

TEST(BraidBounds, HoldOnRandomPositiveBraids) {
    std::mt19937_64 rng(37);
    int done = 0;
    while (done < 40) {
        int n = 2 + static_cast<int>(rng() % 3);
        BraidWord b{n, {}};
        int len = n + static_cast<int>(rng() % 9);
        for (int j = 0; j < len; ++j) b.letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
        if (b.closure_components() != 1) continue;
        ++done;
        auto V = jones(braid_closure(b));
        auto bb = braid_bounds(b);
        EXPECT_EQ(Rat(V.min_deg()), bb.min_deg_v) << serialize(b);
        EXPECT_EQ(V.coef(V.min_deg()), 1) << serialize(b);
        EXPECT_GE(Rat(v2_unchecked(to_gauss(braid_closure(b)))), bb.v2_bound) << serialize(b);
    }
}

TEST(SeifertMatrix, SignatureAndAlexander) {
    auto s = seifert_signature(BraidWord{2, {1, 1, 1}});
    EXPECT_EQ(s.signature, 2);
    EXPECT_EQ(s.alexander, poly({{-1, 1}, {0, -1}, {1, 1}}));
    EXPECT_EQ(seifert_signature(BraidWord{2, {1, 1, 1, 1, 1}}).signature, 4);
    EXPECT_EQ(seifert_signature(BraidWord{3, {1, -2, 1, -2}}).signature, 0);
}
