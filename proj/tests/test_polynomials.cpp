#include "fixtures.hpp"

using namespace knotpos;
using namespace knotpos::testing;

TEST(Jones, Anchors) {
    EXPECT_EQ(jones(PlanarDiagram{{}, 1}), Laurent(1));
    EXPECT_EQ(jones(knot("!3_1")), poly({{1, 1}, {3, 1}, {4, -1}}));
    EXPECT_EQ(jones(knot("!5_2")).min_deg(), 1);
    auto V = jones(closure(2, {1, 1, 1}));
    EXPECT_EQ(V.min_deg(), 1);
    EXPECT_EQ(V.coef(1), 1);
}

TEST(Jones, MirrorAndSpan) {
    for (auto& e : fixtures()) {
        auto V = jones(*e.diagram);
        EXPECT_EQ(jones(mirror(*e.diagram)), conjugate(V)) << e.name;
        EXPECT_LE(V.max_deg() - V.min_deg(), e.diagram->crossing_count()) << e.name;
    }
}

TEST(Homfly, SpecializesToJonesAndConway) {
    for (auto& e : fixtures()) {
        if (e.diagram->crossing_count() > 14) continue;
        auto P = homfly(*e.diagram);
        EXPECT_EQ(halves_to_integral(jones_from_homfly(P)), jones(*e.diagram)) << e.name;
        EXPECT_EQ(conway_from_homfly(P), conway(*e.diagram)) << e.name;
    }
    EXPECT_EQ(homfly(PlanarDiagram{{}, 1}), Laurent2(1));
}

TEST(Homfly, TrefoilConvention) {
    // -2l^2 - l^4 + l^2 m^2, positive l-degrees for the positive trefoil
    auto P = homfly(knot("!3_1"));
    Laurent2 want;
    want.add_term(2, 0, -2);
    want.add_term(4, 0, -1);
    want.add_term(2, 2, 1);
    EXPECT_EQ(P, want) << P.str();
    EXPECT_EQ(P.min_deg_l(), P.max_deg_m());
}

// l^-1 P(L+) + l P(L-) + m P(L0) = 0
TEST(Homfly, SkeinRelationAtRandomCrossings) {
    std::mt19937_64 rng(29);
    for (auto& e : fixtures()) {
        if (e.diagram->crossing_count() > 8) continue;
        auto L = to_link_code(*e.diagram);
        int x = static_cast<int>(rng() % L.crossing_count());
        auto same = homfly(L), other = homfly(detail::switch_crossing(L, x)), zero = homfly(detail::smooth(L, x));
        const auto& plus = L.sign[x] > 0 ? same : other;
        const auto& minus = L.sign[x] > 0 ? other : same;
        auto sum = Laurent2::mono(-1, 0) * plus + Laurent2::mono(1, 0) * minus + Laurent2::mono(0, 1) * zero;
        EXPECT_TRUE(sum.is_zero()) << e.name << " crossing " << x;
    }
}

TEST(Conway, Examples) {
    EXPECT_EQ(conway(PlanarDiagram{{}, 1}), Laurent(1));
    EXPECT_EQ(conway(knot("!3_1")), poly({{0, 1}, {2, 1}}));
    auto n63 = conway(knot("6_3"));
    EXPECT_EQ(n63, poly({{0, 1}, {2, 1}, {4, 1}}));
    auto k = compute_invariants(knot("6_3"));
    auto r = positivity_obstructions(k);
    EXPECT_EQ(r.find("conway-positive")->verdict, Verdict::Passes);
    EXPECT_EQ(r.overall, Overall::NotPositive);
}

TEST(Derived, FromJones) {
    auto d0 = poly_derived_invariants(Laurent(1), Laurent2(1));
    EXPECT_EQ(d0.v2, 0);
    EXPECT_EQ(d0.v3, 0);
    auto t = poly_derived_invariants(jones(knot("!3_1")), homfly(knot("!3_1")));
    EXPECT_EQ(t.v3, 4);
    EXPECT_EQ(t.min_deg_v, 1);
    EXPECT_EQ(t.span_v, 3);
    EXPECT_EQ(t.max_deg_m_p, 2);
    EXPECT_EQ(poly_derived_invariants(jones(knot("!5_2")), Laurent2()).v2, 2);
}

TEST(Signature, Examples) {
    EXPECT_EQ(seifert_signature(PlanarDiagram{{}, 1}).signature, 0);
    EXPECT_EQ(seifert_signature(knot("!3_1")).signature, 2);
    EXPECT_EQ(seifert_signature(knot("3_1")).signature, -2);
    EXPECT_EQ(seifert_signature(knot("4_1")).signature, 0);
}

TEST(Signature, AlexanderFromMatrixMatchesSkein) {
    for (auto& e : fixtures()) {
        if (e.diagram->crossing_count() > 8) continue;
        auto s = seifert_signature(*e.diagram);
        EXPECT_EQ(s.alexander, alexander(conway(*e.diagram))) << e.name;
        EXPECT_EQ(seifert_signature(mirror(*e.diagram), false).signature, -s.signature) << e.name;
    }
}

TEST(MortonCromwell, TrefoilSamplesNonnegative) {
    auto P = homfly(knot("!3_1"));
    for (auto t : {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)})
        for (auto& [b, cf] : morton_cromwell_sample(P, t)) EXPECT_GE(cf, 0);
}
