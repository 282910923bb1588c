#include "fixtures.hpp"

using namespace knotpos;
using namespace knotpos::testing;

namespace {

Overall verdict(const std::string& name) {
    return braid_positivity_obstructions(compute_invariants(knot(name))).overall;
}

}  // namespace

TEST(Obstructions, NotPositive) {
    for (auto name : {"4_1", "6_3", "6_2", "!10_2"}) EXPECT_EQ(verdict(name), Overall::NotPositive) << name;
}

TEST(Obstructions, NotBraidPositive) {
    for (auto name : {"!5_2", "!7_2", "7_4", "7_3", "!7_5"}) EXPECT_EQ(verdict(name), Overall::NotBraidPositive) << name;
    auto r = braid_positivity_obstructions(compute_invariants(knot("7_3")));
    EXPECT_EQ(r.find("monic-alexander")->verdict, Verdict::Violated);
    auto q = braid_positivity_obstructions(compute_invariants(knot("!5_2")));
    EXPECT_EQ(q.find("mindeg-quarter-crossings")->verdict, Verdict::Violated);
}

TEST(Obstructions, ConsistentOnPositiveBraids) {
    EXPECT_EQ(verdict("!3_1"), Overall::Consistent);
    EXPECT_EQ(verdict("5_1") == Overall::Consistent, jones(knot("5_1")).min_deg() > 0);
    for (auto& item : generate_positive_corpus(9, 40, 3, 12, "braid"))
        EXPECT_EQ(braid_positivity_obstructions(compute_invariants(item.diagram)).overall, Overall::Consistent)
            << item.construction;
}

TEST(Obstructions, UnknotIsInapplicable) {
    auto r = positivity_obstructions(compute_invariants(PlanarDiagram{{}, 1}));
    EXPECT_EQ(r.overall, Overall::Consistent);
    for (auto& e : r.entries) EXPECT_NE(e.verdict, Verdict::Violated);
}

// Adding data can only keep or strengthen the verdict.
TEST(Obstructions, MoreDataNeverWeakens) {
    for (auto& e : fixtures()) {
        if (e.diagram->crossing_count() > 10) continue;
        auto full = compute_invariants(*e.diagram);
        auto lean = full;
        lean.has_homfly = false;
        lean.homfly = Laurent2();
        lean.signature.reset();
        auto a = positivity_obstructions(lean), b = positivity_obstructions(full);
        if (a.overall == Overall::NotPositive) EXPECT_EQ(b.overall, Overall::NotPositive) << e.name;
        for (auto& x : a.entries)
            if (x.verdict == Verdict::Violated) EXPECT_EQ(b.find(x.name)->verdict, Verdict::Violated) << e.name;
    }
}

TEST(Decide, TrefoilAndFigureEight) {
    auto yes = decide_braid_positive(knot("!3_1"));
    EXPECT_EQ(yes.answer, BraidDecision::Answer::Yes);
    ASSERT_TRUE(yes.witness.has_value());
    EXPECT_EQ(yes.witness->strands, 2);
    EXPECT_EQ(yes.witness->letters, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(decide_braid_positive(knot("4_1")).answer, BraidDecision::Answer::No);
    EXPECT_EQ(decide_braid_positive(knot("7_4")).answer, BraidDecision::Answer::No);
}

TEST(Decide, BudgetOverflowIsUnknown) {
    auto r = decide_braid_positive(closure(3, {1, 2, 1, 2, 1, 2, 1, 2}), 1);
    EXPECT_EQ(r.answer, BraidDecision::Answer::Unknown);
}

TEST(Corpus, Deterministic) {
    auto a = generate_positive_corpus(11, 30), b = generate_positive_corpus(11, 30);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].construction, b[i].construction);
        EXPECT_EQ(serialize(a[i].diagram), serialize(b[i].diagram));
    }
}

TEST(Corpus, AllPositiveKnotsInRange) {
    for (auto& item : generate_positive_corpus(12, 100, 3, 16)) {
        EXPECT_TRUE(to_gauss(item.diagram).positive()) << item.construction;
        EXPECT_EQ(component_count(item.diagram), 1) << item.construction;
        EXPECT_LE(item.diagram.crossing_count(), 16) << item.construction;
        EXPECT_GE(item.diagram.crossing_count(), 3) << item.construction;
    }
}

TEST(Corpus, TorusFamily) {
    auto c = generate_positive_corpus(1, 1, 7, 7, "torus");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].diagram.crossing_count(), 7);
    EXPECT_EQ(jones(c[0].diagram), jones(closure(2, std::vector<int>(7, 1))));
}
