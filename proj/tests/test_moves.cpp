#include "fixtures.hpp"

using namespace knotpos;
using namespace knotpos::testing;

TEST(Reduce, Examples) {
    EXPECT_EQ(reduce_diagram(to_gauss(closure(2, {1}))).result.arrow_count(), 0);
    auto four = reduce_diagram(to_gauss(closure(3, {1, 2, 1, 2})));
    EXPECT_EQ(four.result.arrow_count(), 3);
    EXPECT_FALSE(four.trace.moves.empty());
    auto std3 = to_gauss(closure(2, {1, 1, 1}));
    auto r = reduce_diagram(std3);
    EXPECT_EQ(r.result.arrow_count(), 3);
    EXPECT_TRUE(r.trace.moves.empty());
}

TEST(Reduce, KeepsInvariants) {
    for (auto& item : generate_positive_corpus(6, 80, 3, 14)) {
        auto g = to_gauss(item.diagram);
        auto r = reduce_diagram(g).result;
        EXPECT_EQ(v2_unchecked(r), v2_unchecked(g)) << item.construction;
        EXPECT_EQ(v3_unchecked(r), v3_unchecked(g)) << item.construction;
        EXPECT_TRUE(reduction_status(r).bireduced) << item.construction;
        EXPECT_TRUE(is_realizable(r)) << item.construction;
    }
}

TEST(LoopMove, Trefoil) {
    auto g = to_gauss(closure(2, {1, 1, 1}));
    for (int p = 0; p < 3; ++p) {
        auto r = loop_move(g, p);
        EXPECT_EQ(r.record.loop_size, 2);
        EXPECT_EQ(r.record.switched, 1);
        EXPECT_EQ(r.result.arrow_count(), 0);
    }
}

TEST(LoopMove, TorusFive) {
    auto g = to_gauss(closure(2, {1, 1, 1, 1, 1}));
    auto r = loop_move(g, 0);
    EXPECT_EQ(r.record.loop_size, 4);
    EXPECT_EQ(r.record.switched, 2);
    EXPECT_EQ(v2_unchecked(g) - v2_unchecked(r.result), r.record.v2_before - r.record.v2_after);
    EXPECT_GE(r.record.v2_before - r.record.v2_after, Int((4 + 2 * r.record.reducible_removed) / 4));
}

TEST(LoopMove, RejectsViolatedCondition) {
    // 5_2 as a positive diagram has arrows that bound no loop
    bool rejected = false;
    for (auto& item : generate_positive_corpus(7, 40, 6, 12)) {
        auto g = to_gauss(item.diagram);
        strip_isolated(g);
        for (int p = 0; p < g.arrow_count(); ++p)
            if (!loop_condition(g, p)) {
                EXPECT_THROW(loop_move(g, p), SemanticError);
                rejected = true;
            }
    }
    EXPECT_TRUE(rejected);
    auto kink = to_gauss(closure(2, {1}));
    EXPECT_THROW(loop_move(kink, 0), SemanticError);
}

TEST(Trivialize, Examples) {
    EXPECT_EQ(trivialize_by_loops(to_gauss(closure(2, {1, 1, 1}))).total_switches, 1);
    auto t51 = trivialize_by_loops(to_gauss(closure(2, {1, 1, 1, 1, 1})));
    EXPECT_EQ(t51.total_switches, 2);
    EXPECT_EQ(t51.canonical_genus, 2);
    EXPECT_EQ(trivialize_by_loops(GaussDiagram{}).total_switches, 0);
    EXPECT_THROW(trivialize_by_loops(to_gauss(knot("4_1"))), SemanticError);
}

TEST(Trivialize, LedgerOnCorpus) {
    for (auto& item : generate_positive_corpus(8, 120, 3, 14)) {
        auto t = trivialize_by_loops(to_gauss(item.diagram));
        EXPECT_GE(5 * t.v2, Int(t.reduced_crossings + t.total_switches)) << item.construction;
        EXPECT_GE(t.total_switches, t.canonical_genus) << item.construction;
        int sum = 0;
        for (auto& m : t.trace.moves) {
            sum += m.switched;
            if (m.kind != MoveRecord::Kind::Loop) continue;
            EXPECT_EQ(m.loop_size % 2, 0) << item.construction;
            EXPECT_GT(m.loop_size, 0) << item.construction;
            if (!m.unknots_component) EXPECT_TRUE(loop_ledger_holds(m)) << item.construction;
        }
        EXPECT_EQ(sum, t.total_switches) << item.construction;
    }
}

TEST(Whitehead, Unknot) {
    auto u = whitehead_double(PlanarDiagram{{}, 1}, 1);
    EXPECT_EQ(u.crossing_count(), 0);
    EXPECT_THROW(whitehead_double(knot("3_1"), 0), SemanticError);
}

TEST(Whitehead, Proposition) {
    for (auto& e : fixtures()) {
        const auto& d = *e.diagram;
        if (d.crossing_count() > 6) continue;
        Int v2 = v2_unchecked(to_gauss(d));
        for (int sign : {1, -1}) {
            auto w = whitehead_double(d, sign);
            EXPECT_EQ(w.crossing_count(), 4 * d.crossing_count() + 2 * std::abs(d.writhe()) + 2) << e.name;
            auto g = to_gauss(w);
            EXPECT_EQ(v2_unchecked(g), 0) << e.name;
            EXPECT_EQ(v3_unchecked(g), 8 * sign * v2) << e.name;
        }
    }
    auto w = whitehead_double(knot("!3_1"), 1);
    EXPECT_EQ(v3_unchecked(to_gauss(w)), 8);
    auto V = jones(w);
    EXPECT_NE(V, conjugate(V));
}
