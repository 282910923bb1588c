#pragma once
// Gauss diagram reductions, loop moves and Whitehead doubles.

#include "knotpos/surfaces.hpp"
#include "knotpos/vassiliev.hpp"

namespace knotpos {

struct MoveRecord {
    enum class Kind { RemoveIsolated, SecondMove, Loop };
    Kind kind = Kind::RemoveIsolated;
    int arrow = -1;           // chosen arrow p of a loop move, or arrow a of a second move
    int loop_size = 0;        // k
    int switched = 0;         // k/2
    int reducible_removed = 0;  // c, p included
    int crossings_before = 0, crossings_after = 0;
    Int v2_before = 0, v2_after = 0;
    bool unknots_component = false;
};

struct MoveTrace {
    std::vector<MoveRecord> moves;
    int total_switches = 0;
};

inline const char* kind_name(MoveRecord::Kind k) {
    switch (k) {
        case MoveRecord::Kind::RemoveIsolated: return "remove-isolated";
        case MoveRecord::Kind::SecondMove: return "second-move";
        case MoveRecord::Kind::Loop: return "loop";
    }
    return "?";
}

// Deletes isolated chords until none is left; returns how many went.
inline int strip_isolated(GaussDiagram& g) {
    int removed = 0;
    while (true) {
        auto r = reducible_arrows(g);
        if (r.empty()) return removed;
        removed += static_cast<int>(r.size());
        g = remove_arrows(g, r);
    }
}

struct Reduction {
    GaussDiagram result;
    MoveTrace trace;
};

// Deletes isolated chords and, on positive diagrams, applies second moves
// until the diagram is bireduced.
inline Reduction reduce_diagram(const GaussDiagram& g) {
    Reduction r{g, {}};
    const Int v2 = v2_unchecked(g), v3 = v3_unchecked(g);
    auto log = [&](MoveRecord::Kind k, int arrow, int before) {
        MoveRecord m;
        m.kind = k;
        m.arrow = arrow;
        m.crossings_before = before;
        m.crossings_after = r.result.arrow_count();
        m.v2_before = m.v2_after = v2;
        r.trace.moves.push_back(m);
    };
    while (true) {
        int before = r.result.arrow_count();
        if (strip_isolated(r.result) > 0) log(MoveRecord::Kind::RemoveIsolated, -1, before);
        if (!r.result.positive()) break;
        auto pats = second_move_patterns(r.result);
        if (pats.empty()) break;
        before = r.result.arrow_count();
        r.result = apply_second_move(r.result, pats.front());
        log(MoveRecord::Kind::SecondMove, pats.front().a, before);
    }
    if (!is_realizable(r.result)) throw std::logic_error("reduction left a non-realizable diagram");
    if (v2_unchecked(r.result) != v2 || v3_unchecked(r.result) != v3)
        throw std::logic_error("reduction changed v2 or v3");
    return r;
}

// ---------------------------------------------------------------- loop move

// Arrows linked with p.
inline std::set<int> linked_with(const GaussDiagram& g, int p) {
    std::set<int> s;
    for (int q = 0; q < g.arrow_count(); ++q)
        if (q != p && g.linked(p, q)) s.insert(q);
    return s;
}

// One side of chord p holds no complete chord.
inline bool loop_condition(const GaussDiagram& g, int p) {
    int lo = std::min(g.arrows[p].tail, g.arrows[p].head);
    int hi = std::max(g.arrows[p].tail, g.arrows[p].head);
    bool inner_free = true, outer_free = true;
    for (int q = 0; q < g.arrow_count(); ++q) {
        if (q == p || g.linked(p, q)) continue;
        bool in = lo < g.arrows[q].tail && g.arrows[q].tail < hi;
        (in ? inner_free : outer_free) = false;
    }
    return inner_free || outer_free;
}

// Connected components of the intersection graph, as arrow sets.
inline std::vector<std::set<int>> intersection_components(const GaussDiagram& g) {
    auto G = intersection_graph(g);
    std::vector<int> comp(G.n, -1);
    std::vector<std::set<int>> out;
    for (int s = 0; s < G.n; ++s) {
        if (comp[s] >= 0) continue;
        std::set<int> c;
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.insert(v);
            for (int u = 0; u < G.n; ++u)
                if (G.edge(v, u) && comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        out.push_back(std::move(c));
    }
    return out;
}

struct LoopMoveResult {
    GaussDiagram result;
    MoveRecord record;
};

inline LoopMoveResult loop_move(const GaussDiagram& g, int p) {
    if (p < 0 || p >= g.arrow_count()) throw SemanticError("loop move arrow out of range");
    if (!g.positive()) throw SemanticError("loop move needs a positive diagram");
    if (!loop_condition(g, p)) throw SemanticError("arrow " + std::to_string(p) + " does not bound a loop");
    auto gone = linked_with(g, p);
    int k = static_cast<int>(gone.size());
    if (k == 0) throw SemanticError("loop move on an isolated arrow");
    if (k % 2 != 0) throw std::logic_error("odd loop size on a realizable diagram");

    LoopMoveResult r;
    auto& m = r.record;
    m.kind = MoveRecord::Kind::Loop;
    m.arrow = p;
    m.loop_size = k;
    m.switched = k / 2;
    m.crossings_before = g.arrow_count();
    m.v2_before = v2_unchecked(g);
    // the move unknots a prime piece when p's intersection component vanishes
    std::set<int> piece;
    for (auto& c : intersection_components(g))
        if (c.count(p)) piece = c;

    // orig[i]: id in g of arrow i of h
    std::vector<int> orig;
    for (int i = 0; i < g.arrow_count(); ++i)
        if (!gone.count(i)) orig.push_back(i);
    GaussDiagram h = remove_arrows(g, gone);
    while (true) {
        auto red = reducible_arrows(h);
        if (red.empty()) break;
        std::vector<int> next;
        for (int i = 0; i < h.arrow_count(); ++i)
            if (!red.count(i)) next.push_back(orig[i]);
        orig = next;
        h = remove_arrows(h, red);
    }
    r.result = h;
    m.crossings_after = h.arrow_count();
    m.reducible_removed = m.crossings_before - m.crossings_after - k;
    m.v2_after = v2_unchecked(h);
    m.unknots_component = std::none_of(orig.begin(), orig.end(), [&](int a) { return piece.count(a) > 0; });
    if (!is_realizable(h)) throw std::logic_error("loop move left a non-realizable diagram");
    // v2 drop >= floor(k/4 + c/2)
    Rat need = floor_div(Rat(k, 4) + Rat(m.reducible_removed, 2));
    if (Rat(m.v2_before - m.v2_after) < need) throw std::logic_error("loop move v2 drop below k/4 + c/2");
    return r;
}

// Ledger check on one loop move: 5 (v2 drop) >= crossing drop + switches.
inline bool loop_ledger_holds(const MoveRecord& m) {
    return 5 * (m.v2_before - m.v2_after) >= Int(m.crossings_before - m.crossings_after + m.switched);
}

struct Trivialization {
    MoveTrace trace;
    int total_switches = 0;
    int reduced_crossings = 0;  // c(D) after removing nugatory crossings
    Int v2 = 0;
    int canonical_genus = 0;
};

// Applies loop moves until the diagram is empty. Among the arrows that bound
// a loop, the smallest id with the largest loop is taken.
inline Trivialization trivialize_by_loops(const GaussDiagram& g) {
    if (!g.positive()) throw SemanticError("loop trivialization needs a positive diagram");
    Trivialization t;
    t.v2 = v2_unchecked(g);
    t.canonical_genus = g.arrow_count() ? seifert_decomposition(to_pd(g)).canonical_genus : 0;
    GaussDiagram h = g;
    int before = h.arrow_count();
    if (strip_isolated(h) > 0) {
        MoveRecord m;
        m.kind = MoveRecord::Kind::RemoveIsolated;
        m.crossings_before = before;
        m.crossings_after = h.arrow_count();
        m.v2_before = m.v2_after = t.v2;
        t.trace.moves.push_back(m);
    }
    t.reduced_crossings = h.arrow_count();
    while (h.arrow_count() > 0) {
        int best = -1, best_k = -1;
        for (int p = 0; p < h.arrow_count(); ++p) {
            if (!loop_condition(h, p)) continue;
            int k = static_cast<int>(linked_with(h, p).size());
            if (k > best_k) {
                best = p;
                best_k = k;
            }
        }
        if (best < 0) throw std::logic_error("no loop arrow in a nonempty reduced diagram");
        auto r = loop_move(h, best);
        t.trace.moves.push_back(r.record);
        t.total_switches += r.record.switched;
        h = r.result;
    }
    t.trace.total_switches = t.total_switches;
    if (5 * t.v2 < Int(t.reduced_crossings + t.total_switches))
        throw std::logic_error("5 v2 < c + switches after loop trivialization");
    if (t.total_switches < t.canonical_genus) throw std::logic_error("loop unknotting shorter than the canonical genus");
    return t;
}

// ---------------------------------------------------------- Whitehead double

namespace detail {

// Slots of a crossing drawn with its strands running up the page:
// 0 SW, 1 SE, 2 NE, 3 NW.
struct Pair {
    int east, west;  // current open ends, looking up the page
};

inline Pair twist(Wiring& w, Pair p, bool over13) {
    int x = w.add_crossing(over13);
    w.link(p.east, x + 1);
    w.link(p.west, x + 0);
    return {x + 2, x + 3};
}

inline PlanarDiagram build_double(const PlanarDiagram& d, int twists, bool twist_over13, bool clasp_over13,
                                  std::vector<int>& twist_ids, std::vector<int>& clasp_ids) {
    Wiring w;
    // per original slot: (right, left) ends looking out of the crossing
    std::vector<std::array<std::pair<int, int>, 4>> ends(d.crossing_count());
    for (int x = 0; x < d.crossing_count(); ++x) {
        // grid with the under strand pair vertical (S to N) and the over pair
        // horizontal; local slots 0 S, 1 E, 2 N, 3 W
        int c11 = w.add_crossing(true), c21 = w.add_crossing(true);
        int c12 = w.add_crossing(true), c22 = w.add_crossing(true);
        w.link(c11 + 2, c12 + 0);
        w.link(c21 + 2, c22 + 0);
        w.link(c21 + 3, c11 + 1);
        w.link(c22 + 3, c12 + 1);
        ends[x][0] = {c11 + 0, c21 + 0};
        ends[x][1] = {c21 + 1, c22 + 1};
        ends[x][2] = {c22 + 2, c12 + 2};
        ends[x][3] = {c12 + 3, c11 + 3};
    }
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int x = 0; x < d.crossing_count(); ++x)
        for (int s = 0; s < 4; ++s) occ[d.crossings[x].arc[s]].push_back({x, s});
    int special = d.crossings[0].arc[2];
    int first_id = 4 * d.crossing_count();
    for (auto& [a, v] : occ) {
        auto [x, s] = v[0];
        auto [y, t] = v[1];
        if (a != special) {
            w.link(ends[x][s].first, ends[y][t].second);
            w.link(ends[x][s].second, ends[y][t].first);
            continue;
        }
        // twists, then the clasp, on the way from (x, s) to (y, t)
        Pair p{ends[x][s].first, ends[x][s].second};
        for (int i = 0; i < twists; ++i) p = twist(w, p, twist_over13);
        int L = w.add_crossing(clasp_over13), R = w.add_crossing(clasp_over13);
        // cap from the west end over to the east end; cup between the far ends
        w.link(p.west, L + 0);
        w.link(L + 2, R + 3);
        w.link(R + 1, p.east);
        w.link(ends[y][t].first, L + 3);
        w.link(L + 1, R + 0);
        w.link(R + 2, ends[y][t].second);
    }
    auto L = w.to_link_code();
    // wiring crossing ids follow creation order
    twist_ids.clear();
    clasp_ids.clear();
    for (int i = 0; i < twists; ++i) twist_ids.push_back(first_id + i);
    clasp_ids = {first_id + twists, first_id + twists + 1};
    if (L.component_count() != 1) throw std::logic_error("Whitehead double is not a knot");
    return to_pd(L);
}

}  // namespace detail

// Untwisted Whitehead double w_+ or w_-: each crossing becomes four, and
// 2|w| twist crossings cancel the blackboard framing. The clasp sign is
// read with the two strands of the double oriented in parallel, so the
// clasp crossings of w_+ are negative in the orientation of the knot.
inline PlanarDiagram whitehead_double(const PlanarDiagram& d, int clasp_sign) {
    if (clasp_sign != 1 && clasp_sign != -1) throw SemanticError("clasp sign must be +1 or -1");
    if (d.crossing_count() == 0) {
        if (d.free_loops != 1) throw SemanticError("Whitehead double needs a knot diagram");
        return PlanarDiagram{{}, 1};
    }
    if (component_count(d) != 1) throw SemanticError("Whitehead double needs a knot diagram");
    int w = d.writhe();
    int twists = 2 * std::abs(w);
    int want_twist = w > 0 ? 1 : -1;
    std::vector<int> tw, cl;
    for (bool t13 : {false, true})
        for (bool c13 : {false, true}) {
            auto r = detail::build_double(d, twists, t13, c13, tw, cl);
            bool ok = r.crossings[cl[0]].sign == -clasp_sign && r.crossings[cl[1]].sign == -clasp_sign;
            for (int x : tw) ok = ok && r.crossings[x].sign == want_twist;
            if (!ok) continue;
            if (!is_planar(r)) throw std::logic_error("Whitehead double is not planar");
            // genus one surface: v2 = 0 is equivalent to a trivial Alexander polynomial
            if (v2_unchecked(to_gauss(r)) != 0) continue;
            return r;
        }
    throw std::logic_error("no untwisted Whitehead double found");
}

}  // namespace knotpos
