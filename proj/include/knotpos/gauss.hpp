#pragma once
// Gauss diagrams: arrows from under- to over-passage, intersection graph and
// the structural tests on it.

#include "knotpos/diagram.hpp"

namespace knotpos {

struct Arrow {
    int tail;  // position of the under passage
    int head;  // position of the over passage
    int sign;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct GaussDiagram {
    std::vector<Arrow> arrows;

    int arrow_count() const { return static_cast<int>(arrows.size()); }
    int point_count() const { return 2 * arrow_count(); }
    int writhe() const {
        int w = 0;
        for (auto& a : arrows) w += a.sign;
        return w;
    }
    bool positive() const {
        return std::all_of(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.sign > 0; });
    }
    // at(pos) = (arrow id, is head)
    std::vector<std::pair<int, bool>> endpoints() const {
        std::vector<std::pair<int, bool>> e(point_count(), {-1, false});
        for (int i = 0; i < arrow_count(); ++i) {
            e.at(arrows[i].tail) = {i, false};
            e.at(arrows[i].head) = {i, true};
        }
        return e;
    }
    void check() const {
        for (auto& [a, h] : endpoints())
            if (a < 0) throw SemanticError("Gauss diagram positions are not a perfect matching");
    }
    bool linked(int i, int j) const {
        const auto& a = arrows[i];
        const auto& b = arrows[j];
        int lo = std::min(a.tail, a.head), hi = std::max(a.tail, a.head);
        bool x = lo < b.tail && b.tail < hi;
        bool y = lo < b.head && b.head < hi;
        return x != y;
    }
    // moves the basepoint forward by k gaps
    GaussDiagram rotated(int k) const {
        GaussDiagram g = *this;
        int n = point_count();
        if (n == 0) return g;
        for (auto& a : g.arrows) {
            a.tail = ((a.tail - k) % n + n) % n;
            a.head = ((a.head - k) % n + n) % n;
        }
        return g;
    }
    GaussDiagram mirrored() const {
        GaussDiagram g = *this;
        for (auto& a : g.arrows) {
            std::swap(a.tail, a.head);
            a.sign = -a.sign;
        }
        return g;
    }
    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;
};

inline GaussDiagram to_gauss(const GaussCode& g) {
    GaussDiagram d;
    d.arrows.assign(g.crossing_count(), Arrow{-1, -1, 1});
    for (int i = 0; i < static_cast<int>(g.seq.size()); ++i) {
        auto& a = d.arrows.at(g.seq[i].crossing);
        (g.seq[i].over ? a.head : a.tail) = i;
    }
    for (int x = 0; x < g.crossing_count(); ++x) d.arrows[x].sign = g.sign[x];
    d.check();
    return d;
}

inline GaussDiagram to_gauss(const PlanarDiagram& d) {
    if (d.crossing_count() == 0) {
        if (d.free_loops != 1) throw SemanticError("Gauss diagram needs a knot diagram");
        return {};
    }
    if (d.free_loops != 0) throw SemanticError("Gauss diagram needs a knot diagram");
    return to_gauss(to_gauss_code(d));
}

inline GaussCode to_code(const GaussDiagram& g) {
    GaussCode c;
    for (auto& [a, h] : g.endpoints()) c.seq.push_back({a, h});
    for (auto& a : g.arrows) c.sign.push_back(a.sign);
    return c;
}

inline bool is_realizable(const GaussDiagram& g) { return is_realizable(to_code(g)); }

inline PlanarDiagram to_pd(const GaussDiagram& g) {
    if (g.arrow_count() == 0) return PlanarDiagram{{}, 1};
    return to_pd(to_code(g).link());
}

// Deletes the given arrows, compacting positions and ids.
inline GaussDiagram remove_arrows(const GaussDiagram& g, const std::set<int>& gone) {
    auto ends = g.endpoints();
    std::vector<int> newpos(ends.size(), -1), newid(g.arrow_count(), -1);
    int p = 0, id = 0;
    for (int i = 0; i < g.arrow_count(); ++i)
        if (!gone.count(i)) newid[i] = id++;
    for (int i = 0; i < static_cast<int>(ends.size()); ++i)
        if (!gone.count(ends[i].first)) newpos[i] = p++;
    GaussDiagram r;
    for (int i = 0; i < g.arrow_count(); ++i)
        if (!gone.count(i)) r.arrows.push_back({newpos[g.arrows[i].tail], newpos[g.arrows[i].head], g.arrows[i].sign});
    return r;
}

inline GaussDiagram connected_sum(const GaussDiagram& a, const GaussDiagram& b) {
    GaussDiagram r = a;
    int off = a.point_count();
    for (auto x : b.arrows) r.arrows.push_back({x.tail + off, x.head + off, x.sign});
    return r;
}

// ------------------------------------------------------- intersection graph

struct IntersectionGraph {
    int n = 0;
    std::vector<std::vector<char>> adj;
    std::vector<int> degree;  // l_i
    int lk = 0;
    bool edge(int i, int j) const { return adj[i][j] != 0; }
};

inline IntersectionGraph intersection_graph(const GaussDiagram& g) {
    IntersectionGraph G;
    G.n = g.arrow_count();
    G.adj.assign(G.n, std::vector<char>(G.n, 0));
    G.degree.assign(G.n, 0);
    for (int i = 0; i < G.n; ++i)
        for (int j = i + 1; j < G.n; ++j)
            if (g.linked(i, j)) {
                G.adj[i][j] = G.adj[j][i] = 1;
                G.degree[i]++;
                G.degree[j]++;
                G.lk++;
            }
    return G;
}

struct StructuralChecks {
    bool even_valence = true;
    bool double_connectivity = true;
};

inline bool even_valence(const IntersectionGraph& G) {
    return std::all_of(G.degree.begin(), G.degree.end(), [](int d) { return d % 2 == 0; });
}

// every two edges sharing a vertex lie on a common 3- or 4-cycle
inline bool double_connectivity(const IntersectionGraph& G) {
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            if (!G.edge(a, b)) continue;
            for (int c = b + 1; c < G.n; ++c) {
                if (!G.edge(a, c) || c == b) continue;
                if (G.edge(b, c)) continue;
                bool four = false;
                for (int d = 0; d < G.n && !four; ++d)
                    four = d != a && G.edge(d, b) && G.edge(d, c);
                if (!four) return false;
            }
        }
    return true;
}

inline StructuralChecks structural_checks(const GaussDiagram& g) {
    auto G = intersection_graph(g);
    return {even_valence(G), double_connectivity(G)};
}

// Chord-diagram realizability: some choice of crossing data realizes it.
// `chords` pairs up the positions 0..2c-1.
inline bool chord_diagram_realizable(const std::vector<std::pair<int, int>>& chords) {
    int c = static_cast<int>(chords.size());
    GaussDiagram g;
    for (auto [a, b] : chords) g.arrows.push_back({a, b, 1});
    g.check();
    auto G = intersection_graph(g);
    if (!even_valence(G) || !double_connectivity(G)) return false;
    if (c == 0) return true;
    if (c > 20) throw SemanticError("chord diagram too large for exhaustive sign search");
    // under/over choices do not affect the face structure once signs are
    // chosen relative to them, so fix all arrows and vary the signs
    for (std::uint32_t mask = 0; mask < (1u << (c - 1)); ++mask) {
        for (int i = 1; i < c; ++i) g.arrows[i].sign = (mask >> (i - 1)) & 1 ? -1 : 1;
        if (is_realizable(g)) return true;
    }
    return false;
}

// ------------------------------------------------------ reduction status

// Arrows linked with no other arrow (nugatory crossings).
inline std::set<int> reducible_arrows(const GaussDiagram& g) {
    auto G = intersection_graph(g);
    std::set<int> r;
    for (int i = 0; i < G.n; ++i)
        if (G.degree[i] == 0) r.insert(i);
    return r;
}

// Cut of the circle into two nonempty arcs, each holding only whole chords.
inline std::optional<std::pair<int, int>> composite_cut(const GaussDiagram& g) {
    int n = g.point_count();
    auto ends = g.endpoints();
    auto other = [&](int pos) {
        const auto& a = g.arrows[ends[pos].first];
        return a.tail == pos ? a.head : a.tail;
    };
    for (int i = 0; i < n; ++i) {
        // grow the arc [i, j] and track whether it is closed under partners
        int outside = 0;  // endpoints in the arc whose partner is outside
        std::vector<char> in(n, 0);
        for (int len = 1; len < n - 1; ++len) {
            int j = (i + len - 1) % n;
            in[j] = 1;
            if (in[other(j)])
                outside--;
            else
                outside++;
            if (outside == 0 && len % 2 == 0 && len < n) {
                // the complement must also be nonempty with at least one chord
                if (n - len >= 2) return std::make_pair(i, len);
            }
        }
    }
    return std::nullopt;
}

inline bool is_composite(const GaussDiagram& g) { return composite_cut(g).has_value(); }

// Second-move fragment: a length-3 chord a whose short side reads
// tail(a), tail(b), head(c), head(a), with b and c unlinked and the far
// ends met as tail(c) before head(b) going on from head(a).
struct SecondMovePattern {
    int a, b, c;
};

inline std::vector<SecondMovePattern> second_move_patterns(const GaussDiagram& g) {
    std::vector<SecondMovePattern> out;
    int n = g.point_count();
    if (g.arrow_count() < 3) return out;
    auto ends = g.endpoints();
    for (int a = 0; a < g.arrow_count(); ++a) {
        const auto& A = g.arrows[a];
        if ((A.tail + 3) % n != A.head) continue;
        auto [b, bh] = ends[(A.tail + 1) % n];
        auto [c, ch] = ends[(A.tail + 2) % n];
        if (bh || !ch || b == c || b == a || c == a) continue;
        if (g.linked(b, c)) continue;
        // from head(a) forward, tail(c) comes before head(b)
        int dc = ((g.arrows[c].tail - A.head) % n + n) % n;
        int db = ((g.arrows[b].head - A.head) % n + n) % n;
        if (dc < db) out.push_back({a, b, c});
    }
    return out;
}

// Applies the second move: a disappears, head(b) and tail(c) swap places.
inline GaussDiagram apply_second_move(const GaussDiagram& g, const SecondMovePattern& p) {
    GaussDiagram h = g;
    std::swap(h.arrows[p.b].head, h.arrows[p.c].tail);
    return remove_arrows(h, {p.a});
}

// Loop-minimality obstruction: a chord unlinked from two chords that are linked together.
inline std::optional<std::array<int, 3>> five_one_pattern(const GaussDiagram& g) {
    auto G = intersection_graph(g);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            if (b == a || G.edge(a, b)) continue;
            for (int c = b + 1; c < G.n; ++c)
                if (c != a && !G.edge(a, c) && G.edge(b, c)) return std::array<int, 3>{a, b, c};
        }
    return std::nullopt;
}

struct ReductionStatus {
    std::set<int> reducible;
    bool reduced = true;
    bool bireduced = true;
    bool composite = false;
    bool loop_minimal = true;
};

inline ReductionStatus reduction_status(const GaussDiagram& g) {
    ReductionStatus s;
    s.reducible = reducible_arrows(g);
    s.reduced = s.reducible.empty();
    s.bireduced = s.reduced && second_move_patterns(g).empty();
    s.composite = is_composite(g);
    s.loop_minimal = !five_one_pattern(g).has_value();
    return s;
}

}  // namespace knotpos
