#pragma once
// Seifert circles, canonical genus, Vogel braiding, Markov reduction of
// positive braids and the braid Seifert matrix.

#include "knotpos/matrix.hpp"
#include "knotpos/polynomials.hpp"

namespace knotpos {

// Seifert circle id of every arc label.
inline std::map<int, int> seifert_circle_of_arc(const PlanarDiagram& d) {
    std::map<int, std::pair<int, int>> head;  // arc -> (crossing, slot) where it ends
    for (int x = 0; x < d.crossing_count(); ++x) {
        const auto& c = d.crossings[x];
        head[c.arc[0]] = {x, 0};
        head[c.arc[c.sign > 0 ? 3 : 1]] = {x, c.sign > 0 ? 3 : 1};
    }
    std::map<int, int> circle;
    int id = 0;
    for (auto& [start, _] : head) {
        if (circle.count(start)) continue;
        int a = start;
        while (!circle.count(a)) {
            circle[a] = id;
            auto [x, slot] = head.at(a);
            const auto& c = d.crossings[x];
            a = slot == 0 ? c.arc[c.sign > 0 ? 1 : 3] : c.arc[2];
        }
        ++id;
    }
    return circle;
}

struct SeifertData {
    int circles = 0;
    int writhe = 0;
    int crossings = 0;
    int components = 1;
    int canonical_genus = 0;
};

inline SeifertData seifert_decomposition(const PlanarDiagram& d) {
    SeifertData s;
    auto circ = seifert_circle_of_arc(d);
    std::set<int> ids;
    for (auto& [a, c] : circ) ids.insert(c);
    s.circles = static_cast<int>(ids.size()) + d.free_loops;
    s.writhe = d.writhe();
    s.crossings = d.crossing_count();
    s.components = component_count(d);
    int twice = s.crossings - s.circles + s.components;
    if (twice % 2 != 0 || twice < 0) throw std::logic_error("canonical genus is not integral");
    s.canonical_genus = twice / 2;
    return s;
}

struct BennequinCheck {
    int lhs, rhs;
    bool holds;
};

// |w| + 1 <= n + 2 g for a genus bound g of the knot
inline BennequinCheck bennequin_check(const PlanarDiagram& d, int genus_bound) {
    auto s = seifert_decomposition(d);
    BennequinCheck b{std::abs(s.writhe) + 1, s.circles + 2 * genus_bound, false};
    b.holds = b.lhs <= b.rhs;
    return b;
}

// ------------------------------------------------------------ Vogel moves

namespace detail {

struct FaceEdge {
    int x, s;    // dart at crossing x, slot s
    int y, t;    // the other end of the arc
    int arc;
    bool along;  // arc orientation agrees with the face walk
};

inline bool slot_outgoing(const Crossing& c, int s) { return s == 2 || s == (c.sign > 0 ? 1 : 3); }

inline std::vector<std::vector<FaceEdge>> oriented_faces(const PlanarDiagram& d) {
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int x = 0; x < d.crossing_count(); ++x)
        for (int s = 0; s < 4; ++s) occ[d.crossings[x].arc[s]].push_back({x, s});
    std::vector<std::vector<FaceEdge>> out;
    for (auto& f : faces(d)) {
        std::vector<FaceEdge> fe;
        for (auto [x, s] : f) {
            int a = d.crossings[x].arc[s];
            auto& v = occ.at(a);
            auto [y, t] = v[0] == std::make_pair(x, s) ? v[1] : v[0];
            fe.push_back({x, s, y, t, a, slot_outgoing(d.crossings[x], s)});
        }
        out.push_back(std::move(fe));
    }
    return out;
}

// Two edges of one face lying on distinct Seifert circles and running the
// same way around the face.
inline std::optional<std::pair<FaceEdge, FaceEdge>> vogel_defect(const PlanarDiagram& d) {
    auto circ = seifert_circle_of_arc(d);
    for (auto& f : oriented_faces(d))
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (f[i].along == f[j].along && circ.at(f[i].arc) != circ.at(f[j].arc))
                    return std::make_pair(f[i], f[j]);
    return std::nullopt;
}

// Second Reidemeister move pushing edge e across edge f inside their common
// face; e passes over f.
inline PlanarDiagram vogel_move(const PlanarDiagram& d, const FaceEdge& e, const FaceEdge& f) {
    Wiring w = Wiring::from_pd(d);
    int e0 = 4 * e.x + e.s, e1 = 4 * e.y + e.t;
    int f0 = 4 * f.x + f.s, f1 = 4 * f.y + f.t;
    w.unlink(e0);
    w.unlink(f0);
    // along the face walk e meets P then Q, f meets Q then P; the face lies
    // to the right of the walk
    int P = w.add_crossing(false), Q = w.add_crossing(false);
    w.link(e0, P + 0);
    w.link(P + 2, Q + 0);
    w.link(Q + 2, e1);
    w.link(f0, Q + 1);
    w.link(Q + 3, P + 3);
    w.link(P + 1, f1);
    std::vector<int> starts;
    for (int x = 0; x < d.crossing_count(); ++x) starts.push_back(4 * x);
    auto r = to_pd(w.to_link_code(starts));
    if (!is_planar(r)) throw std::logic_error("Vogel move produced a non-planar diagram");
    return r;
}

// Reads the braid word of a diagram whose Seifert circles are coherent and
// nested; returns nullopt if they are not.
inline std::optional<BraidWord> read_braided(const PlanarDiagram& d) {
    if (d.crossing_count() == 0) return BraidWord{std::max(1, d.free_loops), {}};
    if (d.free_loops) return std::nullopt;
    auto circ = seifert_circle_of_arc(d);
    int n = 0;
    for (auto& [a, c] : circ) n = std::max(n, c + 1);
    // crossings join circles; the Seifert graph must be a path
    std::vector<std::set<int>> nb(n);
    std::vector<std::pair<int, int>> ends(d.crossing_count());
    for (int x = 0; x < d.crossing_count(); ++x) {
        int a = circ.at(d.crossings[x].arc[0]), b = circ.at(d.crossings[x].arc[2]);
        if (a == b) return std::nullopt;
        nb[a].insert(b);
        nb[b].insert(a);
        ends[x] = {a, b};
    }
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (nb[v].size() > 2) return std::nullopt;
        if (nb[v].size() <= 1 && start < 0) start = v;
    }
    if (start < 0) return std::nullopt;
    std::vector<int> level(n, -1);
    int prev = -1, cur = start, k = 0;
    while (cur >= 0) {
        level[cur] = k++;
        int nxt = -1;
        for (int v : nb[cur])
            if (v != prev && level[v] < 0) nxt = v;
        prev = cur;
        cur = nxt;
    }
    if (k != n) return std::nullopt;
    std::vector<int> circle_at(n);
    for (int v = 0; v < n; ++v) circle_at[level[v]] = v;
    // crossing sequence along each circle, in the orientation of the circle
    std::map<int, std::pair<int, int>> head;
    for (int x = 0; x < d.crossing_count(); ++x) {
        const auto& c = d.crossings[x];
        head[c.arc[0]] = {x, 0};
        head[c.arc[c.sign > 0 ? 3 : 1]] = {x, c.sign > 0 ? 3 : 1};
    }
    std::vector<std::vector<int>> seq(n);
    std::set<int> done;
    for (auto& [start_arc, _] : head) {
        if (done.count(start_arc)) continue;
        int a = start_arc;
        int v = circ.at(a);
        while (!done.count(a)) {
            done.insert(a);
            auto [x, slot] = head.at(a);
            seq[level[v]].push_back(x);
            const auto& c = d.crossings[x];
            a = slot == 0 ? c.arc[c.sign > 0 ? 1 : 3] : c.arc[2];
        }
    }
    // cut every circle so that the cuts line up across the bands
    auto gen_of = [&](int x) { return std::min(level[ends[x].first], level[ends[x].second]); };
    std::vector<std::vector<int>> lin(n);
    int cut_at = -1;  // crossing in front of which circle L is cut
    for (int L = 0; L < n; ++L) {
        auto& s = seq[L];
        if (L == 0) {
            cut_at = s.front();
        }
        auto it = std::find(s.begin(), s.end(), cut_at);
        if (it == s.end()) return std::nullopt;
        std::rotate(s.begin(), it, s.end());
        lin[L] = s;
        cut_at = -1;
        for (int x : s)
            if (gen_of(x) == L) {
                cut_at = x;
                break;
            }
        if (L + 1 < n && cut_at < 0) return std::nullopt;
    }
    // merge the circle orders
    std::vector<std::vector<int>> succ(d.crossing_count());
    std::vector<int> indeg(d.crossing_count(), 0);
    for (auto& s : lin)
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            succ[s[i]].push_back(s[i + 1]);
            indeg[s[i + 1]]++;
        }
    std::set<std::pair<int, int>> ready;
    for (int x = 0; x < d.crossing_count(); ++x)
        if (!indeg[x]) ready.insert({gen_of(x), x});
    BraidWord b{n, {}};
    while (!ready.empty()) {
        auto [g, x] = *ready.begin();
        ready.erase(ready.begin());
        b.letters.push_back((g + 1) * d.crossings[x].sign);
        for (int y : succ[x])
            if (--indeg[y] == 0) ready.insert({gen_of(y), y});
    }
    if (static_cast<int>(b.letters.size()) != d.crossing_count()) return std::nullopt;
    return b;
}

}  // namespace detail

struct VogelResult {
    BraidWord braid;
    int moves = 0;
    PlanarDiagram diagram;  // the braided diagram
};

inline VogelResult vogel_braiding(const PlanarDiagram& d, int max_moves = 10000) {
    if (is_split(d)) throw SemanticError("Vogel braiding needs a connected diagram");
    VogelResult r{{}, 0, d};
    while (auto def = detail::vogel_defect(r.diagram)) {
        if (++r.moves > max_moves) throw std::logic_error("Vogel iteration cap exceeded");
        r.diagram = detail::vogel_move(r.diagram, def->first, def->second);
    }
    auto b = detail::read_braided(r.diagram);
    if (!b) throw std::logic_error("diagram without Vogel defects is not a closed braid");
    r.braid = *b;
    return r;
}

// ------------------------------------------------------- positive braids

// Destabilizes generators that occur exactly once. Letters below and above
// such a generator commute, so the word splits into two blocks joined by it.
inline BraidWord markov_reduce_positive(BraidWord b) {
    b.check();
    if (!b.positive()) throw SemanticError("Markov reduction needs a positive braid");
    bool again = true;
    while (again) {
        again = false;
        std::vector<int> count(b.strands, 0);
        for (int l : b.letters) count[l]++;
        for (int i = 1; i < b.strands; ++i) {
            if (count[i] != 1) continue;
            auto it = std::find(b.letters.begin(), b.letters.end(), i);
            std::vector<int> rest(it + 1, b.letters.end());
            rest.insert(rest.end(), b.letters.begin(), it);
            std::vector<int> low, high;
            for (int l : rest) (l < i ? low : high).push_back(l);
            for (int l : high) low.push_back(l - 1);
            b.letters = low;
            b.strands--;
            again = true;
            break;
        }
    }
    return b;
}

struct BraidBounds {
    Rat min_deg_v;  // ([b] + 1 - n) / 2
    Rat fiedler;    // [b] / 4 - (k - 1) / 2
    Rat v2_bound;   // [b]^2 / (4n(n-1)) - (2n - 3)(n - 1) / 8
};

inline BraidBounds braid_bounds(const BraidWord& b) {
    b.check();
    Rat e = b.exponent_sum(), n = b.strands;
    int k = b.closure_components();
    BraidBounds r;
    r.min_deg_v = (e + 1 - n) / 2;
    r.fiedler = e / 4 - Rat(k - 1, 2);
    r.v2_bound = b.strands > 1 ? e * e / (4 * n * (n - 1)) - (2 * n - 3) * (n - 1) / 8 : Rat(0);
    return r;
}

// --------------------------------------------------------- Seifert matrix

// Seifert matrix of the closed braid surface: one disk per strand and one
// band per letter; the generators are the loops through consecutive bands
// of the same generator.
inline IntMatrix braid_seifert_matrix(const BraidWord& b) {
    b.check();
    std::vector<std::vector<int>> pos(b.strands);
    for (int k = 0; k < static_cast<int>(b.letters.size()); ++k) pos[std::abs(b.letters[k])].push_back(k);
    struct Loop {
        int gen, a, b;
    };
    std::vector<Loop> loops;
    for (int i = 1; i < b.strands; ++i)
        for (std::size_t j = 0; j + 1 < pos[i].size(); ++j) loops.push_back({i, pos[i][j], pos[i][j + 1]});
    int m = static_cast<int>(loops.size());
    auto sg = [&](int k) { return b.letters[k] > 0 ? 1 : -1; };
    IntMatrix v(m, std::vector<Int>(m, 0));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            const auto& X = loops[x];
            const auto& Y = loops[y];
            if (x == y) {
                int s1 = sg(X.a), s2 = sg(X.b);
                v[x][x] = s1 > 0 && s2 > 0 ? 1 : s1 < 0 && s2 < 0 ? -1 : 0;
            } else if (X.gen == Y.gen && X.b == Y.a) {
                if (sg(X.b) > 0)
                    v[x][y] = -1;
                else
                    v[y][x] = 1;
            } else if (Y.gen == X.gen + 1) {
                if (X.a < Y.a && Y.a < X.b && X.b < Y.b) v[x][y] = 1;
                if (Y.a < X.a && X.a < Y.b && Y.b < X.b) v[x][y] = -1;
            }
        }
    return v;
}

inline int signature_of_seifert(const IntMatrix& v) {
    std::size_t n = v.size();
    RatMatrix s(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = Rat(v[i][j] + v[j][i]);
    return signature(s);
}

struct SeifertSignature {
    IntMatrix matrix;
    int signature = 0;
    Laurent alexander;  // normalized det(V - t V^T)
};

// The Alexander polynomial is left at 1 unless asked for.
inline SeifertSignature seifert_signature(const BraidWord& b, bool with_alexander = true) {
    SeifertSignature r;
    r.matrix = braid_seifert_matrix(b);
    r.signature = signature_of_seifert(r.matrix);
    r.alexander = r.matrix.empty() || !with_alexander ? Laurent(1)
                                                      : normalize_alexander(alexander_from_seifert(r.matrix));
    return r;
}

inline SeifertSignature seifert_signature(const PlanarDiagram& d, bool with_alexander = true) {
    if (d.crossing_count() == 0) return {{}, 0, Laurent(1)};
    return seifert_signature(vogel_braiding(d).braid, with_alexander);
}

// ([b], n, v3) samples for the cubic braid-positive bound; no constants fitted.
struct CubicSample {
    int exponent_sum, strands;
    Int v3;
};

}  // namespace knotpos
