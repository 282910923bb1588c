#pragma once
// Knot presentations: planar diagrams, signed Gauss codes, braid words and
// rational tangles, with parsers, converters and a realizability test.

#include "knotpos/laurent.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotpos {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- codes

struct Passage {
    int crossing;
    bool over;
    friend bool operator==(const Passage&, const Passage&) = default;
};

// Signed Gauss code of a link: one cyclic passage sequence per component.
// An empty component is a crossingless loop.
struct LinkCode {
    std::vector<std::vector<Passage>> comps;
    std::vector<int> sign;  // indexed by crossing id

    int crossing_count() const { return static_cast<int>(sign.size()); }
    int component_count() const { return static_cast<int>(comps.size()); }
    int writhe() const { return std::accumulate(sign.begin(), sign.end(), 0); }
    friend bool operator==(const LinkCode&, const LinkCode&) = default;

    void check() const {
        std::vector<int> over(sign.size(), 0), under(sign.size(), 0);
        for (auto& comp : comps)
            for (auto& p : comp) {
                if (p.crossing < 0 || p.crossing >= crossing_count())
                    throw SemanticError("passage references unknown crossing");
                (p.over ? over : under)[p.crossing]++;
            }
        for (int x = 0; x < crossing_count(); ++x) {
            if (over[x] != 1 || under[x] != 1)
                throw SemanticError("crossing " + std::to_string(x + 1) +
                                    " must be passed once over and once under");
            if (sign[x] != 1 && sign[x] != -1) throw SemanticError("crossing sign must be +1 or -1");
        }
    }
};

// A knot's signed Gauss code (single component).
struct GaussCode {
    std::vector<Passage> seq;
    std::vector<int> sign;

    int crossing_count() const { return static_cast<int>(sign.size()); }
    LinkCode link() const { return LinkCode{{seq}, sign}; }
    static GaussCode from_link(const LinkCode& L) {
        if (L.component_count() != 1) throw SemanticError("Gauss code needs exactly one component");
        return GaussCode{L.comps[0], L.sign};
    }
    friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// ------------------------------------------------------ planar diagrams

struct Crossing {
    std::array<int, 4> arc;  // counterclockwise, starting at the incoming under-arc
    int sign = 1;
    int over_in() const { return sign > 0 ? arc[3] : arc[1]; }
    int over_out() const { return sign > 0 ? arc[1] : arc[3]; }
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;  // components without crossings

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int writhe() const {
        int w = 0;
        for (auto& x : crossings) w += x.sign;
        return w;
    }
    friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

namespace detail {

struct ArcEnds {
    // for each arc label: (crossing, slot) of its head and of its tail
    std::map<int, std::pair<int, int>> head, tail;
};

inline ArcEnds arc_ends(const PlanarDiagram& d) {
    ArcEnds e;
    for (int x = 0; x < d.crossing_count(); ++x) {
        const auto& c = d.crossings[x];
        int oin = c.sign > 0 ? 3 : 1;
        int oout = c.sign > 0 ? 1 : 3;
        auto put = [&](std::map<int, std::pair<int, int>>& m, int slot) {
            int a = c.arc[slot];
            if (!m.emplace(a, std::make_pair(x, slot)).second)
                throw SemanticError("arc " + std::to_string(a) + " has two heads or two tails");
        };
        put(e.head, 0);
        put(e.tail, 2);
        put(e.head, oin);
        put(e.tail, oout);
    }
    for (auto& [a, _] : e.head)
        if (!e.tail.count(a)) throw SemanticError("arc " + std::to_string(a) + " has no tail");
    for (auto& [a, _] : e.tail)
        if (!e.head.count(a)) throw SemanticError("arc " + std::to_string(a) + " has no head");
    return e;
}

}  // namespace detail

inline void validate(const PlanarDiagram& d) {
    std::map<int, int> count;
    for (auto& x : d.crossings) {
        if (x.sign != 1 && x.sign != -1) throw SemanticError("crossing sign must be +1 or -1");
        for (int a : x.arc) count[a]++;
    }
    for (auto& [a, k] : count)
        if (k != 2) throw SemanticError("arc " + std::to_string(a) + " appears " + std::to_string(k) + " times");
    detail::arc_ends(d);
}

inline LinkCode to_link_code(const PlanarDiagram& d) {
    auto ends = detail::arc_ends(d);
    LinkCode L;
    L.sign.resize(d.crossings.size());
    for (int x = 0; x < d.crossing_count(); ++x) L.sign[x] = d.crossings[x].sign;
    std::set<int> seen;
    for (auto& [start, _] : ends.head) {
        if (seen.count(start)) continue;
        std::vector<Passage> comp;
        int a = start;
        do {
            seen.insert(a);
            auto [x, slot] = ends.head.at(a);
            comp.push_back({x, slot % 2 == 1});
            a = d.crossings[x].arc[(slot + 2) % 4];
        } while (a != start);
        L.comps.push_back(std::move(comp));
    }
    for (int i = 0; i < d.free_loops; ++i) L.comps.emplace_back();
    return L;
}

inline PlanarDiagram to_pd(const LinkCode& L) {
    L.check();
    PlanarDiagram d;
    d.crossings.resize(L.sign.size());
    std::vector<int> found(L.sign.size(), 0);
    int base = 1;
    for (auto& comp : L.comps) {
        int n = static_cast<int>(comp.size());
        if (n == 0) {
            d.free_loops++;
            continue;
        }
        auto out_arc = [&](int j) { return base + ((j % n) + n) % n; };
        for (int j = 0; j < n; ++j) {
            int x = comp[j].crossing;
            auto& c = d.crossings[x];
            c.sign = L.sign[x];
            int in = out_arc(j - 1), out = out_arc(j);
            if (!comp[j].over) {
                c.arc[0] = in;
                c.arc[2] = out;
            } else if (c.sign > 0) {
                c.arc[3] = in;
                c.arc[1] = out;
            } else {
                c.arc[1] = in;
                c.arc[3] = out;
            }
            found[x]++;
        }
        base += n;
    }
    return d;
}

inline GaussCode to_gauss_code(const PlanarDiagram& d) {
    auto L = to_link_code(d);
    if (L.component_count() != 1) throw SemanticError("multi-component diagram has no Gauss code");
    return GaussCode::from_link(L);
}

inline int component_count(const PlanarDiagram& d) { return to_link_code(d).component_count(); }

// Faces of the planar map: orbits of darts (crossing, slot).
inline std::vector<std::vector<std::pair<int, int>>> faces(const PlanarDiagram& d) {
    int c = d.crossing_count();
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int x = 0; x < c; ++x)
        for (int s = 0; s < 4; ++s) occ[d.crossings[x].arc[s]].push_back({x, s});
    auto other = [&](int x, int s) {
        auto& v = occ.at(d.crossings[x].arc[s]);
        if (v[0] == std::make_pair(x, s)) return v[1];
        return v[0];
    };
    std::vector<char> seen(4 * c, 0);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int x = 0; x < c; ++x)
        for (int s = 0; s < 4; ++s) {
            if (seen[4 * x + s]) continue;
            std::vector<std::pair<int, int>> f;
            int cx = x, cs = s;
            while (!seen[4 * cx + cs]) {
                seen[4 * cx + cs] = 1;
                f.push_back({cx, cs});
                auto [y, t] = other(cx, cs);
                cx = y;
                cs = (t + 1) % 4;
            }
            out.push_back(std::move(f));
        }
    return out;
}

// Number of connected pieces of the 4-valent graph (ignoring free loops).
inline int piece_count(const PlanarDiagram& d) {
    int c = d.crossing_count();
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    std::map<int, int> first;
    for (int x = 0; x < c; ++x)
        for (int a : d.crossings[x].arc) {
            auto [it, fresh] = first.emplace(a, x);
            if (!fresh) parent[find(x)] = find(it->second);
        }
    int k = 0;
    for (int x = 0; x < c; ++x) k += find(x) == x;
    return k;
}

inline bool is_split(const PlanarDiagram& d) { return piece_count(d) + d.free_loops > 1; }

inline bool is_planar(const PlanarDiagram& d) {
    return static_cast<int>(faces(d).size()) == d.crossing_count() + 2 * piece_count(d);
}

// Realizability of a signed Gauss code: the crossing data fix the rotation
// at every vertex, so the code is realizable iff the traced surface is a sphere.
inline bool is_realizable(const LinkCode& L) {
    try {
        L.check();
    } catch (const SemanticError&) {
        return false;
    }
    return is_planar(to_pd(L));
}
inline bool is_realizable(const GaussCode& g) { return is_realizable(g.link()); }

inline PlanarDiagram mirror(const PlanarDiagram& d) {
    auto L = to_link_code(d);
    for (int& s : L.sign) s = -s;
    return to_pd(L);
}

// ------------------------------------------------------------- braids

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int exponent_sum() const {
        int s = 0;
        for (int l : letters) s += l > 0 ? 1 : -1;
        return s;
    }
    bool positive() const {
        return std::all_of(letters.begin(), letters.end(), [](int l) { return l > 0; });
    }
    void check() const {
        if (strands < 1) throw SemanticError("braid needs at least one strand");
        for (int l : letters)
            if (l == 0 || std::abs(l) >= strands)
                throw SemanticError("generator " + std::to_string(l) + " out of range for " +
                                    std::to_string(strands) + " strands");
    }
    // permutation: final position of the strand starting at position p
    std::vector<int> permutation() const {
        std::vector<int> pos_of(strands), at(strands);
        std::iota(at.begin(), at.end(), 0);
        for (int l : letters) std::swap(at[std::abs(l) - 1], at[std::abs(l)]);
        for (int p = 0; p < strands; ++p) pos_of[at[p]] = p;
        return pos_of;
    }
    int closure_components() const {
        auto perm = permutation();
        std::vector<char> seen(strands, 0);
        int k = 0;
        for (int s = 0; s < strands; ++s) {
            if (seen[s]) continue;
            ++k;
            for (int t = s; !seen[t]; t = perm[t]) seen[t] = 1;
        }
        return k;
    }
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline LinkCode braid_closure_code(const BraidWord& b) {
    b.check();
    std::vector<std::vector<Passage>> strand(b.strands);
    std::vector<int> at(b.strands);
    std::iota(at.begin(), at.end(), 0);
    LinkCode L;
    for (int k = 0; k < static_cast<int>(b.letters.size()); ++k) {
        int l = b.letters[k], i = std::abs(l) - 1, s = l > 0 ? 1 : -1;
        strand[at[i]].push_back({k, s > 0});
        strand[at[i + 1]].push_back({k, s < 0});
        std::swap(at[i], at[i + 1]);
        L.sign.push_back(s);
    }
    std::vector<int> fin(b.strands);
    for (int p = 0; p < b.strands; ++p) fin[at[p]] = p;
    std::vector<char> seen(b.strands, 0);
    for (int s = 0; s < b.strands; ++s) {
        if (seen[s]) continue;
        std::vector<Passage> comp;
        for (int t = s; !seen[t]; t = fin[t]) {
            seen[t] = 1;
            comp.insert(comp.end(), strand[t].begin(), strand[t].end());
        }
        L.comps.push_back(std::move(comp));
    }
    return L;
}

inline PlanarDiagram braid_closure(const BraidWord& b) { return to_pd(braid_closure_code(b)); }

// ------------------------------------------------- unoriented wiring

// Unoriented plane diagram under construction. Crossings own four slots in
// counterclockwise order; the over strand joins slots 1-3 or 0-2. Points are
// degree-two marks on an arc, used for tangle boundaries.
class Wiring {
public:
    int add_crossing(bool over13) {
        int base = static_cast<int>(partner_.size());
        for (int i = 0; i < 4; ++i) {
            partner_.push_back(-1);
            node_.push_back(static_cast<int>(nodes_.size()));
        }
        nodes_.push_back({base, 4, over13});
        return base;
    }
    int add_point() {
        int base = static_cast<int>(partner_.size());
        for (int i = 0; i < 2; ++i) {
            partner_.push_back(-1);
            node_.push_back(static_cast<int>(nodes_.size()));
        }
        nodes_.push_back({base, 2, false});
        return base;
    }
    void link(int s, int t) {
        if (partner_.at(s) != -1 || partner_.at(t) != -1) throw std::logic_error("slot already linked");
        partner_[s] = t;
        partner_[t] = s;
    }
    void unlink(int s) {
        int t = partner_.at(s);
        if (t == -1) throw std::logic_error("slot not linked");
        partner_[s] = partner_[t] = -1;
    }
    int partner(int s) const { return partner_.at(s); }
    int slot_count() const { return static_cast<int>(partner_.size()); }
    bool is_crossing_slot(int s) const { return nodes_[node_[s]].degree == 4; }

    // swap slots 0 and 2 of every crossing: a reflection of the plane that
    // keeps the over strand of each crossing on the same slot pair
    int reflect_slot(int s) const {
        const auto& n = nodes_[node_[s]];
        if (n.degree != 4) return s;
        int k = s - n.base;
        if (k == 0) return n.base + 2;
        if (k == 2) return n.base;
        return s;
    }
    // reflects the slots from `from` on; those must only link among themselves
    void reflect(int from = 0) {
        std::vector<int> np = partner_;
        for (int s = from; s < slot_count(); ++s)
            np[reflect_slot(s)] = partner_[s] == -1 ? -1 : reflect_slot(partner_[s]);
        partner_ = np;
    }

    // Orients every strand; start_slots (entry slots) fix the direction of
    // the components through them, other components start at their lowest slot.
    LinkCode to_link_code(const std::vector<int>& start_slots = {}) const {
        for (int s = 0; s < slot_count(); ++s)
            if (partner_[s] == -1) throw std::logic_error("open slot in wiring");
        std::vector<int> cross_id(nodes_.size(), -1);
        int nc = 0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].degree == 4) cross_id[i] = nc++;
        LinkCode L;
        L.sign.assign(nc, 0);
        std::vector<char> used(partner_.size(), 0);
        std::vector<int> under_in(nc, -1), over_in(nc, -1);
        auto exit_of = [&](int s) {
            const auto& n = nodes_[node_[s]];
            int k = s - n.base;
            return n.base + (n.degree == 4 ? (k + 2) % 4 : 1 - k);
        };
        auto run = [&](int entry) {
            std::vector<Passage> comp;
            int s = entry;
            do {
                used[s] = used[exit_of(s)] = 1;
                const auto& n = nodes_[node_[s]];
                if (n.degree == 4) {
                    int k = s - n.base;
                    bool over = (k % 2 == 1) == n.over13;
                    int x = cross_id[node_[s]];
                    comp.push_back({x, over});
                    (over ? over_in : under_in)[x] = k;
                }
                s = partner_[exit_of(s)];
            } while (s != entry);
            L.comps.push_back(std::move(comp));
        };
        for (int s : start_slots)
            if (!used[s]) run(s);
        for (int s = 0; s < slot_count(); ++s)
            if (!used[s] && is_crossing_slot(s)) run(s);
        for (int s = 0; s < slot_count(); ++s)
            if (!used[s]) run(s);
        for (int x = 0; x < nc; ++x) L.sign[x] = (over_in[x] == (under_in[x] + 3) % 4) ? 1 : -1;
        return L;
    }

    // Builds the wiring of an existing planar diagram; returns the slot of
    // crossing x, position i as 4*x+i.
    static Wiring from_pd(const PlanarDiagram& d) {
        Wiring w;
        for (int x = 0; x < d.crossing_count(); ++x) w.add_crossing(true);
        std::map<int, int> first;
        for (int x = 0; x < d.crossing_count(); ++x)
            for (int s = 0; s < 4; ++s) {
                int a = d.crossings[x].arc[s];
                auto it = first.find(a);
                if (it == first.end())
                    first[a] = 4 * x + s;
                else
                    w.link(it->second, 4 * x + s);
            }
        for (int i = 0; i < d.free_loops; ++i) {
            int p = w.add_point();
            w.link(p, p + 1);
        }
        return w;
    }

private:
    struct Node {
        int base;
        int degree;
        bool over13;
    };
    std::vector<int> partner_, node_;
    std::vector<Node> nodes_;
};

// ---------------------------------------------------- rational tangles

struct ConwayTangle {
    std::vector<int> entries;
    void check() const {
        if (entries.empty()) throw SemanticError("Conway notation needs at least one entry");
        for (int a : entries)
            if (a == 0) throw SemanticError("Conway entries must be nonzero");
    }
    friend bool operator==(const ConwayTangle&, const ConwayTangle&) = default;
};

// Exact value of a_n + 1/(a_{n-1} + 1/(... + 1/a_1)); nullopt stands for infinity.
inline std::optional<Rat> tangle_fraction(const ConwayTangle& t) {
    std::optional<Rat> f = Rat(0);
    bool first = true;
    for (int a : t.entries) {
        if (first) {
            f = Rat(a);
            first = false;
            continue;
        }
        if (!f)
            f = Rat(a);  // 1/inf = 0
        else if (*f == 0)
            f = std::nullopt;
        else
            f = Rat(a) + 1 / *f;
    }
    return f;
}

// Four open boundary slots of a tangle under construction.
struct TangleEnds {
    int nw, ne, sw, se;
};

namespace detail {

inline TangleEnds zero_tangle(Wiring& w) {
    int p = w.add_point(), q = w.add_point();
    return {p, p + 1, q, q + 1};
}

// slots of a crossing: 0 NE, 1 NW, 2 SW, 3 SE (counterclockwise);
// a positive twist has its over strand on the NW-SE diagonal
inline TangleEnds add_horizontal_twists(Wiring& w, TangleEnds t, int a) {
    for (int i = 0; i < std::abs(a); ++i) {
        int x = w.add_crossing(a > 0);
        w.link(t.ne, x + 1);
        w.link(t.se, x + 2);
        t.ne = x + 0;
        t.se = x + 3;
    }
    return t;
}

inline TangleEnds reflect_tangle(Wiring& w, TangleEnds t, int from = 0) {
    w.reflect(from);
    TangleEnds r{w.reflect_slot(t.nw), w.reflect_slot(t.sw), w.reflect_slot(t.ne), w.reflect_slot(t.se)};
    return r;
}

inline TangleEnds build_rational(Wiring& w, const ConwayTangle& t) {
    t.check();
    int from = w.slot_count();
    TangleEnds e = zero_tangle(w);
    bool first = true;
    for (int a : t.entries) {
        if (!first) e = reflect_tangle(w, e, from);
        first = false;
        e = add_horizontal_twists(w, e, a);
    }
    return e;
}

inline TangleEnds tangle_sum(Wiring& w, TangleEnds a, TangleEnds b) {
    w.link(a.ne, b.nw);
    w.link(a.se, b.sw);
    return {a.nw, b.ne, a.sw, b.se};
}

inline void numerator_close(Wiring& w, TangleEnds t) {
    w.link(t.nw, t.ne);
    w.link(t.sw, t.se);
}

}  // namespace detail

inline PlanarDiagram rational_closure(const ConwayTangle& t) {
    Wiring w;
    auto e = detail::build_rational(w, t);
    detail::numerator_close(w, e);
    return to_pd(w.to_link_code());
}

// Pretzel diagram P(a_1, ..., a_n): vertical twist columns side by side.
inline PlanarDiagram pretzel_closure(const std::vector<int>& cols) {
    if (cols.empty()) throw SemanticError("pretzel needs at least one column");
    Wiring w;
    std::optional<TangleEnds> acc;
    for (int a : cols) {
        int from = w.slot_count();
        auto e = detail::build_rational(w, ConwayTangle{{a}});
        e = detail::reflect_tangle(w, e, from);
        acc = acc ? detail::tangle_sum(w, *acc, e) : e;
    }
    detail::numerator_close(w, *acc);
    return to_pd(w.to_link_code());
}

// ------------------------------------------------------- knot surgery

inline GaussCode connected_sum(const GaussCode& a, const GaussCode& b) {
    GaussCode r = a;
    int off = a.crossing_count();
    for (auto p : b.seq) r.seq.push_back({p.crossing + off, p.over});
    r.sign.insert(r.sign.end(), b.sign.begin(), b.sign.end());
    return r;
}

inline PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
    auto ga = a.crossing_count() ? to_gauss_code(a) : GaussCode{};
    auto gb = b.crossing_count() ? to_gauss_code(b) : GaussCode{};
    auto s = connected_sum(ga, gb);
    if (s.seq.empty()) return PlanarDiagram{{}, 1};
    return to_pd(s.link());
}

// ------------------------------------------------------------ DT codes

inline std::vector<Passage> dt_passages(const std::vector<int>& dt) {
    int n = static_cast<int>(dt.size());
    std::vector<Passage> seq(2 * n, Passage{-1, false});
    for (int i = 0; i < n; ++i) {
        int e = std::abs(dt[i]);
        if (e % 2 != 0 || e < 2 || e > 2 * n) throw SemanticError("DT entries must be even numbers in 2..2n");
        int odd = 2 * i;  // position of label 2i+1
        if (seq[e - 1].crossing != -1) throw SemanticError("DT sequence is not a permutation of even numbers");
        bool odd_over = dt[i] > 0;
        seq[odd] = {i, odd_over};
        seq[e - 1] = {i, !odd_over};
    }
    return seq;
}

// Realizes a DT code as a planar diagram. DT codes carry no chirality; the
// returned realization has the crossing met first assigned sign +1.
inline PlanarDiagram dt_to_pd(const std::vector<int>& dt) {
    int n = static_cast<int>(dt.size());
    if (n == 0) return PlanarDiagram{{}, 1};
    if (n > 24) throw SemanticError("DT code too long for realization search");
    auto seq = dt_passages(dt);
    LinkCode L{{seq}, std::vector<int>(n, 1)};
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        for (int i = 1; i < n; ++i) L.sign[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
        auto d = to_pd(L);
        if (is_planar(d)) return d;
    }
    throw SemanticError("DT code is not realizable");
}

// ---------------------------------------------------- text formats

enum class Format { PD, DT, GAUSS, BRAID, CONWAY };

inline Format parse_format(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), ::toupper);
    if (s == "PD") return Format::PD;
    if (s == "DT") return Format::DT;
    if (s == "GAUSS") return Format::GAUSS;
    if (s == "BRAID") return Format::BRAID;
    if (s == "CONWAY") return Format::CONWAY;
    throw SemanticError("unknown format " + s);
}

inline std::string format_name(Format f) {
    switch (f) {
        case Format::PD: return "pd";
        case Format::DT: return "dt";
        case Format::GAUSS: return "gauss";
        case Format::BRAID: return "braid";
        case Format::CONWAY: return "conway";
    }
    return "?";
}

namespace detail {

struct Token {
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',' && s[j] != '#')
            ++j;
        out.push_back({s.substr(i, j - i), i});
        i = j;
    }
    return out;
}

inline int to_int(const Token& t) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t.text, &used);
    } catch (...) {
        throw ParseError("expected integer, got '" + t.text + "'", t.pos);
    }
    if (used != t.text.size()) throw ParseError("expected integer, got '" + t.text + "'", t.pos);
    return v;
}

// Orients a parsed PD: each arc has one head and one tail. Slot 0 is an
// incoming under-arc and slot 2 outgoing; over strands are resolved by
// propagation, then by the consecutive numbering.
inline PlanarDiagram orient_pd(const std::vector<std::array<int, 4>>& xs) {
    int c = static_cast<int>(xs.size());
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int x = 0; x < c; ++x)
        for (int s = 0; s < 4; ++s) occ[xs[x][s]].push_back({x, s});
    for (auto& [a, v] : occ)
        if (v.size() != 2)
            throw SemanticError("arc " + std::to_string(a) + " appears " + std::to_string(v.size()) + " times");
    int lo = occ.begin()->first, hi = occ.rbegin()->first;
    if (lo != 1 || hi != 2 * c) throw SemanticError("arc labels must be 1..2c");
    // components by strands
    std::vector<int> parent(2 * c + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto& x : xs) {
        parent[find(x[0])] = find(x[2]);
        parent[find(x[1])] = find(x[3]);
    }
    std::map<int, std::pair<int, int>> range;
    for (int a = 1; a <= 2 * c; ++a) {
        auto [it, fresh] = range.emplace(find(a), std::make_pair(a, a));
        if (!fresh) {
            it->second.first = std::min(it->second.first, a);
            it->second.second = std::max(it->second.second, a);
        }
    }
    auto next = [&](int a) {
        auto [l, h] = range.at(find(a));
        return a == h ? l : a + 1;
    };
    // role[x][s]: +1 incoming, -1 outgoing, 0 unknown
    std::vector<std::array<int, 4>> role(c, {1, 0, -1, 0});
    auto other_occ = [&](int x, int s) {
        auto& v = occ.at(xs[x][s]);
        return v[0] == std::make_pair(x, s) ? v[1] : v[0];
    };
    bool changed = true;
    auto settle = [&]() {
        while (changed) {
            changed = false;
            for (int x = 0; x < c; ++x)
                for (int s = 0; s < 4; ++s) {
                    if (role[x][s] == 0) continue;
                    auto [y, t] = other_occ(x, s);
                    if (role[y][t] == 0) {
                        role[y][t] = -role[x][s];
                        changed = true;
                    } else if (role[y][t] == role[x][s]) {
                        throw SemanticError("inconsistent arc orientation in PD");
                    }
                    int u = (s + 2) % 4;
                    if (role[x][u] == 0) {
                        role[x][u] = -role[x][s];
                        changed = true;
                    } else if (role[x][u] == role[x][s]) {
                        throw SemanticError("inconsistent strand orientation in PD");
                    }
                }
        }
    };
    settle();
    for (int x = 0; x < c; ++x) {
        if (role[x][1] != 0) continue;
        int b = xs[x][1], d = xs[x][3];
        if (next(d) == b && next(b) != d)
            role[x][3] = 1;
        else if (next(b) == d && next(d) != b)
            role[x][1] = 1;
        else
            role[x][3] = 1;
        changed = true;
        settle();
    }
    PlanarDiagram pd;
    for (int x = 0; x < c; ++x) pd.crossings.push_back({xs[x], role[x][3] == 1 ? 1 : -1});
    // numbering check: along each component labels increase by one
    for (int x = 0; x < c; ++x) {
        auto& cr = pd.crossings[x];
        auto [l, h] = range.at(find(cr.arc[0]));
        if (h - l + 1 > 2 && next(cr.arc[0]) != cr.arc[2])
            throw SemanticError("arcs are not numbered along the orientation");
        auto [l2, h2] = range.at(find(cr.over_in()));
        if (h2 - l2 + 1 > 2 && next(cr.over_in()) != cr.over_out())
            throw SemanticError("arcs are not numbered along the orientation");
    }
    validate(pd);
    return pd;
}

}  // namespace detail

// Accepts "X 1 5 2 4 ...", "X[1,5,2,4] ..." and "PD[X[1,5,2,4], ...]".
inline PlanarDiagram parse_pd(const std::string& text) {
    std::string flat = text;
    for (char& ch : flat)
        if (ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
    auto toks = detail::tokenize(flat);
    std::vector<std::array<int, 4>> xs;
    std::size_t i = 0;
    if (!toks.empty() && (toks[0].text == "PD" || toks[0].text == "pd")) i = 1;
    while (i < toks.size()) {
        if (toks[i].text != "X" && toks[i].text != "x")
            throw ParseError("expected 'X', got '" + toks[i].text + "'", toks[i].pos);
        std::array<int, 4> a{};
        for (int k = 0; k < 4; ++k) {
            if (i + 1 + k >= toks.size()) throw ParseError("crossing needs four arc labels", toks[i].pos);
            a[k] = detail::to_int(toks[i + 1 + k]);
        }
        xs.push_back(a);
        i += 5;
    }
    if (xs.empty()) return PlanarDiagram{{}, 1};
    return detail::orient_pd(xs);
}

inline std::vector<int> parse_dt(const std::string& text) {
    std::vector<int> v;
    for (auto& t : detail::tokenize(text)) {
        int k = detail::to_int(t);
        if (k == 0 || k % 2 != 0) throw ParseError("DT entries must be nonzero even integers", t.pos);
        v.push_back(k);
    }
    dt_passages(v);
    return v;
}

inline GaussCode parse_gauss(const std::string& text) {
    GaussCode g;
    std::map<int, int> id;
    std::map<int, int> sg;
    for (auto& t : detail::tokenize(text)) {
        const auto& s = t.text;
        if (s.size() < 3 || (s[0] != 'O' && s[0] != 'U' && s[0] != 'o' && s[0] != 'u') ||
            (s.back() != '+' && s.back() != '-'))
            throw ParseError("expected token like O1+ or U2-, got '" + s + "'", t.pos);
        int label = detail::to_int(detail::Token{s.substr(1, s.size() - 2), t.pos + 1});
        int sign = s.back() == '+' ? 1 : -1;
        auto [it, fresh] = id.emplace(label, static_cast<int>(id.size()));
        if (fresh)
            sg[it->second] = sign;
        else if (sg[it->second] != sign)
            throw ParseError("crossing " + std::to_string(label) + " has inconsistent signs", t.pos);
        g.seq.push_back({it->second, s[0] == 'O' || s[0] == 'o'});
    }
    g.sign.resize(id.size());
    for (auto& [k, s] : sg) g.sign[k] = s;
    g.link().check();
    return g;
}

inline BraidWord parse_braid(const std::string& text) {
    auto toks = detail::tokenize(text);
    if (toks.empty()) throw ParseError("empty braid", 0);
    auto& head = toks[0].text;
    BraidWord b;
    std::size_t i = 1;
    auto colon = head.find(':');
    if (colon == std::string::npos) throw ParseError("braid must start with 'n:'", toks[0].pos);
    b.strands = detail::to_int(detail::Token{head.substr(0, colon), toks[0].pos});
    if (colon + 1 < head.size()) b.letters.push_back(detail::to_int(detail::Token{head.substr(colon + 1), toks[0].pos}));
    for (; i < toks.size(); ++i) b.letters.push_back(detail::to_int(toks[i]));
    b.check();
    return b;
}

inline ConwayTangle parse_conway(const std::string& text) {
    auto toks = detail::tokenize(text);
    ConwayTangle t;
    std::size_t i = 0;
    if (!toks.empty() && (toks[0].text == "C:" || toks[0].text == "c:")) i = 1;
    for (; i < toks.size(); ++i) t.entries.push_back(detail::to_int(toks[i]));
    if (t.entries.empty()) throw ParseError("empty Conway notation", 0);
    t.check();
    return t;
}

inline std::string serialize(const PlanarDiagram& d) {
    std::ostringstream os;
    bool first = true;
    for (auto& x : d.crossings) {
        if (!first) os << ' ';
        first = false;
        os << "X[" << x.arc[0] << ',' << x.arc[1] << ',' << x.arc[2] << ',' << x.arc[3] << ']';
    }
    return os.str();
}

inline std::string serialize(const GaussCode& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.seq.size(); ++i) {
        if (i) os << ' ';
        auto p = g.seq[i];
        os << (p.over ? 'O' : 'U') << p.crossing + 1 << (g.sign[p.crossing] > 0 ? '+' : '-');
    }
    return os.str();
}

inline std::string serialize(const BraidWord& b) {
    std::ostringstream os;
    os << b.strands << ":";
    for (int l : b.letters) os << ' ' << l;
    return os.str();
}

inline std::string serialize(const ConwayTangle& t) {
    std::ostringstream os;
    os << "C:";
    for (int a : t.entries) os << ' ' << a;
    return os.str();
}

inline std::string serialize_dt(const std::vector<int>& dt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dt.size(); ++i) os << (i ? " " : "") << dt[i];
    return os.str();
}

// DT code of a knot diagram (positive entries where the odd passage is over).
inline std::vector<int> to_dt(const PlanarDiagram& d) {
    auto g = to_gauss_code(d);
    int n = g.crossing_count();
    std::vector<int> first(n, -1), second(n, -1);
    for (int i = 0; i < 2 * n; ++i) {
        int x = g.seq[i].crossing;
        (first[x] == -1 ? first[x] : second[x]) = i;
    }
    std::vector<int> dt(n);
    for (int x = 0; x < n; ++x) {
        int a = first[x], b = second[x];
        if ((a % 2) == (b % 2)) throw SemanticError("diagram has no DT code (parity)");
        int odd = a % 2 == 0 ? a : b, even = odd == a ? b : a;
        dt[odd / 2] = (g.seq[odd].over ? 1 : -1) * (even + 1);
    }
    return dt;
}

// A parsed presentation: exactly one alternative is set.
struct Presentation {
    Format format;
    std::optional<PlanarDiagram> pd;
    std::optional<GaussCode> gauss;
    std::optional<BraidWord> braid;
    std::optional<ConwayTangle> conway;
    std::vector<int> dt;
};

inline Presentation parse_diagram(Format f, const std::string& text) {
    Presentation p{f, {}, {}, {}, {}, {}};
    switch (f) {
        case Format::PD: p.pd = parse_pd(text); break;
        case Format::DT:
            p.dt = parse_dt(text);
            p.pd = dt_to_pd(p.dt);
            break;
        case Format::GAUSS: p.gauss = parse_gauss(text); break;
        case Format::BRAID: p.braid = parse_braid(text); break;
        case Format::CONWAY: p.conway = parse_conway(text); break;
    }
    return p;
}

// Any presentation as a planar diagram.
inline PlanarDiagram to_planar(const Presentation& p) {
    if (p.pd) return *p.pd;
    if (p.gauss) {
        if (!is_realizable(*p.gauss)) throw SemanticError("Gauss code is not realizable");
        if (p.gauss->seq.empty()) return PlanarDiagram{{}, 1};
        return to_pd(p.gauss->link());
    }
    if (p.braid) return braid_closure(*p.braid);
    if (p.conway) return rational_closure(*p.conway);
    throw SemanticError("empty presentation");
}

inline PlanarDiagram parse_planar(Format f, const std::string& text) { return to_planar(parse_diagram(f, text)); }

// -------------------------------------------------- Reidemeister moves

namespace reidemeister {

// position of the arc leaving passage j of component comp, in to_pd numbering
struct ArcPos {
    int comp, idx;
};

inline std::map<int, ArcPos> arc_positions(const LinkCode& L) {
    std::map<int, ArcPos> m;
    int base = 1;
    for (int c = 0; c < L.component_count(); ++c) {
        int n = static_cast<int>(L.comps[c].size());
        for (int j = 0; j < n; ++j) m[base + j] = {c, j};
        base += n;
    }
    return m;
}

// Adds a kink on the arc with the given label.
inline PlanarDiagram r1(const PlanarDiagram& d, int arc, int sign, bool first_over) {
    auto L = to_link_code(d);
    auto pos = arc_positions(L).at(arc);
    int x = L.crossing_count();
    L.sign.push_back(sign);
    auto& comp = L.comps[pos.comp];
    comp.insert(comp.begin() + pos.idx + 1, {Passage{x, first_over}, Passage{x, !first_over}});
    return to_pd(L);
}

// Pushes arc e over (or under) arc f across a common face, creating a bigon.
inline std::optional<PlanarDiagram> r2(const PlanarDiagram& d, int e, int f, bool e_over) {
    if (e == f) return std::nullopt;
    auto L0 = to_link_code(d);
    auto pos = arc_positions(L0);
    auto pe = pos.at(e), pf = pos.at(f);
    for (int s : {1, -1})
        for (int order = 0; order < 2; ++order) {
            LinkCode L = L0;
            int x = L.crossing_count(), y = x + 1;
            L.sign.push_back(s);
            L.sign.push_back(-s);
            // insert on the later position first so indices stay valid
            std::vector<std::pair<ArcPos, std::vector<Passage>>> ins{
                {pe, {Passage{x, e_over}, Passage{y, e_over}}},
                {pf, order == 0 ? std::vector<Passage>{{x, !e_over}, {y, !e_over}}
                                : std::vector<Passage>{{y, !e_over}, {x, !e_over}}}};
            if (ins[0].first.comp == ins[1].first.comp && ins[0].first.idx < ins[1].first.idx)
                std::swap(ins[0], ins[1]);
            for (auto& [p, ps] : ins) {
                auto& comp = L.comps[p.comp];
                comp.insert(comp.begin() + p.idx + 1, ps.begin(), ps.end());
            }
            auto r = to_pd(L);
            if (!is_planar(r)) continue;
            for (auto& fc : faces(r)) {
                if (fc.size() != 2) continue;
                std::set<int> xsx{fc[0].first, fc[1].first};
                if (xsx == std::set<int>{x, y}) return r;
            }
        }
    return std::nullopt;
}

// Third move on a triangular face, when one strand lies over both others.
inline std::optional<PlanarDiagram> r3(const PlanarDiagram& d, const std::vector<std::pair<int, int>>& face) {
    if (face.size() != 3) return std::nullopt;
    std::set<int> xs;
    for (auto [x, s] : face) xs.insert(x);
    if (xs.size() != 3) return std::nullopt;
    auto L = to_link_code(d);
    auto pos = arc_positions(L);
    // each face edge is an arc joining two consecutive passages of one strand
    std::vector<ArcPos> edges;
    std::vector<int> over_count;
    for (auto [x, s] : face) {
        auto p = pos.at(d.crossings[x].arc[s]);
        auto& comp = L.comps[p.comp];
        int n = static_cast<int>(comp.size());
        if (n < 2) return std::nullopt;
        const auto& a = comp[p.idx];
        const auto& b = comp[(p.idx + 1) % n];
        if (!xs.count(a.crossing) || !xs.count(b.crossing) || a.crossing == b.crossing) return std::nullopt;
        edges.push_back(p);
        over_count.push_back(int(a.over) + int(b.over));
    }
    std::multiset<int> oc(over_count.begin(), over_count.end());
    if (oc != std::multiset<int>{0, 1, 2}) return std::nullopt;
    for (auto& p : edges) {
        auto& comp = L.comps[p.comp];
        int n = static_cast<int>(comp.size());
        std::swap(comp[p.idx], comp[(p.idx + 1) % n]);
    }
    auto r = to_pd(L);
    if (!is_planar(r)) return std::nullopt;
    return r;
}

// Applies `moves` random Reidemeister moves (mostly increasing).
inline PlanarDiagram perturb(PlanarDiagram d, std::mt19937_64& rng, int moves) {
    for (int m = 0; m < moves; ++m) {
        int c = d.crossing_count();
        if (c == 0) {
            d = PlanarDiagram{{{{1, 1, 2, 2}, 1}}, d.free_loops - 1};
            continue;
        }
        int kind = static_cast<int>(rng() % 3);
        if (kind == 0) {
            int arc = 1 + static_cast<int>(rng() % (2 * c));
            d = r1(d, arc, rng() % 2 ? 1 : -1, rng() % 2);
        } else if (kind == 1) {
            auto fs = faces(d);
            auto& f = fs[rng() % fs.size()];
            if (f.size() < 2) continue;
            auto i = rng() % f.size(), j = rng() % f.size();
            if (i == j) j = (i + 1) % f.size();
            int e = d.crossings[f[i].first].arc[f[i].second];
            int g = d.crossings[f[j].first].arc[f[j].second];
            if (auto r = r2(d, e, g, rng() % 2)) d = *r;
        } else {
            auto fs = faces(d);
            std::vector<std::vector<std::pair<int, int>>> tri;
            for (auto& f : fs)
                if (f.size() == 3) tri.push_back(f);
            if (tri.empty()) continue;
            if (auto r = r3(d, tri[rng() % tri.size()])) d = *r;
        }
    }
    return d;
}

}  // namespace reidemeister

}  // namespace knotpos
