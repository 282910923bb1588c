#pragma once
// Gauss sums: configuration matching, v2, v3 and per-arrow statistics.

#include "knotpos/gauss.hpp"

namespace knotpos {

// One endpoint of a pattern chord. Undirected chords use End::Any.
enum class End { Tail, Head, Any };

struct ConfigurationPattern {
    int chords = 0;
    // cyclic (or, if based, linear from the basepoint) endpoint sequence
    std::vector<std::pair<int, End>> seq;
    bool based = false;

    static ConfigurationPattern parse(const std::string& word, bool based) {
        // letters name chords; 'a'..'z' undirected, 't'/'h' suffix for direction
        ConfigurationPattern p;
        p.based = based;
        std::map<char, int> id;
        for (std::size_t i = 0; i < word.size(); ++i) {
            char ch = word[i];
            if (ch == ' ') continue;
            End e = End::Any;
            if (i + 1 < word.size() && (word[i + 1] == '>' || word[i + 1] == '<')) {
                e = word[i + 1] == '<' ? End::Tail : End::Head;
                ++i;
            }
            auto [it, fresh] = id.emplace(ch, static_cast<int>(id.size()));
            p.seq.push_back({it->second, e});
        }
        p.chords = static_cast<int>(id.size());
        return p;
    }
};

// Standard patterns. In the words, "x<" marks the tail and "x>" the head of chord x.
inline const ConfigurationPattern& pattern_33() {
    static const auto p = ConfigurationPattern::parse("abcabc", false);
    return p;
}
inline const ConfigurationPattern& pattern_420() {
    static const auto p = ConfigurationPattern::parse("c p> q> c q< p<", false);
    return p;
}
inline const ConfigurationPattern& pattern_linked() {
    static const auto p = ConfigurationPattern::parse("q> p> q< p<", false);
    return p;
}
// based two-arrow patterns of the symmetrized v2 formula
inline const ConfigurationPattern& pattern_v2_a() {
    static const auto p = ConfigurationPattern::parse("p> q< p< q>", true);
    return p;
}
inline const ConfigurationPattern& pattern_v2_b() {
    static const auto p = ConfigurationPattern::parse("p< q> p> q<", true);
    return p;
}

using Match = std::vector<int>;  // pattern chord -> arrow id

namespace detail {

inline bool match_sequence(const std::vector<std::pair<int, bool>>& got, const ConfigurationPattern& p,
                           int shift, Match& m) {
    int n = static_cast<int>(got.size());
    std::fill(m.begin(), m.end(), -1);
    std::map<int, int> back;
    for (int i = 0; i < n; ++i) {
        auto [chord, end] = p.seq[(i + shift) % n];
        auto [arrow, head] = got[i];
        if (end == End::Head && !head) return false;
        if (end == End::Tail && head) return false;
        if (m[chord] == -1) {
            if (back.count(arrow)) return false;
            m[chord] = arrow;
            back[arrow] = chord;
        } else if (m[chord] != arrow) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

// All arrow subsets forming the pattern, each subset once. The basepoint of
// g sits before position 0.
inline std::vector<Match> match_config(const GaussDiagram& g, const ConfigurationPattern& p) {
    std::vector<Match> out;
    int k = p.chords, c = g.arrow_count();
    if (k == 0 || k > c) return out;
    auto ends = g.endpoints();
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    Match m(k);
    while (true) {
        std::set<int> chosen(pick.begin(), pick.end());
        std::vector<std::pair<int, bool>> got;
        for (auto& e : ends)
            if (chosen.count(e.first)) got.push_back(e);
        int shifts = p.based ? 1 : 2 * k;
        for (int s = 0; s < shifts; ++s)
            if (detail::match_sequence(got, p, s, m)) {
                out.push_back(m);
                break;
            }
        // next combination
        int i = k - 1;
        while (i >= 0 && pick[i] == c - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

inline Int weight_product(const GaussDiagram& g, const Match& m) {
    Int w = 1;
    for (int a : m) w *= g.arrows[a].sign;
    return w;
}

// v2 with the basepoint before position 0; equal for all basepoints on
// realizable diagrams
inline Int v2_unchecked(const GaussDiagram& g) {
    Rat s = 0;
    for (auto& m : match_config(g, pattern_v2_a())) s += Rat(weight_product(g, m));
    for (auto& m : match_config(g, pattern_v2_b())) s += Rat(weight_product(g, m));
    s /= 2;
    if (denominator(s) != 1) throw std::logic_error("v2 Gauss sum is not an integer");
    return numerator(s);
}

inline Int v3_unchecked(const GaussDiagram& g) {
    Rat s = 0;
    for (auto& m : match_config(g, pattern_33())) s += Rat(weight_product(g, m));
    for (auto& m : match_config(g, pattern_420())) s += Rat(weight_product(g, m));
    for (auto& m : match_config(g, pattern_linked()))
        s += Rat(g.arrows[m[0]].sign + g.arrows[m[1]].sign) / 2;
    if (denominator(s) != 1) throw std::logic_error("v3 Gauss sum is not an integer");
    return numerator(s);
}

inline Int v2_gauss(const GaussDiagram& g) {
    if (!is_realizable(g)) throw SemanticError("v2 needs a realizable Gauss diagram");
    return v2_unchecked(g);
}

inline Int v3_gauss(const GaussDiagram& g) {
    if (!is_realizable(g)) throw SemanticError("v3 needs a realizable Gauss diagram");
    return v3_unchecked(g);
}

// v2 from the based pattern of the first kind alone
inline Int v2_based_single(const GaussDiagram& g) {
    Int s = 0;
    for (auto& m : match_config(g, pattern_v2_a())) s += weight_product(g, m);
    return s;
}

struct ArrowStatistics {
    std::vector<int> linked;         // l_i
    std::vector<int> distinguished;  // pairs in which arrow i is distinguished
};

// In a linked pair {p, q}, p is distinguished when the q-endpoint met next
// after the head of p is the tail of q. This reading is cyclic, so the
// basepoint does not change the counts.
inline bool distinguished(const GaussDiagram& g, int p, int q) {
    int n = g.point_count();
    int hp = g.arrows[p].head;
    int dt = ((g.arrows[q].tail - hp) % n + n) % n;
    int dh = ((g.arrows[q].head - hp) % n + n) % n;
    return dt < dh;
}

inline ArrowStatistics arrow_statistics(const GaussDiagram& g, int basepoint = 0) {
    GaussDiagram h = g.rotated(basepoint);
    ArrowStatistics s;
    s.linked.assign(h.arrow_count(), 0);
    s.distinguished.assign(h.arrow_count(), 0);
    for (int p = 0; p < h.arrow_count(); ++p)
        for (int q = 0; q < h.arrow_count(); ++q) {
            if (p == q || !h.linked(p, q)) continue;
            s.linked[p]++;
            if (distinguished(h, p, q)) s.distinguished[p]++;
        }
    return s;
}

}  // namespace knotpos
