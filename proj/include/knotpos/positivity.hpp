#pragma once
// Obstructions to positivity and braid positivity, a bounded search for
// positive braid words, and a generator of positive diagrams.

#include "knotpos/moves.hpp"

namespace knotpos {

struct KnotInvariants {
    int crossings = 0;
    Laurent jones;    // V(t)
    Laurent2 homfly;  // P(l, m)
    Laurent conway;   // nabla(z)
    Laurent alexander;
    Int v2 = 0, v3 = 0;
    std::optional<int> signature;
    bool has_homfly = false;
};

// All polynomial data of a knot diagram. HOMFLY is skipped past the budget;
// v2, v3 come from the Gauss sums and are checked against the Jones polynomial.
inline KnotInvariants compute_invariants(const PlanarDiagram& d, int skein_budget = 16, bool with_signature = true) {
    if (component_count(d) != 1) throw SemanticError("invariants are computed for knots only");
    KnotInvariants k;
    k.crossings = d.crossing_count();
    k.jones = jones(d);
    auto g = to_gauss(d);
    k.v2 = v2_unchecked(g);
    k.v3 = v3_unchecked(g);
    auto [j2, j3] = vassiliev_from_jones(k.jones);
    if (j2 != k.v2 || j3 != k.v3) throw std::logic_error("Gauss sums disagree with the Jones polynomial");
    if (d.crossing_count() <= skein_budget) {
        k.homfly = homfly(d, skein_budget);
        k.has_homfly = true;
        k.conway = conway_from_homfly(k.homfly);
    } else {
        k.conway = conway(d);
    }
    k.alexander = alexander(k.conway);
    if (with_signature) k.signature = seifert_signature(d, false).signature;
    return k;
}

enum class Verdict { Passes, Violated, Inapplicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Passes: return "passes";
        case Verdict::Violated: return "violated";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

struct Obstruction {
    std::string name;
    std::string instance;  // the inequality with the computed numbers
    Verdict verdict = Verdict::Inapplicable;
    bool braid_only = false;
};

enum class Overall { NotPositive, NotBraidPositive, Consistent };

inline const char* overall_name(Overall o) {
    switch (o) {
        case Overall::NotPositive: return "not-positive";
        case Overall::NotBraidPositive: return "not-braid-positive";
        case Overall::Consistent: return "consistent";
    }
    return "?";
}

struct ObstructionReport {
    std::vector<Obstruction> entries;
    Overall overall = Overall::Consistent;
    std::string caveat;

    void settle() {
        overall = Overall::Consistent;
        for (auto& e : entries)
            if (e.verdict == Verdict::Violated && !e.braid_only) {
                overall = Overall::NotPositive;
                return;
            }
        for (auto& e : entries)
            if (e.verdict == Verdict::Violated) overall = Overall::NotBraidPositive;
    }
    const Obstruction* find(const std::string& name) const {
        for (auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

namespace detail {

inline std::string s(const Rat& v) { return to_str(v); }
// integers and integer expression templates
template <class T>
std::string s(const T& v) {
    if constexpr (std::is_integral_v<T>)
        return std::to_string(v);
    else
        return Int(v).str();
}

inline void add(ObstructionReport& r, std::string name, std::string inst, bool holds, bool braid_only = false) {
    r.entries.push_back({std::move(name), std::move(inst), holds ? Verdict::Passes : Verdict::Violated, braid_only});
}

inline void skip(ObstructionReport& r, std::string name, std::string why, bool braid_only = false) {
    r.entries.push_back({std::move(name), std::move(why), Verdict::Inapplicable, braid_only});
}

inline const std::vector<Rat>& morton_cromwell_points() {
    static const std::vector<Rat> p{Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
    return p;
}

}  // namespace detail

// Checks every positive knot passes. The crossing number of a positive
// reduced diagram is bounded below by span V and above by v3.
inline ObstructionReport positivity_obstructions(const KnotInvariants& k) {
    using detail::s;
    ObstructionReport r;
    r.caveat = "violations certify non-positivity; passing every check does not identify the knot";
    const auto& V = k.jones;
    bool trivial = V == Laurent(1);
    int span = V.max_deg() - V.min_deg();
    const Int &v2 = k.v2, &v3 = k.v3;
    if (trivial) {
        detail::skip(r, "nontrivial", "V = 1: the unknot is positive (empty diagram)");
        r.settle();
        return r;
    }
    detail::add(r, "v3-positive", "v3 = " + s(v3) + " > 0", v3 > 0);
    detail::add(r, "v2-positive", "v2 = " + s(v2) + " > 0", v2 > 0);
    detail::add(r, "crossings-at-most-v3", "span V = " + s(span) + " <= v3 = " + s(v3), Int(span) <= v3);
    detail::add(r, "v2-quarter-crossings", "4 v2 = " + s(4 * v2) + " >= span V = " + s(span), 4 * v2 >= span);
    detail::add(r, "5v2-maxdegV", "5 v2 = " + s(5 * v2) + " >= max deg V = " + s(V.max_deg()), 5 * v2 >= V.max_deg());
    detail::add(r, "v3-vs-v2", "3 v3 = " + s(3 * v3) + " >= 8 v2 = " + s(8 * v2), 3 * v3 >= 8 * v2);
    // c >= 2 v2^2 / (v3 - v2) with c <= v3
    if (v3 > v2)
        detail::add(r, "crossings-from-v2-v3", "2 v2^2 = " + s(2 * v2 * v2) + " <= v3 (v3 - v2) = " + s(v3 * (v3 - v2)),
                    2 * v2 * v2 <= v3 * (v3 - v2));
    else
        detail::skip(r, "crossings-from-v2-v3", "v3 <= v2");
    // 3/4 v3 <= v2 c with c <= v3
    detail::add(r, "v3-vs-v2-crossings", "3 v3 = " + s(3 * v3) + " <= 4 v2 v3 = " + s(4 * v2 * v3), 3 * v3 <= 4 * v2 * v3);
    if (k.has_homfly) {
        const auto& P = k.homfly;
        detail::add(r, "v3-maxdeg-m", "v3 = " + s(v3) + " >= 2 max deg_m P = " + s(2 * P.max_deg_m()),
                    v3 >= 2 * P.max_deg_m());
        detail::add(r, "cromwell-degrees", "min deg_l P = " + s(P.min_deg_l()) + " = max deg_m P = " + s(P.max_deg_m()),
                    P.min_deg_l() == P.max_deg_m());
        bool mc = true;
        std::string where;
        for (auto& t : detail::morton_cromwell_points())
            for (auto& [b, cf] : morton_cromwell_sample(P, t))
                if (cf < 0 && mc) {
                    mc = false;
                    where = " (t = " + to_str(t) + ", z^" + std::to_string(b) + " coefficient " + to_str(cf) + ")";
                }
        detail::add(r, "morton-cromwell", "P(it, iz) nonnegative at t in {1/4, 1/2, 3/4, 1}" + where, mc);
    } else {
        detail::skip(r, "v3-maxdeg-m", "HOMFLY not computed");
        detail::skip(r, "cromwell-degrees", "HOMFLY not computed");
        detail::skip(r, "morton-cromwell", "HOMFLY not computed");
    }
    bool conway_pos = true;
    for (auto& [e, cf] : k.conway.c) conway_pos = conway_pos && cf > 0;
    detail::add(r, "conway-positive", "nabla = " + k.conway.str("z") + " has positive coefficients", conway_pos);
    if (k.signature) detail::add(r, "signature-positive", "sigma = " + s(*k.signature) + " > 0", *k.signature > 0);
    r.settle();
    return r;
}

// Positivity checks plus the ones special to positive braids (knot case).
inline ObstructionReport braid_positivity_obstructions(const KnotInvariants& k) {
    using detail::s;
    ObstructionReport r = positivity_obstructions(k);
    if (k.jones == Laurent(1)) return r;
    const auto& V = k.jones;
    int span = V.max_deg() - V.min_deg();
    int mindeg = V.min_deg();
    detail::add(r, "fiedler-mindeg", "min deg V = " + s(mindeg) + " > 0", mindeg > 0, true);
    detail::add(r, "fiedler-mincf", "min cf V = " + s(V.coef(mindeg)) + " = 1", V.coef(mindeg) == 1, true);
    detail::add(r, "mindeg-quarter-crossings", "4 min deg V = " + s(4 * mindeg) + " >= span V = " + s(span),
                4 * mindeg >= span, true);
    const auto& D = k.alexander;
    Int lead = D.coef(D.max_deg());
    detail::add(r, "monic-alexander", "leading coefficient of Delta = " + s(lead), lead == 1 || lead == -1, true);
    detail::add(r, "genus-equals-mindeg", "max deg Delta = " + s(D.max_deg()) + " = min deg V = " + s(mindeg),
                D.max_deg() == mindeg, true);
    r.settle();
    return r;
}

// ------------------------------------------------------- braid search

struct BraidDecision {
    enum class Answer { Yes, No, Unknown } answer = Answer::Unknown;
    std::optional<BraidWord> witness;
    ObstructionReport report;
    long words_tried = 0;
};

inline const char* answer_name(BraidDecision::Answer a) {
    switch (a) {
        case BraidDecision::Answer::Yes: return "yes";
        case BraidDecision::Answer::No: return "no";
        case BraidDecision::Answer::Unknown: return "unknown";
    }
    return "?";
}

namespace detail {

// true when w is the lexicographically least of its rotations
inline bool least_rotation(const std::vector<int>& w) {
    std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            int a = w[(i + r) % n], b = w[i];
            if (a < b) return false;
            if (a > b) break;
        }
    return true;
}

}  // namespace detail

// Searches positive braid words of exponent sum 2 min deg V + n - 1 (at most
// 4 min deg V letters) whose closures match K on V, P and the signature.
// Matching invariants is a polynomial-level certificate, not an isotopy.
inline BraidDecision decide_braid_positive(const PlanarDiagram& d, long budget = 2'000'000, int skein_budget = 16) {
    BraidDecision out;
    auto k = compute_invariants(d, skein_budget);
    out.report = braid_positivity_obstructions(k);
    if (out.report.overall != Overall::Consistent) {
        out.answer = BraidDecision::Answer::No;
        return out;
    }
    int m = k.jones.min_deg();
    if (k.jones == Laurent(1)) {
        out.answer = BraidDecision::Answer::Yes;
        out.witness = BraidWord{1, {}};
        return out;
    }
    for (int n = 2; n <= 2 * m + 1; ++n) {
        int len = 2 * m + n - 1;
        if (len > 4 * m || len < 2 * (n - 1)) continue;
        std::vector<int> w(len, 1);
        while (true) {
            if (++out.words_tried > budget) {
                out.answer = BraidDecision::Answer::Unknown;
                return out;
            }
            std::vector<int> count(n, 0);
            for (int l : w) count[l]++;
            bool each_twice = true;
            for (int i = 1; i < n; ++i) each_twice = each_twice && count[i] >= 2;
            BraidWord b{n, w};
            if (each_twice && detail::least_rotation(w) && b.closure_components() == 1) {
                auto cl = braid_closure(b);
                if (jones(cl) == k.jones) {
                    auto kb = compute_invariants(cl, skein_budget);
                    if (kb.homfly == k.homfly && kb.signature == k.signature) {
                        out.answer = BraidDecision::Answer::Yes;
                        out.witness = b;
                        return out;
                    }
                }
            }
            // next word in lexicographic order
            int i = len - 1;
            while (i >= 0 && w[i] == n - 1) w[i--] = 1;
            if (i < 0) break;
            w[i]++;
        }
    }
    out.answer = BraidDecision::Answer::No;
    return out;
}

// --------------------------------------------------------- positive corpus

struct CorpusItem {
    PlanarDiagram diagram;
    std::string family;       // braid, rational, pretzel, torus, sum
    std::string construction; // the defining data in text form
};

namespace detail {

// Mirrors a diagram whose crossings all share one sign so that they are positive.
inline std::optional<PlanarDiagram> make_positive(const PlanarDiagram& d) {
    if (d.crossing_count() == 0 || component_count(d) != 1) return std::nullopt;
    int s = d.crossings[0].sign;
    for (auto& x : d.crossings)
        if (x.sign != s) return std::nullopt;
    return s > 0 ? d : mirror(d);
}

inline std::string join(const std::vector<int>& v) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? " " : "") + std::to_string(v[i]);
    return r;
}

}  // namespace detail

// Deterministic mix of positive knot diagrams with lo..hi crossings;
// `only` restricts to one family.
inline std::vector<CorpusItem> generate_positive_corpus(std::uint64_t seed, int count, int lo = 3, int hi = 16,
                                                        const std::string& only = "") {
    std::mt19937_64 rng(seed);
    auto uni = [&](int a, int b) { return a + static_cast<int>(rng() % static_cast<std::uint64_t>(b - a + 1)); };
    std::vector<CorpusItem> out;
    auto fits = [&](const PlanarDiagram& d) { return d.crossing_count() >= lo && d.crossing_count() <= hi; };
    auto one = [&](int budget_hi) -> std::optional<CorpusItem> {
        int family = only == "torus" || only == "braid" ? 0
                     : only == "rational"                ? 1
                     : only == "pretzel"                 ? 2
                                                         : uni(0, 3);
        if (family == 0) {
            int n = only == "torus" ? 2 : only == "braid" ? uni(3, 5) : uni(2, 5);
            int len = uni(std::max(lo, n - 1), std::max(lo, std::min(budget_hi, 3 * n + 6)));
            BraidWord b{n, {}};
            for (int i = 0; i < len; ++i) b.letters.push_back(uni(1, n - 1));
            if (b.closure_components() != 1) return std::nullopt;
            return CorpusItem{braid_closure(b), n == 2 ? "torus" : "braid", serialize(b)};
        }
        if (family == 1) {
            ConwayTangle t;
            int parts = uni(1, 4);
            for (int i = 0; i < parts; ++i) t.entries.push_back(uni(1, 4));
            auto d = detail::make_positive(rational_closure(t));
            if (!d) return std::nullopt;
            return CorpusItem{*d, "rational", serialize(t)};
        }
        if (family == 2) {
            std::vector<int> cols;
            int parts = uni(3, 4);
            for (int i = 0; i < parts; ++i) cols.push_back(uni(1, 5));
            auto d = detail::make_positive(pretzel_closure(cols));
            if (!d) return std::nullopt;
            return CorpusItem{*d, "pretzel", "P(" + detail::join(cols) + ")"};
        }
        return std::nullopt;
    };
    long guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 1000L * (count + 10)) throw std::logic_error("positive corpus generation stalled");
        std::optional<CorpusItem> item;
        if ((only.empty() || only == "sum") && (only == "sum" || uni(0, 4) == 0)) {
            auto a = one(hi / 2), b = one(hi / 2);
            if (a && b)
                item = CorpusItem{connected_sum(a->diagram, b->diagram), "sum",
                                  a->family + "[" + a->construction + "] # " + b->family + "[" + b->construction + "]"};
        } else {
            item = one(hi);
        }
        if (item && fits(item->diagram)) out.push_back(std::move(*item));
    }
    return out;
}

}  // namespace knotpos
