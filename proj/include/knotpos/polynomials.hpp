#pragma once
// Jones (Kauffman bracket), HOMFLY and Conway (skein), derived invariants.

#include "knotpos/diagram.hpp"

#include <unordered_map>

namespace knotpos {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- bracket

namespace detail {

// boundary matching -> bracket coefficient in A
using BracketState = std::vector<std::pair<int, int>>;

struct BracketAccumulator {
    std::map<BracketState, Laurent> states;

    // glue a strand joining labels u, v into every state
    static int glue(std::map<int, int>& open, int u, int v) {
        if (u == v) return 1;
        auto iu = open.find(u);
        if (iu != open.end() && iu->second == v) {
            open.erase(u);
            open.erase(v);
            return 1;
        }
        int eu = u, ev = v;
        if (iu != open.end()) {
            eu = iu->second;
            open.erase(iu);
            open.erase(eu);
        }
        auto iv = open.find(v);
        if (iv != open.end()) {
            ev = iv->second;
            open.erase(iv);
            open.erase(ev);
        }
        open[eu] = ev;
        open[ev] = eu;
        return 0;
    }
};

}  // namespace detail

// Unnormalized Kauffman bracket in A, with <unknot> = 1.
inline Laurent kauffman_bracket(const PlanarDiagram& d) {
    const Laurent loop = Laurent::mono(2, -1) + Laurent::mono(-2, -1);  // -A^2 - A^-2
    int c = d.crossing_count();
    std::map<detail::BracketState, Laurent> states;
    states[{}] = Laurent(1);
    std::vector<char> done(c, 0);
    std::set<int> boundary;
    for (int step = 0; step < c; ++step) {
        // greedy: the crossing sharing most labels with the current boundary
        int best = -1, score = -1;
        for (int x = 0; x < c; ++x) {
            if (done[x]) continue;
            int s = 0;
            for (int a : d.crossings[x].arc) s += boundary.count(a);
            if (s > score) {
                score = s;
                best = x;
            }
        }
        done[best] = 1;
        const auto& a = d.crossings[best].arc;
        for (int l : a) {
            if (boundary.count(l))
                boundary.erase(l);
            else
                boundary.insert(l);
        }
        std::map<detail::BracketState, Laurent> next;
        for (auto& [st, coef] : states) {
            for (int smooth = 0; smooth < 2; ++smooth) {
                std::map<int, int> open;
                for (auto [u, v] : st) {
                    open[u] = v;
                    open[v] = u;
                }
                int loops = 0;
                if (smooth == 0) {
                    loops += detail::BracketAccumulator::glue(open, a[0], a[1]);
                    loops += detail::BracketAccumulator::glue(open, a[2], a[3]);
                } else {
                    loops += detail::BracketAccumulator::glue(open, a[0], a[3]);
                    loops += detail::BracketAccumulator::glue(open, a[1], a[2]);
                }
                detail::BracketState ns;
                for (auto [u, v] : open)
                    if (u < v) ns.push_back({u, v});
                Laurent t = coef * Laurent::mono(smooth == 0 ? 1 : -1);
                for (int i = 0; i < loops; ++i) t *= loop;
                next[ns] += t;
            }
        }
        states.clear();
        for (auto& [st, coef] : next)
            if (!coef.is_zero()) states[st] = std::move(coef);
    }
    Laurent total = states.count({}) ? states[{}] : Laurent();
    // every closed loop contributed a factor; normalize so a single loop is 1
    for (int i = 0; i < d.free_loops; ++i) total *= loop;
    return total.divided_by(loop);
}

// Jones polynomial in the variable t^(1/2): exponents are in half units.
inline Laurent jones_half(const PlanarDiagram& d) {
    Laurent br = kauffman_bracket(d);
    int w = d.writhe();
    // (-A^3)^(-w)
    Laurent f = Laurent::mono(-3 * w, (w % 2 == 0) ? 1 : -1);
    Laurent ka = br * f;
    Laurent v;
    for (auto& [e, k] : ka.c) {
        if (e % 2 != 0) throw std::logic_error("bracket exponent parity");
        v.add_term(-e / 2, k);  // t = A^-4, so A^e = t^(-e/4) = s^(-e/2)
    }
    return v;
}

inline Laurent halves_to_integral(const Laurent& h) {
    Laurent r;
    for (auto& [e, k] : h.c) {
        if (e % 2 != 0) throw SemanticError("polynomial has half-integer exponents");
        r.add_term(e / 2, k);
    }
    return r;
}

// Jones polynomial of a knot in t.
inline Laurent jones(const PlanarDiagram& d) { return halves_to_integral(jones_half(d)); }

// ----------------------------------------------------------------- skein

namespace detail {

// Crossing ids in first-appearance order; component order and rotation kept.
inline std::string code_key(const LinkCode& L) {
    std::map<int, int> id;
    std::string key;
    for (auto& comp : L.comps) {
        key += '|';
        for (auto& p : comp) {
            auto [it, fresh] = id.emplace(p.crossing, static_cast<int>(id.size()));
            key += std::to_string(it->second);
            key += p.over ? (L.sign[p.crossing] > 0 ? 'O' : 'o') : 'u';
        }
    }
    return key;
}

inline LinkCode drop_crossing(LinkCode L, int x) {
    for (auto& comp : L.comps)
        comp.erase(std::remove_if(comp.begin(), comp.end(), [&](const Passage& p) { return p.crossing == x; }),
                   comp.end());
    L.sign.erase(L.sign.begin() + x);
    for (auto& comp : L.comps)
        for (auto& p : comp)
            if (p.crossing > x) p.crossing--;
    return L;
}

// removes kinks: a crossing met twice in a row
inline LinkCode strip_kinks(LinkCode L) {
    bool again = true;
    while (again) {
        again = false;
        for (auto& comp : L.comps) {
            int n = static_cast<int>(comp.size());
            for (int j = 0; j < n && n >= 2; ++j)
                if (comp[j].crossing == comp[(j + 1) % n].crossing) {
                    L = drop_crossing(L, comp[j].crossing);
                    again = true;
                    break;
                }
            if (again) break;
        }
    }
    return L;
}

// Oriented smoothing of crossing x.
inline LinkCode smooth(const LinkCode& L, int x) {
    std::vector<std::pair<int, int>> at;
    for (int c = 0; c < L.component_count(); ++c)
        for (int j = 0; j < static_cast<int>(L.comps[c].size()); ++j)
            if (L.comps[c][j].crossing == x) at.push_back({c, j});
    LinkCode R;
    R.sign = L.sign;
    auto rotated = [&](int c, int j) {
        // passages after position j up to (excluding) the next visit of x
        std::vector<Passage> v;
        const auto& comp = L.comps[c];
        int n = static_cast<int>(comp.size());
        for (int i = 1; i < n; ++i) v.push_back(comp[(j + i) % n]);
        return v;
    };
    if (at[0].first == at[1].first) {
        int c = at[0].first, i = at[0].second, j = at[1].second;
        const auto& comp = L.comps[c];
        std::vector<Passage> p(comp.begin() + i + 1, comp.begin() + j);
        std::vector<Passage> q(comp.begin() + j + 1, comp.end());
        q.insert(q.end(), comp.begin(), comp.begin() + i);
        for (int k = 0; k < L.component_count(); ++k)
            if (k != c)
                R.comps.push_back(L.comps[k]);
            else {
                R.comps.push_back(p);
                R.comps.push_back(q);
            }
    } else {
        int a = at[0].first, b = at[1].first;
        auto pa = rotated(a, at[0].second), pb = rotated(b, at[1].second);
        pa.insert(pa.end(), pb.begin(), pb.end());
        for (int k = 0; k < L.component_count(); ++k)
            if (k == a)
                R.comps.push_back(pa);
            else if (k != b)
                R.comps.push_back(L.comps[k]);
    }
    return drop_crossing(R, x);
}

inline LinkCode switch_crossing(LinkCode L, int x) {
    for (auto& comp : L.comps)
        for (auto& p : comp)
            if (p.crossing == x) p.over = !p.over;
    L.sign[x] = -L.sign[x];
    return L;
}

// first crossing whose first visit (in component order) is an under passage
inline int first_under_first(const LinkCode& L) {
    std::vector<char> seen(L.sign.size(), 0);
    for (auto& comp : L.comps)
        for (auto& p : comp) {
            if (seen[p.crossing]) continue;
            seen[p.crossing] = 1;
            if (!p.over) return p.crossing;
        }
    return -1;
}

// Skein evaluation over a polynomial ring.
//   plus  = a * minus + b * zero   (for a positive crossing)
//   minus = a' * plus + b' * zero  (for a negative crossing)
// descending unlinks of r components evaluate to delta^(r-1)
template <class Poly>
struct SkeinRules {
    Poly plus_from_minus, plus_from_zero, minus_from_plus, minus_from_zero, delta;
};

template <class Poly>
class SkeinEngine {
public:
    SkeinEngine(SkeinRules<Poly> r, std::size_t node_budget) : rules_(std::move(r)), budget_(node_budget) {}

    Poly eval(const LinkCode& in) {
        LinkCode L = strip_kinks(in);
        auto key = code_key(L);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++nodes_ > budget_) throw BudgetExceeded("skein recursion budget exceeded");
        Poly result;
        int x = first_under_first(L);
        if (x < 0) {
            result = Poly(1);
            for (int i = 1; i < L.component_count(); ++i) result *= rules_.delta;
        } else {
            Poly sw = eval(switch_crossing(L, x));
            Poly sm = eval(smooth(L, x));
            if (L.sign[x] > 0)
                result = rules_.plus_from_minus * sw + rules_.plus_from_zero * sm;
            else
                result = rules_.minus_from_plus * sw + rules_.minus_from_zero * sm;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }
    std::size_t nodes() const { return nodes_; }

private:
    SkeinRules<Poly> rules_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::unordered_map<std::string, Poly> memo_;
};

}  // namespace detail

inline std::size_t default_skein_nodes() { return 20'000'000; }

// HOMFLY polynomial, l^-1 P(L+) + l P(L-) + m P(L0) = 0, P(unknot) = 1.
inline Laurent2 homfly(const LinkCode& L, int crossing_budget = 16) {
    if (L.crossing_count() > crossing_budget)
        throw BudgetExceeded("HOMFLY crossing budget " + std::to_string(crossing_budget) + " exceeded");
    detail::SkeinRules<Laurent2> r{
        Laurent2::mono(2, 0, -1),   // P+ = -l^2 P- - l m P0
        Laurent2::mono(1, 1, -1),
        Laurent2::mono(-2, 0, -1),  // P- = -l^-2 P+ - l^-1 m P0
        Laurent2::mono(-1, 1, -1),
        Laurent2::mono(1, -1, -1) + Laurent2::mono(-1, -1, -1),  // -(l + l^-1) / m
    };
    detail::SkeinEngine<Laurent2> eng(r, default_skein_nodes());
    return eng.eval(L);
}
inline Laurent2 homfly(const PlanarDiagram& d, int crossing_budget = 16) {
    return homfly(to_link_code(d), crossing_budget);
}

// Conway polynomial in z, by its own skein recursion.
inline Laurent conway(const LinkCode& L) {
    detail::SkeinRules<Laurent> r{Laurent(1), Laurent::mono(1), Laurent(1), Laurent::mono(1, -1), Laurent()};
    detail::SkeinEngine<Laurent> eng(r, default_skein_nodes());
    return eng.eval(L);
}
inline Laurent conway(const PlanarDiagram& d) { return conway(to_link_code(d)); }

// ------------------------------------------------------- specializations

// i^k as a sign, requiring k even
inline int i_power_sign(int k) {
    if (k % 2 != 0) throw std::logic_error("odd power of i in a real specialization");
    return ((k / 2) % 2 == 0) ? 1 : -1;
}

// V(t) = P(l = i t, m = i (t^1/2 - t^-1/2)), in half units of t
inline Laurent jones_from_homfly(const Laurent2& P) {
    Laurent s_minus = Laurent::mono(1) - Laurent::mono(-1);
    Laurent v;
    for (auto& [e, k] : P.c) {
        auto [a, b] = e;
        Laurent term = Laurent::mono(2 * a, k * i_power_sign(a + b));
        if (b >= 0)
            term *= s_minus.pow(b);
        else
            throw std::logic_error("negative m power in knot HOMFLY");
        v += term;
    }
    return v;
}

// nabla(z) = P(l = i, m = i z)
inline Laurent conway_from_homfly(const Laurent2& P) {
    Laurent z;
    for (auto& [e, k] : P.c) z.add_term(e.second, k * i_power_sign(e.first + e.second));
    return z;
}

// Delta(t) = nabla(t^1/2 - t^-1/2), in half units of t
inline Laurent alexander_half(const Laurent& nabla) {
    Laurent s_minus = Laurent::mono(1) - Laurent::mono(-1);
    Laurent r;
    for (auto& [e, k] : nabla.c) {
        if (e < 0) throw std::logic_error("negative power in Conway polynomial");
        r += Laurent(k) * s_minus.pow(e);
    }
    return r;
}
inline Laurent alexander(const Laurent& nabla) { return halves_to_integral(alexander_half(nabla)); }

// P(it, iz) as a real polynomial in (t, z), evaluated at a rational t; returns
// the z-coefficients.
inline std::map<int, Rat> morton_cromwell_sample(const Laurent2& P, const Rat& t) {
    std::map<int, Rat> out;
    for (auto& [e, k] : P.c) {
        auto [a, b] = e;
        Rat tp = 1;
        for (int i = 0; i < std::abs(a); ++i) tp = a > 0 ? Rat(tp * t) : Rat(tp / t);
        out[b] += Rat(k * i_power_sign(a + b)) * tp;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// ------------------------------------------------------ derived numbers

struct PolyDerived {
    Int v2, v3;
    int min_deg_v = 0, max_deg_v = 0, span_v = 0;
    Int min_cf_v;
    int max_deg_m_p = 0, min_deg_l_p = 0;
};

// v2 = -V''(1)/6 and v3 = -V''(1)/3 - V'''(1)/9 (knots)
inline std::pair<Int, Int> vassiliev_from_jones(const Laurent& V) {
    Int d2 = V.derivative_at_one(2), d3 = V.derivative_at_one(3);
    Rat v2 = Rat(-d2) / 6;
    Rat v3 = Rat(-d2) / 3 - Rat(d3) / 9;
    if (denominator(v2) != 1 || denominator(v3) != 1)
        throw std::logic_error("non-integral Vassiliev value from Jones derivatives");
    return {numerator(v2), numerator(v3)};
}

inline PolyDerived poly_derived_invariants(const Laurent& V, const Laurent2& P) {
    PolyDerived r;
    auto [v2, v3] = vassiliev_from_jones(V);
    r.v2 = v2;
    r.v3 = v3;
    r.min_deg_v = V.min_deg();
    r.max_deg_v = V.max_deg();
    r.span_v = r.max_deg_v - r.min_deg_v;
    r.min_cf_v = V.coef(r.min_deg_v);
    if (!P.is_zero()) {
        r.max_deg_m_p = P.max_deg_m();
        r.min_deg_l_p = P.min_deg_l();
    }
    return r;
}

}  // namespace knotpos
