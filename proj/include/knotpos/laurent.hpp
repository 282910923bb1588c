#pragma once
// Exact integer Laurent polynomials in one and two variables.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace knotpos {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_str(const Int& v) { return v.str(); }
inline std::string to_str(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline Rat floor_div(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return Rat(q);
}

// One variable, exponent -> coefficient, zero coefficients never stored.
class Laurent {
public:
    std::map<int, Int> c;

    Laurent() = default;
    explicit Laurent(Int k, int e = 0) {
        if (k != 0) c[e] = std::move(k);
    }
    static Laurent mono(int e, Int k = 1) { return Laurent(std::move(k), e); }

    bool is_zero() const { return c.empty(); }
    int min_deg() const {
        if (c.empty()) throw std::logic_error("degree of zero polynomial");
        return c.begin()->first;
    }
    int max_deg() const {
        if (c.empty()) throw std::logic_error("degree of zero polynomial");
        return c.rbegin()->first;
    }
    Int coef(int e) const {
        auto it = c.find(e);
        return it == c.end() ? Int(0) : it->second;
    }
    void add_term(int e, const Int& k) {
        if (k == 0) return;
        auto [it, fresh] = c.try_emplace(e, k);
        if (!fresh) {
            it->second += k;
            if (it->second == 0) c.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, k] : o.c) add_term(e, k);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, k] : o.c) add_term(e, -k);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator-() const {
        Laurent r;
        for (auto& [e, k] : c) r.c[e] = -k;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [e1, k1] : a.c)
            for (auto& [e2, k2] : b.c) r.add_term(e1 + e2, k1 * k2);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c == b.c; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent shifted(int s) const {
        Laurent r;
        for (auto& [e, k] : c) r.c[e + s] = k;
        return r;
    }
    // p(x) -> p(x^f), f may be negative
    Laurent substitute_power(int f) const {
        Laurent r;
        for (auto& [e, k] : c) r.add_term(e * f, k);
        return r;
    }
    Laurent pow(int n) const {
        Laurent r(1), b = *this;
        while (n > 0) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }
    Rat eval(const Rat& x) const {
        Rat s = 0;
        for (auto& [e, k] : c) {
            Rat p = 1;
            if (e >= 0)
                for (int i = 0; i < e; ++i) p *= x;
            else
                for (int i = 0; i < -e; ++i) p /= x;
            s += Rat(k) * p;
        }
        return s;
    }
    // n-th derivative at 1 treating exponents as integers
    Int derivative_at_one(int n) const {
        Int s = 0;
        for (auto& [e, k] : c) {
            Int f = 1;
            for (int i = 0; i < n; ++i) f *= (e - i);
            s += k * f;
        }
        return s;
    }
    // exact division; throws if not divisible
    Laurent divided_by(const Laurent& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Laurent rem = *this, q;
        int dl = d.max_deg();
        const Int& lead = d.c.rbegin()->second;
        const int floor = is_zero() ? 0 : min_deg() - d.min_deg();
        while (!rem.is_zero()) {
            int e = rem.max_deg();
            const Int& k = rem.c.rbegin()->second;
            if (k % lead != 0) throw std::domain_error("inexact polynomial division");
            Laurent t = Laurent::mono(e - dl, k / lead);
            q += t;
            rem -= t * d;
            if (!rem.is_zero() && rem.max_deg() - dl < floor)
                throw std::domain_error("inexact polynomial division");
        }
        return q;
    }

    // "c*t^e" terms, ascending exponent, joined by " + "
    std::string str(const std::string& var = "t", int unit = 1) const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, k] : c) {
            if (!first) os << " + ";
            first = false;
            os << k.str() << "*" << var << "^";
            if (unit == 1 || e % unit == 0)
                os << e / unit;
            else
                os << e << "/" << unit;
        }
        return os.str();
    }
};

// Two variables (l, m).
class Laurent2 {
public:
    std::map<std::pair<int, int>, Int> c;

    Laurent2() = default;
    explicit Laurent2(Int k, int a = 0, int b = 0) {
        if (k != 0) c[{a, b}] = std::move(k);
    }
    static Laurent2 mono(int a, int b, Int k = 1) { return Laurent2(std::move(k), a, b); }

    bool is_zero() const { return c.empty(); }
    void add_term(int a, int b, const Int& k) {
        if (k == 0) return;
        auto [it, fresh] = c.try_emplace({a, b}, k);
        if (!fresh) {
            it->second += k;
            if (it->second == 0) c.erase(it);
        }
    }
    Laurent2& operator+=(const Laurent2& o) {
        for (auto& [e, k] : o.c) add_term(e.first, e.second, k);
        return *this;
    }
    Laurent2& operator-=(const Laurent2& o) {
        for (auto& [e, k] : o.c) add_term(e.first, e.second, -k);
        return *this;
    }
    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
    Laurent2 operator-() const {
        Laurent2 r;
        for (auto& [e, k] : c) r.c[e] = -k;
        return r;
    }
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
        Laurent2 r;
        for (auto& [e1, k1] : a.c)
            for (auto& [e2, k2] : b.c) r.add_term(e1.first + e2.first, e1.second + e2.second, k1 * k2);
        return r;
    }
    Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }
    friend bool operator==(const Laurent2& a, const Laurent2& b) { return a.c == b.c; }
    friend bool operator!=(const Laurent2& a, const Laurent2& b) { return !(a == b); }

    int min_deg_l() const {
        int r = c.begin()->first.first;
        for (auto& [e, k] : c) r = std::min(r, e.first);
        return r;
    }
    int max_deg_l() const {
        int r = c.begin()->first.first;
        for (auto& [e, k] : c) r = std::max(r, e.first);
        return r;
    }
    int max_deg_m() const {
        int r = c.begin()->first.second;
        for (auto& [e, k] : c) r = std::max(r, e.second);
        return r;
    }
    int min_deg_m() const {
        int r = c.begin()->first.second;
        for (auto& [e, k] : c) r = std::min(r, e.second);
        return r;
    }
    // coefficient of m^b as a polynomial in l
    Laurent m_coefficient(int b) const {
        Laurent r;
        for (auto& [e, k] : c)
            if (e.second == b) r.add_term(e.first, k);
        return r;
    }

    // "c*l^a*m^b", sorted by (m, l) ascending
    std::string str() const {
        if (c.empty()) return "0";
        std::map<std::pair<int, int>, const Int*> order;
        for (auto& [e, k] : c) order[{e.second, e.first}] = &k;
        std::ostringstream os;
        bool first = true;
        for (auto& [e, k] : order) {
            if (!first) os << " + ";
            first = false;
            os << k->str() << "*l^" << e.second << "*m^" << e.first;
        }
        return os.str();
    }
};

}  // namespace knotpos
