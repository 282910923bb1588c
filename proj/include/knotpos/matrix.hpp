#pragma once
// Small exact matrices: determinant, congruence signature, interpolation.

#include "knotpos/laurent.hpp"

#include <vector>

namespace knotpos {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto& v : m[i]) r[i].push_back(Rat(v));
    return r;
}

inline IntMatrix transpose(const IntMatrix& m) {
    std::size_t n = m.size();
    IntMatrix t(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
    return t;
}

inline Rat determinant(RatMatrix a) {
    std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// Fraction-free (Bareiss) elimination over the integers.
inline Int determinant(IntMatrix a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < n; ++k) a[r][k] = (a[r][k] * a[c][c] - a[r][c] * a[c][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    return sign * a[n - 1][n - 1];
}

// Signature of a symmetric matrix by symmetric elimination.
inline int signature(RatMatrix a) {
    int n = static_cast<int>(a.size());
    int sig = 0;
    for (int c = 0; c < n; ++c) {
        if (a[c][c] == 0) {
            int p = -1;
            for (int r = c + 1; r < n && p < 0; ++r)
                if (a[r][r] != 0) p = r;
            if (p >= 0) {
                std::swap(a[p], a[c]);
                for (auto& row : a) std::swap(row[p], row[c]);
            } else {
                int q = -1;
                for (int r = c + 1; r < n && q < 0; ++r)
                    if (a[r][c] != 0) q = r;
                if (q < 0) continue;  // zero row: contributes nothing
                // row/col c += row/col q makes the pivot 2 a[q][c]
                for (int k = 0; k < n; ++k) a[c][k] += a[q][k];
                for (int k = 0; k < n; ++k) a[k][c] += a[k][q];
            }
        }
        const Rat piv = a[c][c];
        sig += piv > 0 ? 1 : -1;
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / piv;
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            for (int k = c; k < n; ++k) a[k][r] = a[r][k];
        }
    }
    return sig;
}

// Lagrange interpolation through (x_i, y_i) with integer result coefficients.
inline Laurent interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    std::size_t n = xs.size();
    std::vector<Rat> coef(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) coef[k] += basis[k] * ys[i] / denom;
    }
    Laurent p;
    for (std::size_t k = 0; k < n; ++k) {
        if (denominator(coef[k]) != 1) throw std::logic_error("interpolated polynomial is not integral");
        p.add_term(static_cast<int>(k), numerator(coef[k]));
    }
    return p;
}

// det(V - t V^T) as a polynomial in t
inline Laurent alexander_from_seifert(const IntMatrix& v) {
    std::size_t n = v.size();
    std::vector<Rat> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        Int t = static_cast<long>(k) + 2;
        IntMatrix m(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = v[i][j] - t * v[j][i];
        xs.push_back(Rat(t));
        ys.push_back(Rat(determinant(m)));
    }
    return interpolate(xs, ys);
}

// Normalizes an Alexander polynomial: symmetric exponents (half units
// allowed via doubling), positive value at t = 1 when nonzero.
inline Laurent normalize_alexander(const Laurent& p) {
    if (p.is_zero()) return p;
    Laurent q = p.shifted(-(p.min_deg() + p.max_deg()) / 2);
    if ((p.min_deg() + p.max_deg()) % 2 != 0) throw std::logic_error("Alexander polynomial of odd span");
    Rat at1 = q.eval(Rat(1));
    if (at1 < 0 || (at1 == 0 && q.c.rbegin()->second < 0)) q = -q;
    return q;
}

}  // namespace knotpos
