#pragma once

#include <utility>
#include <vector>

#include "rcurve/poly.hpp"

namespace rcurve {

inline Rat ring_exact_div(const Rat& a, const Rat& b) { return a / b; }

template <class T>
Poly<T> ring_exact_div(const Poly<T>& a, const Poly<T>& b) {
    return exact_quotient(a, b);
}

/// Fraction-free (Bareiss) determinant over an integral domain R.
/// `ring_exact_div(R, R)` must be available for R.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return R(0);
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = ring_exact_div(num, prev);
            }
            m[i][k] = R(0);
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? R(0) - det : det;
}

/// Sylvester matrix: deg(g) shifted rows of f, then deg(f) shifted rows of g,
/// coefficients in decreasing degree.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + n;
    std::vector<std::vector<R>> s(size, std::vector<R>(size, R(0)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = f[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = g[n - k];
    return s;
}

/// Res(f, g) = det(Sylvester(f, g)) = lc(f)^deg(g) * prod g(alpha) over roots alpha of f.
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
    if (f.is_zero_poly() || g.is_zero_poly()) throw InvalidInput("resultant of a zero polynomial");
    return bareiss_det(sylvester_matrix(f, g));
}

}  // namespace rcurve
