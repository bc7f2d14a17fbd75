#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "rcurve/poly.hpp"

namespace rcurve {

/// Signed remainder sequence p, q, -rem(p, q), ... (stops before zero).
inline std::vector<UPoly> signed_remainder_sequence(const UPoly& p, const UPoly& q) {
    std::vector<UPoly> seq;
    if (p.is_zero_poly()) return seq;
    seq.push_back(p);
    if (q.is_zero_poly()) return seq;
    seq.push_back(q);
    while (true) {
        UPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero_poly()) break;
        seq.push_back(std::move(r));
    }
    return seq;
}

/// Sign of p at +infinity (dir = +1) or -infinity (dir = -1).
inline int sign_at_infinity(const UPoly& p, int dir) {
    if (p.is_zero_poly()) return 0;
    int s = sgn(p.lead());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

/// Endpoint of a real interval: a rational, or -inf / +inf.
struct Bound {
    std::optional<Rat> value;  // empty means infinite
    int inf_sign = 0;          // -1 or +1 when value is empty

    static Bound neg_inf() { return {std::nullopt, -1}; }
    static Bound pos_inf() { return {std::nullopt, 1}; }
    Bound() = default;
    Bound(std::optional<Rat> v, int s) : value(std::move(v)), inf_sign(s) {}
    Bound(const Rat& v) : value(v) {}  // NOLINT(google-explicit-constructor)
    Bound(int v) : value(Rat(v)) {}    // NOLINT(google-explicit-constructor)
};

inline int sign_variations(const std::vector<UPoly>& seq, const Bound& at) {
    int count = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = at.value ? sgn(p(*at.value)) : sign_at_infinity(p, at.inf_sign);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Number of distinct real roots of a squarefree f in (lo, hi].
inline int sturm_real_root_count(const UPoly& f, const Bound& lo = Bound::neg_inf(), const Bound& hi = Bound::pos_inf()) {
    if (f.is_zero_poly()) throw InvalidInput("sturm_real_root_count of the zero polynomial");
    if (!is_squarefree(f)) throw InvalidInput("sturm_real_root_count needs a squarefree polynomial");
    if (f.degree() == 0) return 0;
    auto seq = signed_remainder_sequence(f, f.derivative());
    int v = sign_variations(seq, lo) - sign_variations(seq, hi);
    return v < 0 ? 0 : v;
}

/// Cauchy index of q/p over (a, b), with p(a), p(b) nonzero.
inline int cauchy_index(const UPoly& q, const UPoly& p, const Rat& a, const Rat& b) {
    auto seq = signed_remainder_sequence(p, q);
    return sign_variations(seq, a) - sign_variations(seq, b);
}

/// Integer bound B with every complex root of f strictly inside |z| < B.
inline Rat root_bound(const UPoly& f) {
    if (f.degree() < 1) return Rat(1);
    Rat m = 0;
    for (int k = 0; k < f.degree(); ++k) {
        Rat r = abs(f[static_cast<std::size_t>(k)] / f.lead());
        if (r > m) m = r;
    }
    Rat b = m + 2;
    Integer ceil_b = b.get_num() / b.get_den() + 1;
    return Rat(ceil_b);
}

/// Isolating intervals (lo, hi] for the real roots of a squarefree f, in
/// increasing order. Rational roots come back as degenerate [r, r].
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& f) {
    std::vector<std::pair<Rat, Rat>> out;
    if (f.degree() < 1) return out;
    auto seq = signed_remainder_sequence(f, f.derivative());
    auto count = [&](const Rat& lo, const Rat& hi) { return sign_variations(seq, lo) - sign_variations(seq, hi); };
    Rat b = root_bound(f);
    std::vector<std::pair<Rat, Rat>> stack{{-b, b}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int c = count(lo, hi);
        if (c == 0) continue;
        if (c == 1) {
            if (is_zero(f(hi))) out.emplace_back(hi, hi);
            else out.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

/// Halves an isolating interval (lo, hi] of a squarefree f until hi - lo <= width.
inline std::pair<Rat, Rat> refine_real_interval(const UPoly& f, Rat lo, Rat hi, const Rat& width) {
    if (lo == hi) return {lo, hi};
    auto seq = signed_remainder_sequence(f, f.derivative());
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (is_zero(f(mid))) return {mid, mid};
        if (sign_variations(seq, lo) - sign_variations(seq, mid) == 1) hi = mid;
        else lo = mid;
    }
    return {lo, hi};
}

}  // namespace rcurve
