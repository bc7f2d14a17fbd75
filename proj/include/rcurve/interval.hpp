#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>

#include "rcurve/poly.hpp"
#include "rcurve/rational.hpp"

namespace rcurve {

/// Closed interval with rational endpoints; all arithmetic is exact.
struct Interval {
    Rat lo = 0;
    Rat hi = 0;

    Interval() = default;
    Interval(int v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
    Interval(const Rat& v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }
};

/// Axis-aligned rectangle of the complex plane, used for certified
/// enclosure of complex values.
struct CBox {
    Interval re;
    Interval im;

    CBox() = default;
    CBox(int v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    CBox(const Rat& v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    CBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    friend CBox operator+(const CBox& a, const CBox& b) { return {a.re + b.re, a.im + b.im}; }
    friend CBox operator-(const CBox& a, const CBox& b) { return {a.re - b.re, a.im - b.im}; }
    friend CBox operator*(const CBox& a, const CBox& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

inline CBox eval_box(const UPoly& p, const CBox& at) { return p.eval_in<CBox>(at); }

}  // namespace rcurve
