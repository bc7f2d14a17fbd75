#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/mpoly.hpp"
#include "rcurve/poly.hpp"

namespace rcurve {

/// Binary form of degree d in (t0, t1); coeffs[k] multiplies t0^(d-k) * t1^k.
class HPoly2 {
public:
    HPoly2() = default;
    HPoly2(int degree, std::vector<Rat> coeffs) : d_(degree), c_(std::move(coeffs)) {
        if (d_ < 0) throw InvalidInput("form degree must be non-negative");
        c_.resize(static_cast<std::size_t>(d_) + 1, Rat(0));
    }
    /// Homogenizes p(t) to degree d: sum p_k t0^(d-k) t1^k.
    static HPoly2 homogenize(const UPoly& p, int degree) {
        if (p.degree() > degree) throw InvalidInput("homogenize: polynomial degree exceeds form degree");
        return HPoly2(degree, p.coeffs());
    }

    int degree() const { return d_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t k) const { return c_[k]; }
    bool is_zero_form() const {
        for (const auto& c : c_)
            if (!is_zero(c)) return false;
        return true;
    }

    /// P(1, t).
    UPoly dehomogenize() const { return UPoly(c_); }
    /// P(0, 1), the coefficient of t1^d.
    const Rat& at_infinity() const { return c_.back(); }

    template <class V>
    V eval(const V& t0, const V& t1) const {
        V acc = V(0);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            V term = V(c_[k]);
            for (int i = 0; i < d_ - static_cast<int>(k); ++i) term = term * t0;
            for (std::size_t i = 0; i < k; ++i) term = term * t1;
            acc = acc + term;
        }
        return acc;
    }

    friend HPoly2 operator*(const HPoly2& a, const HPoly2& b) {
        UPoly p = a.dehomogenize() * b.dehomogenize();
        return homogenize(p, a.d_ + b.d_);
    }
    friend HPoly2 operator*(const Rat& s, const HPoly2& a) {
        HPoly2 r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend HPoly2 operator+(const HPoly2& a, const HPoly2& b) {
        if (a.d_ != b.d_) throw InvalidInput("adding forms of different degrees");
        HPoly2 r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
        return r;
    }
    friend HPoly2 operator-(const HPoly2& a, const HPoly2& b) { return a + Rat(-1) * b; }
    friend bool operator==(const HPoly2& a, const HPoly2& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

    /// Bivariate polynomial in (t0, t1).
    MPoly to_mpoly() const {
        MPoly p(Vars{2});
        for (std::size_t k = 0; k < c_.size(); ++k)
            p.add_term({static_cast<unsigned>(d_ - static_cast<int>(k)), static_cast<unsigned>(k)}, c_[k]);
        return p;
    }
    static HPoly2 from_mpoly(const MPoly& p) {
        if (p.is_zero_poly()) throw InvalidInput("zero form has no degree; give its degree explicitly");
        if (!p.is_homogeneous()) throw InvalidInput("component is not homogeneous in (t0, t1)");
        int d = p.total_degree();
        std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
        for (const auto& [e, v] : p.terms()) {
            std::size_t k = e.size() > 1 ? e[1] : 0;
            c[k] = v;
        }
        return HPoly2(d, std::move(c));
    }

    /// P(a t0 + b t1, c t0 + d t1).
    HPoly2 substitute_linear(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
        UPoly first{a, b};
        UPoly second{c, d};
        UPoly acc;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (is_zero(c_[k])) continue;
            acc = acc + c_[k] * (pow(first, static_cast<unsigned>(d_ - static_cast<int>(k))) *
                                 pow(second, static_cast<unsigned>(k)));
        }
        return homogenize(acc, d_);
    }

private:
    int d_ = 0;
    std::vector<Rat> c_{Rat(0)};
};

/// Printed normal form: decreasing t0-degree, explicit `*` and `^`.
inline std::string to_string(const HPoly2& p, const std::string& v0 = "t0", const std::string& v1 = "t1") {
    return to_string(p.to_mpoly(), {v0, v1});
}

}  // namespace rcurve
