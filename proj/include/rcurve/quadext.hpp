#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "rcurve/rational.hpp"

namespace rcurve {

/// Element a + b*sqrt(d) of Q(sqrt(d)), d a square-free integer other than 0, 1.
///
/// Values with b = 0 are plain rationals and mix freely with any field;
/// they carry d = 0. Mixing two different surds throws.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadExt(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(const Integer& d, Rat a, Rat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
        if (is_zero(b_)) {
            d_ = 0;
        } else if (d_ == 0 || d_ == 1 || squarefree_core(d_) != d_) {
            throw InvalidInput("QuadExt: d must be square-free and not 0 or 1, got " + d_.get_str());
        }
    }

    struct Unchecked {};
    QuadExt(Unchecked, const Integer& d, Rat a, Rat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
        if (is_zero(b_)) d_ = 0;
    }

    /// sqrt(d) for square-free d.
    static QuadExt sqrt_of(const Integer& d) { return QuadExt(d, 0, 1); }
    /// The imaginary unit, as sqrt(-1).
    static QuadExt i() { return sqrt_of(-1); }

    const Integer& d() const { return d_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool is_rational() const { return is_zero(b_); }

    QuadExt conj() const { return QuadExt(Unchecked{}, d_, a_, -b_); }
    /// Field norm a^2 - d b^2 (rational).
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Integer d = common_d(x, y);
        return QuadExt(Unchecked{}, d, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        Integer d = common_d(x, y);
        return QuadExt(Unchecked{}, d, x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(Unchecked{}, x.d_, -x.a_, -x.b_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Integer d = common_d(x, y);
        return QuadExt(Unchecked{}, d, x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        Rat n = y.norm();
        if (is_zero(n)) throw InvalidInput("QuadExt division by zero");
        QuadExt num = x * y.conj();
        return QuadExt(Unchecked{}, num.d_, num.a_ / n, num.b_ / n);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.is_rational() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Exact sign for real surds (d > 0).
    int sign() const {
        if (d_ < 0) throw InvalidInput("QuadExt::sign on a non-real value");
        int sa = sgn(a_);
        int sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // a and b*sqrt(d) have opposite signs: compare a^2 with d b^2.
        int cmp_ = cmp(a_ * a_, Rat(d_) * b_ * b_);
        if (cmp_ == 0) return 0;
        return cmp_ > 0 ? sa : sb;
    }

    double real_approx() const {
        if (d_ < 0) throw InvalidInput("real_approx on a non-real value");
        return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
    }
    /// Real and imaginary parts as doubles (d < 0 means b*sqrt(d) is imaginary).
    std::pair<double, double> complex_approx() const {
        if (d_ < 0) return {a_.get_d(), b_.get_d() * std::sqrt(-d_.get_d())};
        return {real_approx(), 0.0};
    }

private:
    static Integer common_d(const QuadExt& x, const QuadExt& y) {
        if (x.is_rational()) return y.d_;
        if (y.is_rational()) return x.d_;
        if (x.d_ != y.d_) throw InvalidInput("QuadExt: mixing sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
        return x.d_;
    }

    Integer d_ = 0;
    Rat a_ = 0;
    Rat b_ = 0;
};

inline bool is_zero(const QuadExt& x) { return is_zero(x.a()) && is_zero(x.b()); }

/// "a", "a+b*sqrt(d)"; d = -1 prints as "i".
inline std::string to_string(const QuadExt& x) {
    if (x.is_rational()) return x.a().get_str();
    std::ostringstream os;
    std::string unit = x.d() == -1 ? "i" : "sqrt(" + x.d().get_str() + ")";
    if (!is_zero(x.a())) os << x.a().get_str() << (sgn(x.b()) < 0 ? "-" : "+");
    else if (sgn(x.b()) < 0) os << "-";
    Rat mag = abs(x.b());
    if (mag != 1) os << mag.get_str() << "*";
    os << unit;
    return os.str();
}

/// Gaussian rationals are Q(sqrt(-1)).
using Gauss = QuadExt;

inline Gauss gauss(const Rat& re, const Rat& im) { return QuadExt(Integer(-1), re, im); }
inline Rat re(const Gauss& z) {
    if (!z.is_rational() && z.d() != -1) throw InvalidInput("not a Gaussian rational");
    return z.a();
}
inline Rat im(const Gauss& z) {
    if (!z.is_rational() && z.d() != -1) throw InvalidInput("not a Gaussian rational");
    return z.b();
}

}  // namespace rcurve
