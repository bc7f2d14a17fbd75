#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/rational.hpp"

namespace rcurve {

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// `T` must be constructible from `int` and provide ring operations and a
/// free `is_zero(const T&)`. Division-based algorithms (`divmod`, `gcd`)
/// additionally need `T` to be a field; `pseudo_rem` and friends work over
/// integral domains.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(T constant) {  // NOLINT(google-explicit-constructor)
        if (!is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    Poly(int constant) : Poly(T(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly monomial(T c, std::size_t k) {
        if (is_zero(c)) return {};
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero_poly() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
    const T& lead() const { return coeffs_.back(); }

    void set(std::size_t k, T value) {
        if (k >= coeffs_.size()) coeffs_.resize(k + 1, T(0));
        coeffs_[k] = std::move(value);
        trim();
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& c : r.coeffs_) c = T(0) - c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const T& s, const Poly& p) {
        if (is_zero(s)) return {};
        Poly r = p;
        for (auto& c : r.coeffs_) c = s * c;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!is_zero(a.coeffs_[i] - b.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Horner evaluation in any algebra `U` that accepts `T` scalars.
    template <class U>
    U eval_in(const U& at) const {
        U acc = U(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + U(coeffs_[i]);
        return acc;
    }
    T operator()(const T& at) const { return eval_in<T>(at); }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> out(coeffs_.size() - 1, T(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = T(static_cast<int>(i)) * coeffs_[i];
        return Poly(std::move(out));
    }

    /// p(q(x))
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + Poly(coeffs_[i]);
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
    return p.is_zero_poly();
}

using UPoly = Poly<Rat>;

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned exp) {
    Poly<T> result(T(1));
    Poly<T> b = base;
    while (exp != 0) {
        if (exp & 1U) result = result * b;
        exp >>= 1U;
        if (exp != 0) b = b * b;
    }
    return result;
}

/// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& num, const Poly<T>& den) {
    if (den.is_zero_poly()) throw InvalidInput("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly<T>(), num};
    std::vector<T> rem = num.coeffs();
    std::vector<T> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1), T(0));
    const T inv_lead = T(1) / den.lead();
    const auto dd = static_cast<std::size_t>(den.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        T c = rem[k + dd] * inv_lead;
        quot[k] = c;
        if (is_zero(c)) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] = rem[k + j] - c * den[j];
    }
    rem.resize(dd);
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).first;
}
template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).second;
}

template <class T>
bool divides(const Poly<T>& d, const Poly<T>& p) {
    return (p % d).is_zero_poly();
}

/// Division that must leave no remainder.
template <class T>
Poly<T> exact_quotient(const Poly<T>& num, const Poly<T>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero_poly()) throw std::logic_error("exact_quotient: nonzero remainder");
    return q;
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
    if (p.is_zero_poly()) return p;
    return (T(1) / p.lead()) * p;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero_poly()) {
        Poly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
struct ExtGcd {
    Poly<T> g, s, t;
};

template <class T>
ExtGcd<T> ext_gcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b, s0(T(1)), s1, t0, t1(T(1));
    while (!r1.is_zero_poly()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<T> s2 = s0 - q * s1;
        Poly<T> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero_poly()) return {r0, s0, t0};
    T inv = T(1) / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
}

/// lc(b)^(deg a - deg b + 1) * a mod b, valid over integral domains.
template <class T>
Poly<T> pseudo_rem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero_poly()) throw InvalidInput("pseudo remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<T> r = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    const T& lb = b.lead();
    int steps = a.degree() - b.degree() + 1;
    for (std::size_t top = r.size(); top-- > db;) {
        T c = r[top];
        for (auto& x : r) x = lb * x;
        if (!is_zero(c)) {
            for (std::size_t j = 0; j <= db; ++j) r[top - db + j] = r[top - db + j] - c * b[j];
        }
        --steps;
        r.pop_back();
    }
    (void)steps;
    return Poly<T>(std::move(r));
}

/// Printing of rational polynomials in decreasing degree: "3*t^2 - 1/2*t + 1".
inline std::string to_string(const UPoly& p, const std::string& var = "t") {
    if (p.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient. Returns the scale factor c with p = c * result.
inline UPoly primitive_integer_part(const UPoly& p, Rat* scale = nullptr) {
    if (p.is_zero_poly()) return p;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = int_lcm(den_lcm, c.get_den());
    Integer num_gcd = 0;
    for (const auto& c : p.coeffs()) num_gcd = int_gcd(num_gcd, Integer(c.get_num() * (den_lcm / c.get_den())));
    Rat factor = make_rat(den_lcm, num_gcd);
    if (sgn(p.lead()) < 0) factor = -factor;
    if (scale != nullptr) *scale = 1 / factor;
    return factor * p;
}

/// Squarefree part: f / gcd(f, f'), monic.
inline UPoly squarefree_part(const UPoly& f) {
    if (f.is_zero_poly()) throw InvalidInput("squarefree_part of the zero polynomial");
    if (f.degree() == 0) return UPoly(Rat(1));
    return monic(exact_quotient(f, gcd(f, f.derivative())));
}

inline bool is_squarefree(const UPoly& f) { return gcd(f, f.derivative()).degree() <= 0; }

/// Yun's squarefree decomposition: f = c * prod_i a_i^i, each a_i monic, squarefree, coprime.
inline std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& f) {
    if (f.degree() < 1) throw InvalidInput("squarefree decomposition needs degree >= 1");
    std::vector<std::pair<UPoly, unsigned>> out;
    UPoly a = monic(f);
    UPoly b = a.derivative();
    UPoly c = gcd(a, b);
    UPoly w = exact_quotient(a, c);
    UPoly y = exact_quotient(b, c);
    UPoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        UPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

}  // namespace rcurve
