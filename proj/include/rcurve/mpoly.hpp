#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/poly.hpp"
#include "rcurve/quadext.hpp"

namespace rcurve {

using Exponents = std::vector<unsigned>;

/// Variable count tag for the zero polynomial constructor.
struct Vars {
    std::size_t n;
};

/// Sparse polynomial in a fixed number of variables. Terms are kept in
/// lexicographic exponent order (variable 0 most significant); zero
/// coefficients are never stored.
template <class T>
class MPolyT {
public:
    MPolyT() = default;
    explicit MPolyT(Vars v) : nvars_(v.n) {}
    MPolyT(std::size_t nvars, const T& c) : nvars_(nvars) {
        if (!is_zero(c)) terms_[Exponents(nvars, 0)] = c;
    }
    // Bare constants (nvars 0) adopt the variable count of their partners.
    MPolyT(int c) : MPolyT(0, T(c)) {}  // NOLINT(google-explicit-constructor)
    MPolyT(const T& c) : MPolyT(0, c) {}  // NOLINT(google-explicit-constructor)

    static MPolyT var(std::size_t nvars, std::size_t which, unsigned power = 1) {
        MPolyT p(Vars{nvars});
        Exponents e(nvars, 0);
        e[which] = power;
        p.terms_[e] = T(1);
        return p;
    }
    static MPolyT monomial(const T& c, Exponents e) {
        MPolyT p(Vars{e.size()});
        if (!is_zero(c)) p.terms_[std::move(e)] = c;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero_poly() const { return terms_.empty(); }
    const std::map<Exponents, T>& terms() const { return terms_; }

    T coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T(0) : it->second;
    }
    void add_term(const Exponents& e, const T& c) {
        if (is_zero(c)) return;
        if (nvars_ == 0 && !e.empty()) adopt(e.size());
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto k : e) s += static_cast<int>(k);
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(std::size_t v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[v]));
        return d;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto k : e) s += static_cast<int>(k);
            if (d >= 0 && s != d) return false;
            d = s;
        }
        return true;
    }

    MPolyT& operator+=(const MPolyT& o) {
        unify(o);
        for (const auto& [e, c] : o.terms_) add_term(o.nvars_ == 0 ? Exponents(nvars_, 0) : e, c);
        return *this;
    }
    MPolyT& operator-=(const MPolyT& o) {
        unify(o);
        for (const auto& [e, c] : o.terms_) add_term(o.nvars_ == 0 ? Exponents(nvars_, 0) : e, T(0) - c);
        return *this;
    }
    friend MPolyT operator+(MPolyT a, const MPolyT& b) { return a += b; }
    friend MPolyT operator-(MPolyT a, const MPolyT& b) { return a -= b; }
    friend MPolyT operator-(const MPolyT& a) {
        MPolyT r(Vars{a.nvars_});
        for (const auto& [e, c] : a.terms_) r.terms_[e] = T(0) - c;
        return r;
    }
    friend MPolyT operator*(const MPolyT& a, const MPolyT& b) {
        std::size_t n = std::max(a.nvars_, b.nvars_);
        MPolyT r(Vars{n});
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(n, 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MPolyT operator*(const T& s, const MPolyT& p) {
        MPolyT r(Vars{p.nvars_});
        if (is_zero(s)) return r;
        for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
        return r;
    }
    MPolyT& operator*=(const MPolyT& o) { return *this = *this * o; }

    friend bool operator==(const MPolyT& a, const MPolyT& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.terms_.empty()) return true;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (a.nvars_ != 0 && b.nvars_ != 0) {
                if (ia->first != ib->first) return false;
            } else {
                for (auto k : ia->first)
                    if (k != 0) return false;
                for (auto k : ib->first)
                    if (k != 0) return false;
            }
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const MPolyT& a, const MPolyT& b) { return !(a == b); }

    /// Lex-largest term.
    std::pair<Exponents, T> lead_term() const { return *terms_.rbegin(); }

    /// Substitutes polynomials (all in a common ring R) for every variable.
    template <class R>
    R substitute(const std::vector<R>& values) const {
        R acc = R(0);
        for (const auto& [e, c] : terms_) {
            R term = R(c);
            for (std::size_t v = 0; v < e.size(); ++v)
                for (unsigned k = 0; k < e[v]; ++k) term = term * values[v];
            acc = acc + term;
        }
        return acc;
    }

    /// Evaluation with a per-coefficient conversion to the value type.
    template <class V, class Conv>
    V eval(const std::vector<V>& at, Conv conv) const {
        V acc = V(0);
        for (const auto& [e, c] : terms_) {
            V term = conv(c);
            for (std::size_t v = 0; v < e.size(); ++v)
                for (unsigned k = 0; k < e[v]; ++k) term = term * at[v];
            acc = acc + term;
        }
        return acc;
    }

private:
    void adopt(std::size_t n) {
        std::map<Exponents, T> moved;
        for (auto& [e, c] : terms_) moved[Exponents(n, 0)] = c;
        terms_ = std::move(moved);
        nvars_ = n;
    }
    void unify(const MPolyT& o) {
        if (nvars_ == 0 && o.nvars_ != 0) adopt(o.nvars_);
    }

    std::size_t nvars_ = 0;
    std::map<Exponents, T> terms_;
};

template <class T>
bool is_zero(const MPolyT<T>& p) {
    return p.is_zero_poly();
}

using MPoly = MPolyT<Rat>;
using QMPoly = MPolyT<QuadExt>;

template <class T>
MPolyT<T> pow(const MPolyT<T>& base, unsigned exp) {
    MPolyT<T> result(base.nvars(), T(1));
    MPolyT<T> b = base;
    while (exp != 0) {
        if (exp & 1U) result = result * b;
        exp >>= 1U;
        if (exp != 0) b = b * b;
    }
    return result;
}

/// Exact division over Q; throws if b does not divide a.
inline MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero_poly()) throw InvalidInput("multivariate division by zero");
    const std::size_t n = std::max(a.nvars(), b.nvars());
    MPoly rem = a;
    MPoly quot(Vars{n});
    auto [eb, cb] = b.lead_term();
    if (eb.empty()) eb.assign(n, 0);
    while (!rem.is_zero_poly()) {
        auto [er, cr] = rem.lead_term();
        if (er.empty()) er.assign(n, 0);
        Exponents e(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (er[i] < eb[i]) throw std::logic_error("exact_div: not divisible");
            e[i] = er[i] - eb[i];
        }
        MPoly t = MPoly::monomial(cr / cb, e);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

inline MPoly ring_exact_div(const MPoly& a, const MPoly& b) { return exact_div(a, b); }

/// Printed normal form: terms in decreasing lex order of the exponents, explicit
/// `*` and `^`, e.g. "x1^4 - x0^2*x1^2 + x0^2*x2^2".
inline std::string to_string(const MPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = true;
        for (auto k : e) constant = constant && k == 0;
        if (constant) {
            os << mag.get_str();
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << "*";
            os << names.at(v);
            if (e[v] > 1) os << "^" << e[v];
            need_star = true;
        }
    }
    return os.str();
}

/// Scales to a primitive integer polynomial (sign unchanged).
inline MPoly primitive_integer(const MPoly& p, Rat* scale = nullptr) {
    if (p.is_zero_poly()) return p;
    Integer den_lcm = 1;
    for (const auto& [e, c] : p.terms()) den_lcm = int_lcm(den_lcm, c.get_den());
    Integer num_gcd = 0;
    for (const auto& [e, c] : p.terms()) num_gcd = int_gcd(num_gcd, Integer(c.get_num() * (den_lcm / c.get_den())));
    Rat factor = make_rat(den_lcm, num_gcd);
    if (scale != nullptr) *scale = 1 / factor;
    return factor * p;
}

/// Splits a polynomial over Q(sqrt d) into rational parts a + b*sqrt(d).
inline std::pair<MPoly, MPoly> split_surd(const QMPoly& p) {
    MPoly a(Vars{p.nvars()}), b(Vars{p.nvars()});
    for (const auto& [e, c] : p.terms()) {
        a.add_term(e, c.a());
        b.add_term(e, c.b());
    }
    return {a, b};
}

inline QMPoly join_surd(const MPoly& a, const MPoly& b, const Integer& d) {
    const std::size_t n = std::max(a.nvars(), b.nvars());
    QMPoly r(Vars{n});
    for (const auto& [e, c] : a.terms()) r.add_term(e.empty() ? Exponents(n, 0) : e, QuadExt(c));
    for (const auto& [e, c] : b.terms())
        r.add_term(e.empty() ? Exponents(n, 0) : e, d == 0 ? QuadExt(c) : QuadExt(QuadExt::Unchecked{}, d, 0, c));
    return r;
}

inline QMPoly to_quad(const MPoly& p) {
    QMPoly r(Vars{p.nvars()});
    for (const auto& [e, c] : p.terms()) r.add_term(e, QuadExt(c));
    return r;
}

/// Surd d shared by the coefficients (0 if all rational).
inline Integer surd_of(const QMPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (!c.is_rational()) return c.d();
    return 0;
}

}  // namespace rcurve
