#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/classify.hpp"
#include "rcurve/mpoly.hpp"

namespace rcurve {

enum class Source { INTERVAL, CIRCLE, SPHERE };

inline std::string to_string(Source s) {
    switch (s) {
        case Source::INTERVAL: return "interval";
        case Source::CIRCLE: return "circle";
        case Source::SPHERE: return "sphere";
    }
    return "interval";
}

/// Polynomial map from [-1,1], S^1 or S^k into R^m with coefficients in Q or Q(sqrt d).
struct RealPolyMap {
    Source source = Source::INTERVAL;
    int k = 1;                       // sphere dimension for SPHERE
    std::vector<std::string> vars;   // t | x, y | x, y, z (or x1..x{k+1})
    std::vector<QMPoly> components;  // one per target coordinate
    Integer surd = 0;                // d when some coefficient is irrational

    std::size_t m() const { return components.size(); }
};

inline std::vector<std::string> source_vars(Source s, int k = 1) {
    switch (s) {
        case Source::INTERVAL: return {"t"};
        case Source::CIRCLE: return {"x", "y"};
        case Source::SPHERE: {
            if (k == 2) return {"x", "y", "z"};
            std::vector<std::string> v;
            for (int i = 1; i <= k + 1; ++i) v.push_back("x" + std::to_string(i));
            return v;
        }
    }
    return {};
}

/// Reduces modulo x^2 + y^2 - 1 (variables 0 and 1) to y-degree at most 1.
inline QMPoly circle_reduce(const QMPoly& p) {
    const std::size_t n = p.nvars();
    QMPoly out{Vars{n}};
    const QMPoly one_minus_x2 = QMPoly(n, QuadExt(1)) - QMPoly::var(n, 0, 2);
    for (const auto& [e, c] : p.terms()) {
        Exponents base = e;
        unsigned half = e[1] / 2;
        base[1] = e[1] % 2;
        QMPoly term = QMPoly::monomial(c, base);
        if (half > 0) term = term * pow(one_minus_x2, half);
        out += term;
    }
    return out;
}

/// F(values) for a rational polynomial F, computed over Q(sqrt d).
inline QMPoly compose_rat(const MPoly& f, const std::vector<QMPoly>& values, std::size_t nvars) {
    QMPoly acc{Vars{nvars}};
    for (const auto& [e, c] : f.terms()) {
        QMPoly term(nvars, QuadExt(c));
        for (std::size_t v = 0; v < e.size(); ++v)
            for (unsigned k = 0; k < e[v]; ++k) term = term * values[v];
        acc += term;
    }
    return acc;
}

namespace detail {

inline QMPoly embed_univariate(const UPoly& p, std::size_t nvars) {
    QMPoly out{Vars{nvars}};
    for (std::size_t k = 0; k < p.size(); ++k) {
        Exponents e(nvars, 0);
        e[0] = static_cast<unsigned>(k);
        out.add_term(e, QuadExt(p[k]));
    }
    return out;
}

inline void require_arc_case1(const SemialgInput& in, const Classification& c) {
    if (in.mode != Mode::ARC || c.case_label != CaseLabel::CASE1)
        throw MathRejection("wrong_case", "interval witness needs ARC mode and CASE1, got " + to_string(in.mode) +
                                              " and " + to_string(c.case_label),
                            {{"case_label", to_string(c.case_label)}, {"mode", to_string(in.mode)}});
}

// Components g_1..g_m of the interval witness as polynomials in u on [-1, 1].
inline std::vector<UPoly> interval_components(const SemialgInput& in) {
    const ProjParam& p = in.param;
    const int d = p.degree();
    const UPoly p0 = p.affine(0);
    std::vector<UPoly> out;
    if (p0.degree() < d) {
        // Root at [0:1]: P0 = lambda t0^d, so P_i(1,t)/lambda is already polynomial.
        if (p0.degree() != 0) throw MathRejection("wrong_case", "P0 has finite roots besides [0:1]");
        const Rat lambda = p0[0];
        const UPoly t_of_u{(in.a + in.b) / 2, (in.b - in.a) / 2};
        for (std::size_t i = 1; i <= p.m(); ++i) out.push_back((1 / lambda) * p.affine(i).compose(t_of_u));
        return out;
    }
    const UPoly sq = squarefree_part(p0);
    if (sq.degree() != 1)
        throw MathRejection("unsupported_extension",
                            "the real root of P0 is not rational (degree " + std::to_string(sq.degree()) + ")",
                            {{"minpoly", to_string(sq)}});
    const Rat rho = -sq[0];
    // [t0 : t1] = [sigma : rho*sigma + 1] sends sigma = 0 to the root; P0 becomes constant.
    const UPoly s0 = UPoly::x();
    const UPoly s1{Rat(1), rho};
    std::vector<UPoly> q;
    for (const auto& c : p.components()) q.push_back(c.eval<UPoly>(s0, s1));
    if (q[0].degree() != 0) throw std::logic_error("interval witness: P0 did not become constant");
    const Rat lambda = q[0][0];
    Rat e1 = 1 / (in.a - rho);
    Rat e2 = 1 / (in.b - rho);
    if (e1 > e2) std::swap(e1, e2);
    const UPoly sigma_of_u{(e1 + e2) / 2, (e2 - e1) / 2};
    for (std::size_t i = 1; i <= p.m(); ++i) out.push_back((1 / lambda) * q[i].compose(sigma_of_u));
    return out;
}

inline QuadExt sqrt_rat(const Rat& r, Integer* surd) {
    Integer nd = r.get_num() * r.get_den();
    Integer root;
    Integer core = squarefree_core(nd, &root);
    Rat coeff = make_rat(root, r.get_den());
    if (core == 1) {
        *surd = 0;
        return QuadExt(coeff);
    }
    *surd = core;
    return QuadExt(core, 0, coeff);
}

}  // namespace detail

/// Polynomial map g on [-1, 1] with g([-1, 1]) = Pi([a, b]).
inline RealPolyMap witness_interval(const SemialgInput& in) {
    detail::require_arc_case1(in, classify(in));
    RealPolyMap w;
    w.source = Source::INTERVAL;
    w.vars = source_vars(Source::INTERVAL);
    for (const auto& g : detail::interval_components(in)) w.components.push_back(detail::embed_univariate(g, 1));
    return w;
}

/// Polynomial map f on S^1 with f(S^1) = S.
inline RealPolyMap witness_circle(const SemialgInput& in) {
    Classification c = classify(in);
    if (c.p_sphere1 != Inv::ONE)
        throw MathRejection("classifier_no", "classifier NO: S is not a polynomial image of the circle (" +
                                                 c.sphere1_reason + ")",
                            {{"case_label", to_string(c.case_label)}, {"p_sphere1", to_string(c.p_sphere1)}});
    RealPolyMap w;
    w.source = Source::CIRCLE;
    w.vars = source_vars(Source::CIRCLE);
    if (c.case_label == CaseLabel::CASE1) {
        // Compose the interval witness with (x, y) -> x.
        for (const auto& g : detail::interval_components(in)) w.components.push_back(detail::embed_univariate(g, 2));
        return w;
    }
    const ProjParam& p = in.param;
    const UPoly sq = squarefree_part(p.affine(0));
    if (sq.degree() != 2 || p.affine(0).degree() != p.degree())
        throw MathRejection("unsupported_extension", "denominator roots are not a single conjugate pair",
                            {{"P0", to_string(p[0])}});
    // Roots x0 +- i*y0; the substitution t = x0 + y0*tau sends them to +-i.
    const Rat x0 = -sq[1] / 2;
    const Rat y0_sq = sq[0] - x0 * x0;
    if (sgn(y0_sq) <= 0) throw std::logic_error("witness_circle: real denominator roots");
    Integer surd;
    const QuadExt y0 = detail::sqrt_rat(y0_sq, &surd);
    const QMPoly X = QMPoly::var(2, 0);
    const QMPoly Y = QMPoly::var(2, 1);
    const QMPoly T1 = QuadExt(x0) * X + y0 * Y;
    std::vector<QMPoly> forms;
    for (const auto& comp : p.components()) {
        QMPoly acc{Vars{2}};
        for (std::size_t k = 0; k < comp.coeffs().size(); ++k) {
            if (is_zero(comp[k])) continue;
            acc += QuadExt(comp[k]) * (pow(X, static_cast<unsigned>(comp.degree() - static_cast<int>(k))) *
                                       pow(T1, static_cast<unsigned>(k)));
        }
        forms.push_back(circle_reduce(acc));
    }
    const QMPoly& f0 = forms[0];
    if (f0.total_degree() != 0) throw std::logic_error("witness_circle: P0 is not constant on the circle");
    const QuadExt kappa = f0.terms().begin()->second;
    for (std::size_t i = 1; i < forms.size(); ++i) w.components.push_back((QuadExt(1) / kappa) * forms[i]);
    w.surd = surd;
    return w;
}

/// Polynomial map on S^k (k >= 2) through the first coordinate.
inline RealPolyMap witness_sphere_k(const SemialgInput& in, int k = 2) {
    if (k < 2) throw InvalidInput("sphere witness needs k >= 2");
    Classification c = classify(in);
    if (!c.p_sphere_k_ge2)
        throw MathRejection("classifier_no", "classifier NO: S is not a polynomial image of S^k for k >= 2",
                            {{"case_label", to_string(c.case_label)}, {"mode", to_string(in.mode)},
                             {"real_trace_bounded", c.evidence.real_trace_bounded ? "true" : "false"}});
    RealPolyMap w;
    w.source = Source::SPHERE;
    w.k = k;
    w.vars = source_vars(Source::SPHERE, k);
    for (const auto& g : detail::interval_components(in))
        w.components.push_back(detail::embed_univariate(g, static_cast<std::size_t>(k) + 1));
    return w;
}

/// Finitely supported Laurent polynomial with Gaussian-rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<int, Gauss> c) {
        for (auto& [k, v] : c)
            if (!is_zero(v)) c_[k] = v;
    }
    static LaurentPoly monomial(const Gauss& c, int k) { return LaurentPoly({{k, c}}); }

    const std::map<int, Gauss>& coeffs() const { return c_; }
    Gauss coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Gauss(0) : it->second;
    }
    bool is_zero_poly() const { return c_.empty(); }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        for (const auto& [k, v] : b.c_) a.add(k, v);
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [i, u] : a.c_)
            for (const auto& [j, v] : b.c_) r.add(i + j, u * v);
        return r;
    }
    friend LaurentPoly operator*(const Gauss& s, const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [k, v] : a.c_) r.add(k, s * v);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (const auto& [k, v] : a.c_)
            if (b.coeff(k) != v) return false;
        return true;
    }

    std::complex<double> operator()(std::complex<double> z) const {
        std::complex<double> acc = 0;
        for (const auto& [k, v] : c_) acc += std::complex<double>(to_double(re(v)), to_double(im(v))) * std::pow(z, k);
        return acc;
    }

private:
    void add(int k, const Gauss& v) {
        if (is_zero(v)) return;
        auto [it, inserted] = c_.try_emplace(k, v);
        if (!inserted) {
            it->second = it->second + v;
            if (is_zero(it->second)) c_.erase(it);
        }
    }
    std::map<int, Gauss> c_;
};

inline std::string to_string(const LaurentPoly& l) {
    if (l.is_zero_poly()) return "0";
    std::string s;
    for (auto it = l.coeffs().rbegin(); it != l.coeffs().rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(it->second) + ")";
        if (it->first != 0) s += "*z^" + std::to_string(it->first);
    }
    return s;
}

/// Gamma with Gamma|S^1 = (g1 + i g2)|S^1, via x = (z + 1/z)/2, y = (z - 1/z)/(2i).
inline LaurentPoly laurent_from_real(const RealPolyMap& g) {
    if (g.source != Source::CIRCLE || g.m() != 2) throw InvalidInput("laurent_from_real needs a circle map into R^2");
    if (g.surd != 0)
        throw MathRejection("unsupported_extension",
                            "Laurent coefficients would leave the Gaussian rationals (surd " + g.surd.get_str() + ")",
                            {{"surd", g.surd.get_str()}});
    const Rat half(1, 2);
    const LaurentPoly X({{1, Gauss(half)}, {-1, Gauss(half)}});
    const LaurentPoly Y({{1, gauss(0, -half)}, {-1, gauss(0, half)}});
    std::map<unsigned, LaurentPoly> xpow{{0, LaurentPoly::monomial(Gauss(1), 0)}};
    std::map<unsigned, LaurentPoly> ypow{{0, LaurentPoly::monomial(Gauss(1), 0)}};
    auto power = [](std::map<unsigned, LaurentPoly>& cache, const LaurentPoly& base, unsigned k) {
        for (unsigned j = 1; j <= k; ++j)
            if (!cache.count(j)) cache[j] = cache[j - 1] * base;
        return cache[k];
    };
    LaurentPoly out;
    for (int comp = 0; comp < 2; ++comp) {
        for (const auto& [e, c] : g.components[static_cast<std::size_t>(comp)].terms()) {
            Gauss coeff = comp == 0 ? Gauss(c.a()) : gauss(0, c.a());
            out = out + coeff * (power(xpow, X, e[0]) * power(ypow, Y, e[1]));
        }
    }
    return out;
}

/// (Re Gamma, Im Gamma) on S^1 as a circle map in normal form.
inline RealPolyMap real_from_laurent(const LaurentPoly& l) {
    const QMPoly X = QMPoly::var(2, 0);
    const QMPoly iY = Gauss(gauss(0, 1)) * QMPoly::var(2, 1);
    const QMPoly z = X + iY;
    const QMPoly zbar = X - iY;
    QMPoly acc{Vars{2}};
    for (const auto& [k, c] : l.coeffs()) {
        QMPoly term = k >= 0 ? pow(z, static_cast<unsigned>(k)) : pow(zbar, static_cast<unsigned>(-k));
        acc += c * term;
    }
    auto [re_part, im_part] = split_surd(circle_reduce(acc));
    RealPolyMap g;
    g.source = Source::CIRCLE;
    g.vars = source_vars(Source::CIRCLE);
    g.components = {to_quad(re_part), to_quad(im_part)};
    return g;
}

/// Exact value of a witness at a source point with rational coordinates.
inline std::vector<QuadExt> eval_exact(const RealPolyMap& w, const std::vector<Rat>& at) {
    std::vector<QuadExt> out;
    for (const auto& c : w.components) {
        QuadExt acc(0);
        for (const auto& [e, v] : c.terms()) {
            QuadExt term = v;
            for (std::size_t i = 0; i < e.size(); ++i) term = term * QuadExt(rat_pow(at[i], e[i]));
            acc = acc + term;
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace rcurve
