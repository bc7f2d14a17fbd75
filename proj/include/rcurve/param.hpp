#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/hpoly2.hpp"
#include "rcurve/parser.hpp"
#include "rcurve/quadext.hpp"
#include "rcurve/roots.hpp"
#include "rcurve/sturm.hpp"

namespace rcurve {

class ProjParam;
inline ProjParam reduce(std::vector<HPoly2> raw);

/// Reduced projective parameterization [P0 : ... : Pm] of a curve in P^m.
///
/// Components share a degree d >= 1, have no common factor, and are scaled
/// to a primitive integer tuple whose first nonzero coefficient of P0 is positive.
class ProjParam {
public:
    const std::vector<HPoly2>& components() const { return comps_; }
    const HPoly2& operator[](std::size_t i) const { return comps_[i]; }
    int degree() const { return comps_.front().degree(); }
    /// Target dimension m (number of components minus one).
    std::size_t m() const { return comps_.size() - 1; }
    /// P_i(1, t).
    UPoly affine(std::size_t i) const { return comps_[i].dehomogenize(); }

    friend bool operator==(const ProjParam& a, const ProjParam& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const ProjParam& a, const ProjParam& b) { return !(a == b); }

    friend ProjParam reduce(std::vector<HPoly2> raw);

private:
    std::vector<HPoly2> comps_;
};

/// Divides the components by their common factor and fixes the scaling.
inline ProjParam reduce(std::vector<HPoly2> raw) {
    if (raw.size() < 2) throw InvalidInput("a parameterization needs at least two components");
    const int d = raw.front().degree();
    for (const auto& c : raw)
        if (c.degree() != d) throw InvalidInput("components have unequal degrees");
    bool all_zero = true;
    for (const auto& c : raw) all_zero = all_zero && c.is_zero_form();
    if (all_zero) throw InvalidInput("all components are zero");
    if (raw.front().is_zero_form()) throw InvalidInput("component P0 is identically zero");

    // Common factor = t0^k * g(t0, t1) with g coprime to t0.
    int k = d;
    UPoly g;
    for (const auto& c : raw) {
        if (c.is_zero_form()) continue;
        UPoly a = c.dehomogenize();
        k = std::min(k, d - a.degree());
        g = gcd(g, a);
    }
    const int nd = d - k - g.degree();
    if (nd == 0) throw MathRejection("constant", "parameterization is constant (all components proportional)");
    std::vector<HPoly2> out;
    for (const auto& c : raw) out.push_back(HPoly2::homogenize(exact_quotient(c.dehomogenize(), g), nd));

    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& c : out)
        for (const auto& v : c.coeffs()) den_lcm = int_lcm(den_lcm, v.get_den());
    for (const auto& c : out)
        for (const auto& v : c.coeffs()) num_gcd = int_gcd(num_gcd, Integer(v.get_num() * (den_lcm / v.get_den())));
    Rat scale = make_rat(den_lcm, num_gcd);
    for (const auto& v : out.front().coeffs()) {
        if (!is_zero(v)) {
            if (sgn(v) < 0) scale = -scale;
            break;
        }
    }
    ProjParam p;
    for (auto& c : out) p.comps_.push_back(scale * c);
    return p;
}

/// Parses homogeneous component strings in t0, t1.
inline ProjParam parse_param(const std::vector<std::string>& components) {
    std::vector<MPoly> polys;
    int d = -1;
    for (const auto& s : components) {
        polys.push_back(parse_poly(s, {"t0", "t1"}));
        if (!polys.back().is_zero_poly()) {
            if (d >= 0 && polys.back().total_degree() != d) throw InvalidInput("components have unequal degrees");
            d = polys.back().total_degree();
        }
    }
    if (d < 0) throw InvalidInput("all components are zero");
    std::vector<HPoly2> forms;
    for (const auto& p : polys) forms.push_back(p.is_zero_poly() ? HPoly2(d, {}) : HPoly2::from_mpoly(p));
    return reduce(std::move(forms));
}

/// Homogenizes an affine rational map t -> (num_1/den_1, ..., num_m/den_m).
inline ProjParam homogenize_affine(const std::vector<std::pair<UPoly, UPoly>>& fractions) {
    if (fractions.empty()) throw InvalidInput("affine map needs at least one coordinate");
    UPoly common(Rat(1));
    for (const auto& [num, den] : fractions) {
        if (den.is_zero_poly()) throw InvalidInput("zero denominator polynomial");
        common = exact_quotient(common * den, gcd(common, den));
    }
    std::vector<UPoly> parts{common};
    for (const auto& [num, den] : fractions) parts.push_back(num * exact_quotient(common, den));
    int d = 0;
    for (const auto& p : parts) d = std::max(d, p.degree());
    std::vector<HPoly2> forms;
    for (const auto& p : parts) forms.push_back(HPoly2::homogenize(p, d));
    return reduce(std::move(forms));
}

/// Invertible 2x2 matrix acting on [t0 : t1] by [a t0 + b t1 : c t0 + d t1].
struct Mobius {
    QuadExt a = 1, b = 0, c = 0, d = 1;

    QuadExt det() const { return a * d - b * c; }
    bool is_rational() const { return a.is_rational() && b.is_rational() && c.is_rational() && d.is_rational(); }
    Mobius inverse() const {
        QuadExt det_ = det();
        if (is_zero(det_)) throw InvalidInput("singular Mobius transformation");
        return {d / det_, QuadExt(0) - b / det_, QuadExt(0) - c / det_, a / det_};
    }
    static Mobius swap() { return {0, 1, 1, 0}; }
};

/// Pi o M^{-1}: the reparameterization under which M(t) has the old image of t.
inline ProjParam apply_mobius(const ProjParam& p, const Mobius& M) {
    if (is_zero(M.det())) throw InvalidInput("singular Mobius transformation");
    if (!M.is_rational()) throw InvalidInput("apply_mobius on a rational parameterization needs rational entries");
    // M^{-1} is proportional to [[d, -b], [-c, a]].
    std::vector<HPoly2> out;
    for (const auto& c : p.components())
        out.push_back(c.substitute_linear(M.d.a(), -M.b.a(), -M.c.a(), M.a.a()));
    return reduce(std::move(out));
}

/// Complex conjugation acts trivially on rational coefficients.
inline ProjParam conjugate_param(const ProjParam& p) { return p; }

/// Postcomposes with the affine map x -> A x + shift of the target R^m.
inline ProjParam apply_affine_target(const ProjParam& p, const std::vector<std::vector<Rat>>& A,
                                     const std::vector<Rat>& shift) {
    const std::size_t m = p.m();
    if (A.size() != m || shift.size() != m) throw InvalidInput("affine map has the wrong size");
    std::vector<HPoly2> out{p[0]};
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != m) throw InvalidInput("affine map has the wrong size");
        HPoly2 acc = shift[i] * p[0];
        for (std::size_t j = 0; j < m; ++j) acc = acc + A[i][j] * p[j + 1];
        out.push_back(acc);
    }
    return reduce(std::move(out));
}

/// Projective point with exact coordinates in Q or Q(sqrt d), normalized so the
/// first nonzero coordinate is 1; or certified boxes for higher-degree points.
struct ProjPoint {
    bool exact = true;
    std::vector<QuadExt> coords;
    std::vector<CBox> boxes;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (!a.exact || !b.exact) throw InvalidInput("comparing non-exact projective points");
        return a.coords == b.coords;
    }
};

inline std::vector<QuadExt> normalize_projective(std::vector<QuadExt> v) {
    for (const auto& c : v) {
        if (!is_zero(c)) {
            QuadExt lead = c;
            for (auto& x : v) x = x / lead;
            return v;
        }
    }
    throw InvalidInput("zero projective vector");
}

/// Pi([t0 : t1]) for a rational pair.
inline ProjPoint evaluate(const ProjParam& p, const Rat& t0, const Rat& t1) {
    std::vector<QuadExt> v;
    for (const auto& c : p.components()) v.emplace_back(c.eval<Rat>(t0, t1));
    return {true, normalize_projective(std::move(v)), {}};
}

/// Pi at an algebraic parameter value.
inline ProjPoint evaluate(const ProjParam& p, const AlgPoint1& t) {
    if (t.at_infinity) return evaluate(p, Rat(0), Rat(1));
    if (t.degree() <= 2) {
        QuadExt a = as_quadext(t);
        std::vector<QuadExt> v;
        for (const auto& c : p.components()) v.push_back(c.eval<QuadExt>(QuadExt(1), a));
        return {true, normalize_projective(std::move(v)), {}};
    }
    ProjPoint out;
    out.exact = false;
    for (const auto& c : p.components()) out.boxes.push_back(eval_box(c.dehomogenize(), t.box()));
    return out;
}

inline std::string to_string(const ProjPoint& pt) {
    std::string s = "[";
    if (pt.exact) {
        for (std::size_t i = 0; i < pt.coords.size(); ++i) s += (i ? ":" : "") + to_string(pt.coords[i]);
    } else {
        for (std::size_t i = 0; i < pt.boxes.size(); ++i) {
            const auto& b = pt.boxes[i];
            s += (i ? ":" : "") + std::to_string(to_double(b.re.mid())) + "+" + std::to_string(to_double(b.im.mid())) + "i";
        }
    }
    return s + "]";
}

enum class Mode { FULL_TRACE, ARC };

/// The semialgebraic set S: the full real trace Pi(RP^1), or Pi([a, b]).
struct SemialgInput {
    ProjParam param;
    Mode mode = Mode::FULL_TRACE;
    Rat a = 0;
    Rat b = 0;

    static SemialgInput full(ProjParam p) { return {std::move(p), Mode::FULL_TRACE, 0, 0}; }
    static SemialgInput arc(ProjParam p, const Rat& a, const Rat& b) {
        if (!(a < b)) throw InvalidInput("arc bounds need a < b");
        UPoly den = squarefree_part(p.affine(0));
        if (is_zero(den(a)) || sturm_real_root_count(den, a, b) > 0)
            throw MathRejection("arc_meets_infinity", "the arc [" + a.get_str() + ", " + b.get_str() +
                                                          "] contains a real root of P0",
                                {{"P0", to_string(p[0])}});
        return {std::move(p), Mode::ARC, a, b};
    }
};

}  // namespace rcurve
