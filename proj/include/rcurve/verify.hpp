#pragma once

#include <string>
#include <vector>

#include "rcurve/curve_analysis.hpp"
#include "rcurve/oracle.hpp"
#include "rcurve/witness.hpp"

namespace rcurve {

/// Reduces modulo x1^2 + ... + xn^2 - 1 to degree at most 1 in the last variable.
inline QMPoly sphere_reduce(const QMPoly& p) {
    const std::size_t n = p.nvars();
    if (n < 2) return p;
    QMPoly rest(n, QuadExt(1));
    for (std::size_t i = 0; i + 1 < n; ++i) rest -= QMPoly::var(n, i, 2);
    QMPoly out{Vars{n}};
    for (const auto& [e, c] : p.terms()) {
        Exponents base = e;
        base[n - 1] = e[n - 1] % 2;
        QMPoly term = QMPoly::monomial(c, base);
        if (e[n - 1] / 2 > 0) term = term * pow(rest, e[n - 1] / 2);
        out += term;
    }
    return out;
}

struct VerifyReport {
    bool exact_checked = false;
    bool exact_ok = true;
    bool endpoints_checked = false;
    bool endpoints_ok = true;
    double hausdorff = 0;
    double tol = 0;
    std::size_t samples = 0;
    std::string detail;

    bool numeric_ok() const { return hausdorff <= tol; }
    bool pass() const { return exact_ok && endpoints_ok && numeric_ok(); }
    /// "exact_identity" and "endpoints" flag a wrong witness; "hausdorff" may be resolution.
    std::string failure_kind() const {
        if (!exact_ok) return "exact_identity";
        if (!endpoints_ok) return "endpoints";
        if (!numeric_ok()) return "hausdorff";
        return "";
    }
};

/// F(1, g1, g2) reduced on the source; zero iff the witness lies on the implicit curve.
inline QMPoly implicit_defect(const RealPolyMap& w, const MPoly& f) {
    const std::size_t nv = w.vars.size();
    std::vector<QMPoly> values{QMPoly(nv, QuadExt(1))};
    for (const auto& c : w.components) values.push_back(c);
    QMPoly r = compose_rat(f, values, nv);
    return w.source == Source::INTERVAL ? r : sphere_reduce(r);
}

inline VerifyReport verify_witness(const RealPolyMap& w, const SemialgInput& in, double tol = 1e-9,
                                   std::size_t n = 10000) {
    if (w.m() != in.param.m()) throw InvalidInput("witness and parameterization have different target dimensions");
    VerifyReport rep;
    rep.tol = tol;
    rep.samples = n;
    if (in.param.m() == 2) {
        rep.exact_checked = true;
        QMPoly defect = implicit_defect(w, implicitize_plane(in.param));
        rep.exact_ok = defect.is_zero_poly();
        if (!rep.exact_ok) rep.detail += "implicit equation does not vanish on the witness; ";
    }
    if (in.mode == Mode::ARC && w.source != Source::CIRCLE) {
        rep.endpoints_checked = true;
        std::vector<Rat> lo(w.vars.size(), Rat(0)), hi(w.vars.size(), Rat(0));
        lo[0] = -1;
        hi[0] = 1;
        auto target = [&](const Rat& t) {
            std::vector<QuadExt> v;
            const Rat den = in.param[0].eval<Rat>(Rat(1), t);
            for (std::size_t i = 1; i <= in.param.m(); ++i) v.emplace_back(Rat(in.param[i].eval<Rat>(Rat(1), t) / den));
            return v;
        };
        auto g_lo = eval_exact(w, lo), g_hi = eval_exact(w, hi);
        auto pa = target(in.a), pb = target(in.b);
        rep.endpoints_ok = (g_lo == pa && g_hi == pb) || (g_lo == pb && g_hi == pa);
        if (!rep.endpoints_ok) rep.detail += "witness endpoints differ from the arc endpoints; ";
    }
    rep.hausdorff = hausdorff_curves(curve_of(w), curve_of(in), n, tol / 100);
    if (!rep.numeric_ok()) rep.detail += "Hausdorff distance above tolerance; ";
    return rep;
}

inline VerifyReport verify_witness(const LaurentPoly& l, const SemialgInput& in, double tol = 1e-9,
                                   std::size_t n = 10000) {
    return verify_witness(real_from_laurent(l), in, tol, n);
}

}  // namespace rcurve
