#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/numfield.hpp"
#include "rcurve/param.hpp"
#include "rcurve/resultant.hpp"

namespace rcurve {

/// Polynomial in s with coefficients in Q[t].
using BPoly = Poly<UPoly>;

namespace detail {

inline UPoly bpoly_content(const BPoly& p) {
    UPoly g;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

inline BPoly bpoly_scale_down(const BPoly& p, const UPoly& c) {
    std::vector<UPoly> out;
    for (const auto& v : p.coeffs()) out.push_back(exact_quotient(v, c));
    return BPoly(std::move(out));
}

inline BPoly bpoly_primitive(const BPoly& p) {
    if (p.is_zero_poly()) return p;
    BPoly r = bpoly_scale_down(p, bpoly_content(p));
    // Make the leading coefficient monic in t.
    Rat inv = Rat(1) / r.lead().lead();
    std::vector<UPoly> out;
    for (const auto& v : r.coeffs()) out.push_back(inv * v);
    return BPoly(std::move(out));
}

/// gcd in Q[t][s], normalized: primitive over Q[t], leading coefficient monic.
inline BPoly bpoly_gcd(const BPoly& a, const BPoly& b) {
    if (a.is_zero_poly()) return bpoly_primitive(b) * BPoly(bpoly_content(b));
    if (b.is_zero_poly()) return bpoly_primitive(a) * BPoly(bpoly_content(a));
    UPoly content = gcd(bpoly_content(a), bpoly_content(b));
    BPoly x = bpoly_primitive(a);
    BPoly y = bpoly_primitive(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero_poly() && y.degree() > 0) {
        BPoly r = pseudo_rem(x, y);
        x = std::move(y);
        y = bpoly_primitive(r);
    }
    BPoly g = y.is_zero_poly() ? x : BPoly(UPoly(Rat(1)));
    return bpoly_primitive(g) * BPoly(content);
}

/// Exact quotient in Q[t][s].
inline BPoly bpoly_exact_div(const BPoly& num, const BPoly& den) {
    BPoly rem = num;
    std::vector<UPoly> quot(static_cast<std::size_t>(std::max(0, num.degree() - den.degree() + 1)));
    while (!rem.is_zero_poly() && rem.degree() >= den.degree()) {
        auto k = static_cast<std::size_t>(rem.degree() - den.degree());
        UPoly c = exact_quotient(rem.lead(), den.lead());
        quot[k] = c;
        rem = rem - BPoly::monomial(c, k) * den;
    }
    if (!rem.is_zero_poly()) throw std::logic_error("bpoly_exact_div: nonzero remainder");
    return BPoly(std::move(quot));
}

/// P_i(1,t) P_j(1,s) - P_j(1,t) P_i(1,s).
inline BPoly cross_difference(const UPoly& pi, const UPoly& pj) {
    const std::size_t n = std::max(pi.size(), pj.size());
    std::vector<UPoly> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(pj[k] * pi - pi[k] * pj);
    return BPoly(std::move(out));
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

/// Coincidence data of Pi: h = gcd of all cross differences, the generic fiber
/// degree deg_s(h), and the parameter pairs identified by Pi beyond h.
struct CoincidenceData {
    BPoly h;
    int generic_fiber_degree = 0;
    std::vector<std::pair<AlgPoint1, AlgPoint1>> node_pairs;
};

/// A group of parameter points with a common image under Pi.
struct PointGroup {
    std::vector<AlgPoint1> members;
};

/// Groups the roots of the given irreducible polynomials (and [0:1] when
/// `with_infinity`) by equality of their images under Pi. The decision is exact:
/// partner counts come from gcds over Q(alpha), partner identities from box
/// refinement until exactly that many candidates survive.
inline std::vector<PointGroup> group_by_image(const ProjParam& param, const std::vector<UPoly>& factors,
                                              bool with_infinity) {
    const std::size_t m = param.m();
    std::vector<UPoly> comps;
    for (std::size_t i = 0; i <= m; ++i) comps.push_back(param.affine(i));

    std::vector<AlgPoint1> points;
    std::vector<std::size_t> factor_of;  // index into factors, or npos for infinity
    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    if (with_infinity) {
        points.push_back(AlgPoint1::infinity());
        factor_of.push_back(kInf);
    }
    std::vector<std::vector<std::size_t>> roots_of(factors.size());
    for (std::size_t f = 0; f < factors.size(); ++f) {
        for (auto& r : isolate_irreducible_roots(factors[f])) {
            roots_of[f].push_back(points.size());
            points.push_back(std::move(r));
            factor_of.push_back(f);
        }
    }
    detail::UnionFind uf(points.size());

    // Infinity against each factor: all roots of q_b join iff q_b divides every
    // c_i P_j(1,s) - c_j P_i(1,s), with c = Pi(0,1).
    if (with_infinity) {
        for (std::size_t f = 0; f < factors.size(); ++f) {
            bool all = true;
            for (std::size_t i = 0; i <= m && all; ++i) {
                for (std::size_t j = i + 1; j <= m && all; ++j) {
                    UPoly dij = param[i].at_infinity() * comps[j] - param[j].at_infinity() * comps[i];
                    if (!divides(factors[f], dij)) all = false;
                }
            }
            if (all)
                for (auto idx : roots_of[f]) uf.unite(0, idx);
        }
    }

    for (std::size_t fa = 0; fa < factors.size(); ++fa) {
        NumberField K(factors[fa]);
        std::vector<NFElem> at_alpha;
        for (const auto& c : comps) at_alpha.push_back(K.element(c));
        for (std::size_t fb = fa; fb < factors.size(); ++fb) {
            Poly<NFElem> g = K.lift(factors[fb]);
            for (std::size_t i = 0; i <= m && g.degree() > 0; ++i) {
                for (std::size_t j = i + 1; j <= m && g.degree() > 0; ++j) {
                    Poly<NFElem> cij = Poly<NFElem>(at_alpha[i]) * K.lift(comps[j]) - Poly<NFElem>(at_alpha[j]) * K.lift(comps[i]);
                    if (!cij.is_zero_poly()) g = gcd(g, cij);
                }
            }
            const int wanted = g.degree();
            const int partners = wanted - (fa == fb ? 1 : 0);
            if (partners <= 0) continue;
            for (auto ia : roots_of[fa]) {
                AlgPoint1 alpha = points[ia];
                std::vector<std::size_t> cand = roots_of[fb];
                std::map<std::size_t, AlgPoint1> boxes;
                for (auto ib : cand) boxes[ib] = points[ib];
                while (true) {
                    std::vector<std::size_t> keep;
                    for (auto ib : cand) {
                        if (ib == ia) {
                            keep.push_back(ib);
                            continue;
                        }
                        if (enclose_at(g, alpha.box(), boxes[ib].box()).contains_zero()) keep.push_back(ib);
                    }
                    cand = std::move(keep);
                    if (static_cast<int>(cand.size()) <= wanted) break;
                    alpha = refine_once(alpha);
                    for (auto ib : cand) boxes[ib] = refine_once(boxes[ib]);
                }
                if (static_cast<int>(cand.size()) != wanted) throw std::logic_error("group_by_image: lost a partner");
                for (auto ib : cand) uf.unite(ia, ib);
            }
        }
    }

    std::map<std::size_t, PointGroup> groups;
    for (std::size_t i = 0; i < points.size(); ++i) groups[uf.find(i)].members.push_back(points[i]);
    std::vector<PointGroup> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    return out;
}

/// Cross-difference gcd and node pairs (the latter only when requested).
inline CoincidenceData properness_check(const ProjParam& param, bool with_nodes = true) {
    const std::size_t m = param.m();
    std::vector<BPoly> cross;
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
            BPoly c = detail::cross_difference(param.affine(i), param.affine(j));
            if (!c.is_zero_poly()) cross.push_back(std::move(c));
        }
    CoincidenceData out;
    for (const auto& c : cross) out.h = detail::bpoly_gcd(out.h, c);
    out.generic_fiber_degree = out.h.degree();
    if (!with_nodes || out.generic_fiber_degree != 1) return out;

    std::vector<BPoly> quotients;
    for (const auto& c : cross) quotients.push_back(detail::bpoly_exact_div(c, out.h));
    std::vector<UPoly> factors;
    if (quotients.size() >= 2) {
        // Resultant of two fixed integer combinations; retried if they share a factor.
        const int weights[5][2] = {{1, 2}, {3, -1}, {2, 5}, {-4, 3}, {7, 2}};
        for (int attempt = 0; attempt < 5; ++attempt) {
            BPoly l1, l2;
            for (std::size_t k = 0; k < quotients.size(); ++k) {
                int w = static_cast<int>(k) + 1;
                l1 = l1 + BPoly(UPoly(Rat(attempt % 2 == 0 ? w : w * w))) * quotients[k];
                l2 = l2 + BPoly(UPoly(Rat(weights[attempt][k % 2] + static_cast<int>(k)))) * quotients[k];
            }
            if (l1.degree() < 1 || l2.degree() < 1) break;
            UPoly r = resultant(l1, l2);
            if (r.is_zero_poly()) continue;
            if (r.degree() >= 1) factors = irreducible_factors(r);
            break;
        }
    }
    for (auto& group : group_by_image(param, factors, true)) {
        auto& mem = group.members;
        for (std::size_t a = 0; a < mem.size(); ++a)
            for (std::size_t b = a + 1; b < mem.size(); ++b) out.node_pairs.emplace_back(mem[a], mem[b]);
    }
    return out;
}

/// Fiber of the normalization over one point of the curve at infinity.
struct InfinityFiber {
    ProjPoint point;
    std::vector<AlgPoint1> fiber;
    std::vector<unsigned> multiplicities;
    bool is_real_point = false;
    bool fiber_is_conjugate_pair = false;
};

struct InfinityReport {
    std::vector<InfinityFiber> fibers;
    bool real_trace_bounded = false;
    int real_root_count_of_P0 = 0;
};

/// Number of distinct real projective roots of P0 (including [0:1]).
inline int real_root_count_of_p0(const ProjParam& param) {
    UPoly p0 = param.affine(0);
    int count = 0;
    if (p0.degree() >= 1) count = sturm_real_root_count(squarefree_part(p0));
    if (p0.degree() < param.degree()) ++count;
    return count;
}

/// The real trace Pi(RP^1) is bounded iff P0 has no real projective root.
inline bool is_real_trace_bounded(const ProjParam& param) { return real_root_count_of_p0(param) == 0; }

inline void require_proper(const ProjParam& param) {
    CoincidenceData c = properness_check(param, false);
    if (c.generic_fiber_degree != 1)
        throw MathRejection("improper",
                            "parameterization is not proper (generic fiber degree " +
                                std::to_string(c.generic_fiber_degree) + ")",
                            {{"generic_fiber_degree", std::to_string(c.generic_fiber_degree)}});
}

/// Points at infinity of the curve, grouped by their fibers in P^1.
inline InfinityReport infinity_fibers(const ProjParam& param) {
    require_proper(param);
    const UPoly p0 = param.affine(0);
    const bool root_at_infinity = p0.degree() < param.degree();
    std::vector<UPoly> factors;
    std::map<std::string, unsigned> mult_of;
    if (p0.degree() >= 1) {
        for (auto& f : factor_rational(p0)) {
            mult_of[to_string(f.poly)] = f.multiplicity;
            factors.push_back(f.poly);
        }
        std::sort(factors.begin(), factors.end(), [](const UPoly& a, const UPoly& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return to_string(a) < to_string(b);
        });
    }
    InfinityReport report;
    report.real_root_count_of_P0 = real_root_count_of_p0(param);
    report.real_trace_bounded = report.real_root_count_of_P0 == 0;

    for (auto& group : group_by_image(param, factors, root_at_infinity)) {
        InfinityFiber fib;
        fib.fiber = group.members;
        for (const auto& pt : fib.fiber)
            fib.multiplicities.push_back(pt.at_infinity ? static_cast<unsigned>(param.degree() - p0.degree())
                                                        : mult_of[to_string(pt.minpoly)]);
        fib.point = evaluate(param, fib.fiber.front());
        bool closed = true;
        for (const auto& pt : fib.fiber) {
            if (pt.is_real()) continue;
            bool found = false;
            for (const auto& other : fib.fiber)
                if (!other.is_real() && same_point(pt.conj(), other)) found = true;
            closed = closed && found;
        }
        fib.is_real_point = closed;
        fib.fiber_is_conjugate_pair = fib.fiber.size() == 2 && !fib.fiber[0].is_real() && !fib.fiber[1].is_real() &&
                                      same_point(fib.fiber[0].conj(), fib.fiber[1]);
        report.fibers.push_back(std::move(fib));
    }
    return report;
}

namespace detail {

inline MPoly implicit_sign_normalize(MPoly f) {
    // Dehomogenize at x0 = 1 and make the lex-leading term in (x1, x2) positive.
    const Exponents* best = nullptr;
    Rat coeff;
    for (const auto& [e, c] : f.terms()) {
        if (best == nullptr || std::make_pair(e[1], e[2]) > std::make_pair((*best)[1], (*best)[2])) {
            best = &e;
            coeff = c;
        }
    }
    return sgn(coeff) < 0 ? -f : f;
}

}  // namespace detail

/// Defining form F(x0, x1, x2) of the image of a proper plane parameterization.
inline MPoly implicitize_plane(const ProjParam& param) {
    if (param.m() != 2) throw InvalidInput("implicitize_plane needs m = 2, got m = " + std::to_string(param.m()));
    require_proper(param);
    const int d = param.degree();
    // Move the parameter so that [0:1] is not a root of P0.
    std::vector<HPoly2> comps = param.components();
    for (int k = 1; is_zero(comps[0].at_infinity()); ++k) {
        comps = param.components();
        for (auto& c : comps) c = c.substitute_linear(Rat(1), Rat(k), Rat(0), Rat(1));
    }
    const MPoly x0 = MPoly::var(3, 0), x1 = MPoly::var(3, 1), x2 = MPoly::var(3, 2);
    auto lift = [](const UPoly& p) {
        std::vector<MPoly> c;
        for (const auto& v : p.coeffs()) c.emplace_back(3, v);
        return Poly<MPoly>(std::move(c));
    };
    Poly<MPoly> p0 = lift(comps[0].dehomogenize());
    Poly<MPoly> p1 = lift(comps[1].dehomogenize());
    Poly<MPoly> p2 = lift(comps[2].dehomogenize());
    Poly<MPoly> a = Poly<MPoly>(x1) * p0 - Poly<MPoly>(x0) * p1;
    Poly<MPoly> b = Poly<MPoly>(x2) * p0 - Poly<MPoly>(x0) * p2;
    MPoly res = resultant(a, b);
    if (res.is_zero_poly()) throw std::logic_error("implicitize_plane: vanishing resultant");
    unsigned strip = static_cast<unsigned>(-1);
    for (const auto& [e, c] : res.terms()) strip = std::min(strip, e[0]);
    MPoly f = strip > 0 ? exact_div(res, MPoly::var(3, 0, strip)) : res;
    f = detail::implicit_sign_normalize(primitive_integer(f));
    if (!f.is_homogeneous() || f.total_degree() != d)
        throw std::logic_error("implicitize_plane: unexpected eliminant of degree " + std::to_string(f.total_degree()));
    std::vector<MPoly> at{param[0].to_mpoly(), param[1].to_mpoly(), param[2].to_mpoly()};
    if (!f.substitute(at).is_zero_poly()) throw std::logic_error("implicitize_plane: eliminant does not vanish");
    return f;
}

}  // namespace rcurve
