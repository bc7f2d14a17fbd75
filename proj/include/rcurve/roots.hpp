#pragma once

#include <algorithm>
#include <complex>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/factor.hpp"
#include "rcurve/interval.hpp"
#include "rcurve/quadext.hpp"
#include "rcurve/sturm.hpp"

namespace rcurve {

/// Exact algebraic point of CP^1 in the affine chart t = t1/t0, or the point
/// at infinity [0:1]. A finite point is an irreducible minimal polynomial plus
/// a rational rectangle containing exactly one of its roots. Real roots carry
/// a degenerate imaginary interval [0, 0].
struct AlgPoint1 {
    bool at_infinity = false;
    UPoly minpoly;
    Interval re;
    Interval im;

    static AlgPoint1 infinity() {
        AlgPoint1 p;
        p.at_infinity = true;
        return p;
    }
    static AlgPoint1 rational(const Rat& r) {
        AlgPoint1 p;
        p.minpoly = UPoly{-r, Rat(1)};
        p.re = Interval(r);
        p.im = Interval(0);
        return p;
    }

    bool is_real() const { return at_infinity || (is_zero(im.lo) && is_zero(im.hi)); }
    bool is_rational() const { return at_infinity || minpoly.degree() == 1; }
    /// The value, for a rational finite point.
    Rat rational_value() const { return -minpoly[0] / minpoly[1]; }
    int degree() const { return at_infinity ? 1 : minpoly.degree(); }

    AlgPoint1 conj() const {
        AlgPoint1 c = *this;
        if (!at_infinity) c.im = Interval(-im.hi, -im.lo);
        return c;
    }
    CBox box() const { return {re, im}; }
    std::complex<double> approx() const { return {to_double(re.mid()), to_double(im.mid())}; }
};

namespace detail {

// Real and imaginary parts of f(z0 + u*dz) as polynomials in u.
inline std::pair<UPoly, UPoly> edge_polys(const UPoly& f, const Rat& z0re, const Rat& z0im, const Rat& dzre,
                                          const Rat& dzim) {
    const UPoly pr{z0re, dzre};
    const UPoly pi{z0im, dzim};
    UPoly ar, ai;
    for (std::size_t k = f.size(); k-- > 0;) {
        UPoly nr = ar * pr - ai * pi + UPoly(f[k]);
        UPoly ni = ar * pi + ai * pr;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {ar, ai};
}

inline bool has_root_in_closed_unit(const UPoly& g) {
    if (g.degree() < 1) return false;
    UPoly s = squarefree_part(g);
    if (is_zero(s(Rat(0)))) return true;
    auto seq = signed_remainder_sequence(s, s.derivative());
    return sign_variations(seq, Rat(0)) - sign_variations(seq, Rat(1)) > 0;
}

}  // namespace detail

/// Number of roots of a squarefree f inside the closed rectangle, by the
/// argument principle with exact Cauchy indices. Empty if a root lies on the
/// boundary or the rectangle is degenerate.
inline std::optional<int> count_roots_in_box(const UPoly& f, const CBox& b) {
    if (!(b.re.lo < b.re.hi) || !(b.im.lo < b.im.hi)) return std::nullopt;
    const Rat& x0 = b.re.lo;
    const Rat& x1 = b.re.hi;
    const Rat& y0 = b.im.lo;
    const Rat& y1 = b.im.hi;
    // Counterclockwise edges: start point and direction.
    const Rat edges[4][4] = {{x0, y0, x1 - x0, Rat(0)},
                             {x1, y0, Rat(0), y1 - y0},
                             {x1, y1, x0 - x1, Rat(0)},
                             {x0, y1, Rat(0), y0 - y1}};
    std::pair<UPoly, UPoly> parts[4];
    for (int e = 0; e < 4; ++e) {
        parts[e] = detail::edge_polys(f, edges[e][0], edges[e][1], edges[e][2], edges[e][3]);
        const auto& [r, i] = parts[e];
        if (r.is_zero_poly() && i.is_zero_poly()) return std::nullopt;
        UPoly g = gcd(r, i);
        if (detail::has_root_in_closed_unit(g)) return std::nullopt;
    }
    // Rotate by a Gaussian unit w so that Im(w f) is nonzero at every corner.
    const int rotations[5][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}};
    for (const auto& w : rotations) {
        bool ok = true;
        UPoly rs[4], is[4];
        for (int e = 0; e < 4 && ok; ++e) {
            const auto& [r, i] = parts[e];
            rs[e] = Rat(w[0]) * r - Rat(w[1]) * i;
            is[e] = Rat(w[1]) * r + Rat(w[0]) * i;
            if (is_zero(is[e](Rat(0))) || is_zero(is[e](Rat(1)))) ok = false;
        }
        if (!ok) continue;
        int total = 0;
        for (int e = 0; e < 4; ++e) total += cauchy_index(rs[e], is[e], Rat(0), Rat(1));
        return total / 2;
    }
    return std::nullopt;
}

namespace detail {

// Splits a box into four children, nudging the cut lines off the midpoint
// until every child count is defined.
inline std::vector<std::pair<CBox, int>> split_box(const UPoly& f, const CBox& b) {
    const Rat w = b.re.width();
    const Rat h = b.im.width();
    for (int attempt = 0; attempt < 64; ++attempt) {
        int k = (attempt + 1) / 2 * (attempt % 2 == 0 ? 1 : -1);
        Rat xm = b.re.mid() + Rat(k) * w / 97;
        Rat ym = b.im.mid() + Rat(k) * h / 89;
        CBox kids[4] = {{{b.re.lo, xm}, {b.im.lo, ym}},
                        {{xm, b.re.hi}, {b.im.lo, ym}},
                        {{b.re.lo, xm}, {ym, b.im.hi}},
                        {{xm, b.re.hi}, {ym, b.im.hi}}};
        std::vector<std::pair<CBox, int>> out;
        bool ok = true;
        for (auto& kid : kids) {
            auto c = count_roots_in_box(f, kid);
            if (!c) {
                ok = false;
                break;
            }
            if (*c > 0) out.emplace_back(kid, *c);
        }
        if (ok) return out;
    }
    throw std::logic_error("split_box: no admissible cut");
}

// Isolates the roots with positive imaginary part of a squarefree f.
inline std::vector<CBox> isolate_upper_roots(const UPoly& f, int upper_count) {
    std::vector<CBox> out;
    if (upper_count == 0) return out;
    const Rat b = root_bound(f);
    Rat c = b / 2;
    std::optional<CBox> start;
    for (int iter = 0; iter < 4000 && !start; ++iter) {
        CBox candidate{{-b, b}, {c, b}};
        auto n = count_roots_in_box(f, candidate);
        if (n && *n == upper_count) start = candidate;
        else c = (iter % 3 == 2) ? Rat(c * 2 / 5) : Rat(c / 2);
    }
    if (!start) throw std::logic_error("isolate_upper_roots: no separating height");
    std::deque<std::pair<CBox, int>> work{{*start, upper_count}};
    while (!work.empty()) {
        auto [box, n] = work.front();
        work.pop_front();
        if (n == 1) {
            out.push_back(box);
            continue;
        }
        for (auto& kid : split_box(f, box)) work.push_back(kid);
    }
    std::sort(out.begin(), out.end(), [](const CBox& x, const CBox& y) {
        if (x.re.lo != y.re.lo) return x.re.lo < y.re.lo;
        return x.im.lo < y.im.lo;
    });
    return out;
}

inline bool boxes_overlap(const AlgPoint1& a, const AlgPoint1& b) {
    return !(a.re.hi < b.re.lo || b.re.hi < a.re.lo || a.im.hi < b.im.lo || b.im.hi < a.im.lo);
}

}  // namespace detail

/// Isolating boxes for the roots of an irreducible polynomial, real roots
/// first (increasing), then each upper root followed by its mirror image.
inline std::vector<AlgPoint1> isolate_irreducible_roots(const UPoly& q_in) {
    UPoly q = monic(q_in);
    std::vector<AlgPoint1> out;
    if (q.degree() == 1) {
        out.push_back(AlgPoint1::rational(-q[0]));
        return out;
    }
    auto reals = isolate_real_roots(q);
    for (auto& [lo, hi] : reals) {
        AlgPoint1 p;
        p.minpoly = q;
        p.re = Interval(lo, hi);
        p.im = Interval(0);
        out.push_back(p);
    }
    int upper = (q.degree() - static_cast<int>(reals.size())) / 2;
    for (auto& box : detail::isolate_upper_roots(q, upper)) {
        AlgPoint1 p;
        p.minpoly = q;
        p.re = box.re;
        p.im = box.im;
        out.push_back(p);
        out.push_back(p.conj());
    }
    return out;
}

/// Shrinks the box of p until both sides are at most target_width.
inline AlgPoint1 refine_box(const AlgPoint1& p, const Rat& target_width) {
    if (p.at_infinity || p.minpoly.degree() == 1) return p;
    AlgPoint1 r = p;
    if (r.is_real()) {
        auto [lo, hi] = refine_real_interval(r.minpoly, r.re.lo, r.re.hi, target_width);
        r.re = Interval(lo, hi);
        return r;
    }
    while (r.re.width() > target_width || r.im.width() > target_width) {
        bool found = false;
        for (auto& [kid, n] : detail::split_box(r.minpoly, r.box())) {
            if (n == 1) {
                r.re = kid.re;
                r.im = kid.im;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("refine_box: root lost");
    }
    return r;
}

/// Halves the larger dimension of the box once (real boxes: one bisection).
inline AlgPoint1 refine_once(const AlgPoint1& p) {
    if (p.at_infinity || p.minpoly.degree() == 1) return p;
    Rat w = std::max(p.re.width(), p.im.width());
    return refine_box(p, w / 2);
}

/// Whether a and b denote the same algebraic point.
inline bool same_point(AlgPoint1 a, AlgPoint1 b) {
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    if (a.minpoly != b.minpoly) return false;
    if (a.minpoly.degree() == 1) return true;
    if (a.is_real() != b.is_real()) return false;
    while (true) {
        if (!detail::boxes_overlap(a, b)) return false;
        CBox hull{{std::min(a.re.lo, b.re.lo), std::max(a.re.hi, b.re.hi)},
                  {std::min(a.im.lo, b.im.lo), std::max(a.im.hi, b.im.hi)}};
        if (a.is_real()) {
            if (sturm_real_root_count(a.minpoly, hull.re.lo, hull.re.hi) == 1) return true;
        } else {
            auto n = count_roots_in_box(a.minpoly, hull);
            if (n && *n == 1) return true;
        }
        a = refine_once(a);
        b = refine_once(b);
    }
}

/// Certified isolation of all complex roots of a squarefree f: deg(f) pairwise
/// disjoint boxes, each carrying the irreducible factor it is a root of.
inline std::vector<AlgPoint1> isolate_complex_roots(const UPoly& f) {
    if (f.is_zero_poly()) throw InvalidInput("isolate_complex_roots of the zero polynomial");
    if (!is_squarefree(f)) throw InvalidInput("isolate_complex_roots needs a squarefree polynomial");
    std::vector<AlgPoint1> out;
    if (f.degree() < 1) return out;
    for (const auto& q : irreducible_factors(f)) {
        for (auto& p : isolate_irreducible_roots(q)) out.push_back(std::move(p));
    }
    // Boxes from different factors may overlap; refine until disjoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                if (out[i].minpoly == out[j].minpoly) continue;
                if (detail::boxes_overlap(out[i], out[j])) {
                    out[i] = refine_once(out[i]);
                    out[j] = refine_once(out[j]);
                    changed = true;
                }
            }
        }
    }
    // Conjugate partners: keep each nonreal box's mirror in step after refinement.
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].is_real() || sgn(out[i].im.lo) < 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (j == i || out[j].is_real() || out[j].minpoly != out[i].minpoly || sgn(out[j].im.lo) >= 0) continue;
            if (same_point(out[i].conj(), out[j])) {
                AlgPoint1 hull = out[i];
                hull.re = Interval(std::max(out[i].re.lo, out[j].re.lo), std::min(out[i].re.hi, out[j].re.hi));
                hull.im = Interval(std::max(out[i].im.lo, Rat(-out[j].im.hi)), std::min(out[i].im.hi, Rat(-out[j].im.lo)));
                auto n = count_roots_in_box(hull.minpoly, hull.box());
                if (n && *n == 1) {
                    out[i] = hull;
                    out[j] = hull.conj();
                }
            }
        }
    }
    return out;
}

/// Exact value of a point of degree at most 2 as an element of Q or Q(sqrt d).
inline QuadExt as_quadext(const AlgPoint1& p) {
    if (p.at_infinity) throw InvalidInput("as_quadext: point at infinity");
    if (p.minpoly.degree() == 1) return QuadExt(p.rational_value());
    if (p.minpoly.degree() != 2) throw InvalidInput("as_quadext: degree " + std::to_string(p.minpoly.degree()) + " point");
    UPoly q = monic(p.minpoly);
    // t = -q1/2 +- sqrt(disc)/2 with disc = q1^2 - 4 q0 = n/m.
    Rat disc = q[1] * q[1] - 4 * q[0];
    Integer nd = disc.get_num() * disc.get_den();
    Integer root_part;
    Integer core = squarefree_core(nd, &root_part);
    Rat half_width = make_rat(root_part, disc.get_den()) / 2;
    Rat center = -q[1] / 2;
    QuadExt plus(QuadExt::Unchecked{}, core, center, half_width);
    if (core < 0) return sgn(p.im.lo) > 0 ? plus : plus.conj();
    // Real root: pick the sign that lands inside the box.
    QuadExt lo_gap = plus - QuadExt(p.re.lo);
    QuadExt hi_gap = QuadExt(p.re.hi) - plus;
    if (lo_gap.sign() >= 0 && hi_gap.sign() >= 0) return plus;
    return plus.conj();
}

/// Index of the conjugate of out[i] in a list returned by isolate_complex_roots.
inline std::size_t conjugate_index(const std::vector<AlgPoint1>& roots, std::size_t i) {
    if (roots[i].is_real()) return i;
    for (std::size_t j = 0; j < roots.size(); ++j)
        if (j != i && !roots[j].is_real() && same_point(roots[i].conj(), roots[j])) return j;
    throw std::logic_error("conjugate_index: no conjugate found");
}

inline std::string to_string(const AlgPoint1& p) {
    if (p.at_infinity) return "[0:1]";
    if (p.minpoly.degree() == 1) return "[1:" + p.rational_value().get_str() + "]";
    return "root of " + to_string(p.minpoly) + " in [" + p.re.lo.get_str() + "," + p.re.hi.get_str() + "]x[" +
           p.im.lo.get_str() + "," + p.im.hi.get_str() + "]";
}

}  // namespace rcurve
