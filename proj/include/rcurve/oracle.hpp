#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcurve/witness.hpp"

namespace rcurve {

using Point = std::vector<double>;

/// Finite sample of a curve with the parameter value of each point.
struct SampleCloud {
    std::vector<Point> points;
    std::vector<double> params;
    std::size_t dropped = 0;  // samples skipped at denominator roots
    bool closed = false;
    std::vector<std::size_t> breaks;  // i such that points i-1 and i are not joined

    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }

    void push(Point p, double s) {
        for (double v : p)
            if (!std::isfinite(v)) throw InvalidInput("non-finite sample value");
        if (!points.empty() && p.size() != points.front().size()) throw InvalidInput("mixed sample dimensions");
        points.push_back(std::move(p));
        params.push_back(s);
    }
};

/// Parametric curve s -> f(s) on [lo, hi]; f returns an empty point where undefined.
struct Curve {
    std::function<Point(double)> f;
    double lo = -1;
    double hi = 1;
    bool closed = false;  // f(lo) and f(hi) coincide and the ends are joined
};

namespace detail {

struct DoubleTerm {
    double coeff;
    Exponents e;
};

inline std::vector<DoubleTerm> compile(const QMPoly& p) {
    std::vector<DoubleTerm> out;
    for (const auto& [e, c] : p.terms()) out.push_back({c.real_approx(), e});
    return out;
}

inline double eval_terms(const std::vector<DoubleTerm>& terms, const std::vector<double>& x) {
    double acc = 0;
    for (const auto& t : terms) {
        double v = t.coeff;
        for (std::size_t i = 0; i < t.e.size(); ++i)
            for (unsigned k = 0; k < t.e[i]; ++k) v *= x[i];
        acc += v;
    }
    return acc;
}

inline double horner(const std::vector<double>& c, double t0, double t1) {
    // sum c_k t0^(d-k) t1^k
    double acc = 0, p1 = 1;
    for (double v : c) {
        acc = acc * t0 + v * p1;
        p1 *= t1;
    }
    return acc;
}

inline std::vector<std::vector<double>> form_coeffs(const ProjParam& p) {
    std::vector<std::vector<double>> out;
    for (const auto& c : p.components()) {
        std::vector<double> v;
        for (const auto& x : c.coeffs()) v.push_back(to_double(x));
        out.push_back(std::move(v));
    }
    return out;
}

inline double l1(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += std::abs(x);
    return s;
}

}  // namespace detail

/// The real trace of a parameterization: [t0 : t1] = [cos(s/2) : sin(s/2)], s in (-pi, pi].
inline Curve curve_of(const ProjParam& p) {
    auto c = detail::form_coeffs(p);
    const double eps = 1e-12 * detail::l1(c[0]);
    Curve out;
    out.lo = -std::numbers::pi;
    out.hi = std::numbers::pi;
    out.closed = true;
    out.f = [c, eps](double s) -> Point {
        const double t0 = std::cos(s / 2), t1 = std::sin(s / 2);
        const double den = detail::horner(c[0], t0, t1);
        if (std::abs(den) <= eps) return {};
        Point x;
        for (std::size_t i = 1; i < c.size(); ++i) x.push_back(detail::horner(c[i], t0, t1) / den);
        return x;
    };
    return out;
}

inline Curve curve_of(const SemialgInput& in) {
    if (in.mode == Mode::FULL_TRACE) return curve_of(in.param);
    auto c = detail::form_coeffs(in.param);
    const double eps = 1e-12 * detail::l1(c[0]);
    Curve out;
    out.lo = to_double(in.a);
    out.hi = to_double(in.b);
    out.f = [c, eps](double t) -> Point {
        const double den = detail::horner(c[0], 1.0, t);
        if (std::abs(den) <= eps) return {};
        Point x;
        for (std::size_t i = 1; i < c.size(); ++i) x.push_back(detail::horner(c[i], 1.0, t) / den);
        return x;
    };
    return out;
}

/// The image of a witness: [-1, 1] for INTERVAL, the unit circle for CIRCLE,
/// the great circle in the (x1, x2)-plane for SPHERE (maps through the first coordinate only).
inline Curve curve_of(const RealPolyMap& w) {
    std::vector<std::vector<detail::DoubleTerm>> comps;
    for (const auto& c : w.components) comps.push_back(detail::compile(c));
    const std::size_t nv = w.vars.size();
    Curve out;
    if (w.source == Source::INTERVAL) {
        out.f = [comps](double u) -> Point {
            Point x;
            for (const auto& c : comps) x.push_back(detail::eval_terms(c, {u}));
            return x;
        };
        return out;
    }
    if (w.source == Source::SPHERE) {
        for (const auto& c : w.components)
            for (const auto& [e, v] : c.terms())
                for (std::size_t i = 1; i < e.size(); ++i)
                    if (e[i] != 0) throw InvalidInput("sphere witness depends on more than the first coordinate");
    }
    out.lo = -std::numbers::pi;
    out.hi = std::numbers::pi;
    out.closed = true;
    out.f = [comps, nv](double s) -> Point {
        std::vector<double> at(nv, 0.0);
        at[0] = std::cos(s);
        at[1] = std::sin(s);
        Point x;
        for (const auto& c : comps) x.push_back(detail::eval_terms(c, at));
        return x;
    };
    return out;
}

inline Curve curve_of(const LaurentPoly& l) {
    Curve out;
    out.lo = -std::numbers::pi;
    out.hi = std::numbers::pi;
    out.closed = true;
    out.f = [l](double s) -> Point {
        std::complex<double> v = l(std::polar(1.0, s));
        return {v.real(), v.imag()};
    };
    return out;
}

/// n samples: closed curves at lo + (hi-lo)(j+1)/n, open ones at lo + (hi-lo) j/(n-1).
inline SampleCloud sample(const Curve& c, std::size_t n) {
    if (n < 2) throw InvalidInput("sample count must be at least 2");
    SampleCloud out;
    out.closed = c.closed;
    bool gap = false;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = c.closed ? c.lo + (c.hi - c.lo) * static_cast<double>(j + 1) / static_cast<double>(n)
                                  : c.lo + (c.hi - c.lo) * static_cast<double>(j) / static_cast<double>(n - 1);
        Point p = c.f(s);
        if (p.empty()) {
            ++out.dropped;
            gap = true;
            continue;
        }
        if (gap && !out.points.empty()) out.breaks.push_back(out.points.size());
        if (gap && out.points.empty() && c.closed) out.closed = false;
        gap = false;
        out.push(std::move(p), s);
    }
    if (gap) out.closed = false;
    if (out.points.empty()) throw InvalidInput("every sample hit a denominator root");
    return out;
}

inline SampleCloud sample(const SemialgInput& in, std::size_t n) { return sample(curve_of(in), n); }
inline SampleCloud sample(const RealPolyMap& w, std::size_t n) { return sample(curve_of(w), n); }
inline SampleCloud sample(const LaurentPoly& l, std::size_t n) { return sample(curve_of(l), n); }

namespace detail {

inline double dist(const Point& a, const Point& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

inline double seg_dist2(const double* p, const double* a, const double* b, std::size_t dim) {
    double ab2 = 0, ap_ab = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        ab2 += (b[i] - a[i]) * (b[i] - a[i]);
        ap_ab += (p[i] - a[i]) * (b[i] - a[i]);
    }
    const double u = ab2 > 0 ? std::clamp(ap_ab / ab2, 0.0, 1.0) : 0.0;
    double s = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double q = a[i] + u * (b[i] - a[i]);
        s += (p[i] - q) * (p[i] - q);
    }
    return s;
}

inline double seg_dist2(const Point& p, const Point& a, const Point& b) { return seg_dist2(p.data(), a.data(), b.data(), p.size()); }

inline double seg_dist(const Point& p, const Point& a, const Point& b) { return std::sqrt(seg_dist2(p, a, b)); }

/// Bounding-box hierarchy over segments between points, built on the given order.
class SegmentIndex {
public:
    SegmentIndex(const std::vector<Point>& pts, std::vector<std::pair<std::size_t, std::size_t>> segs)
        : segs_(std::move(segs)) {
        if (segs_.empty() || pts.empty()) throw InvalidInput("empty cloud");
        dim_ = pts.front().size();
        coords_.reserve(pts.size() * dim_);
        for (const auto& q : pts) coords_.insert(coords_.end(), q.begin(), q.end());
        nodes_.reserve(2 * segs_.size() / kLeaf + 2);
        build(0, segs_.size());
    }

    const std::pair<std::size_t, std::size_t>& segment(std::size_t k) const { return segs_[k]; }

    std::size_t size() const { return segs_.size(); }

    /// Nearest segment among the kWindow neighbours on either side of `hint`.
    std::pair<double, std::size_t> window_nearest(const Point& p, std::size_t hint) const {
        std::vector<std::pair<double, std::size_t>> best;
        const std::size_t n = segs_.size(), span = std::min(n, 2 * kWindow + 1);
        const std::size_t begin = (hint + n - std::min(kWindow, n / 2)) % n;
        for (std::size_t j = 0; j < span; ++j) consider(p, (begin + j) % n, 1, best);
        return {std::sqrt(best.front().first), best.front().second};
    }

    /// The k nearest segments to p as (distance, segment index), nearest first.
    /// Segments within kWindow of `hint` are scored first to tighten the search bound.
    std::vector<std::pair<double, std::size_t>> nearest(const Point& p, std::size_t k,
                                                        std::optional<std::size_t> hint = std::nullopt) const {
        std::vector<std::pair<double, std::size_t>> best;
        best.reserve(k + 1);
        Window w;
        if (hint && segs_.size() > 2 * kWindow + 1) {
            w.active = true;
            w.begin = (*hint + segs_.size() - kWindow) % segs_.size();
            for (std::size_t j = 0; j <= 2 * kWindow; ++j) consider(p, (w.begin + j) % segs_.size(), k, best);
        }
        if (w.active)
            descend(0, p, k, best, w);
        else
            search(0, p, k, best, w);
        for (auto& b : best) b.first = std::sqrt(b.first);
        return best;
    }

private:
    struct Node {
        std::size_t begin, end;
        std::size_t left = 0, right = 0;  // 0 for leaves
    };
    static constexpr std::size_t kLeaf = 8;
    static constexpr std::size_t kWindow = 3;

    struct Window {
        bool active = false;
        std::size_t begin = 0;
    };
    bool in_window(const Window& w, std::size_t s) const {
        return w.active && (s + segs_.size() - w.begin) % segs_.size() <= 2 * kWindow;
    }
    void consider(const Point& p, std::size_t s, std::size_t k, std::vector<std::pair<double, std::size_t>>& best) const {
        using Entry = std::pair<double, std::size_t>;
        const double d = seg_dist2(p.data(), at(segs_[s].first), at(segs_[s].second), dim_);
        if (best.size() == k && d >= best.back().first) return;
        best.insert(std::upper_bound(best.begin(), best.end(), Entry(d, s)), {d, s});
        if (best.size() > k) best.pop_back();
    }

    const double* at(std::size_t v) const { return &coords_[dim_ * v]; }
    const double* lo(std::size_t id) const { return &bounds_[2 * dim_ * id]; }
    const double* hi(std::size_t id) const { return &bounds_[2 * dim_ * id + dim_]; }

    std::size_t build(std::size_t begin, std::size_t end) {
        const std::size_t id = nodes_.size();
        nodes_.push_back({begin, end, 0, 0});
        bounds_.resize(2 * dim_ * (id + 1));
        double* l = &bounds_[2 * dim_ * id];
        double* h = l + dim_;
        std::fill(l, l + dim_, std::numeric_limits<double>::infinity());
        std::fill(h, h + dim_, -std::numeric_limits<double>::infinity());
        for (std::size_t s = begin; s < end; ++s)
            for (std::size_t v : {segs_[s].first, segs_[s].second})
                for (std::size_t i = 0; i < dim_; ++i) {
                    l[i] = std::min(l[i], at(v)[i]);
                    h[i] = std::max(h[i], at(v)[i]);
                }
        if (end - begin > kLeaf) {
            const std::size_t mid = begin + (end - begin) / 2;
            const std::size_t left = build(begin, mid);
            const std::size_t right = build(mid, end);
            nodes_[id].left = left;
            nodes_[id].right = right;
        }
        return id;
    }

    double box_dist2(std::size_t id, const Point& p) const {
        const double* l = lo(id);
        const double* h = hi(id);
        double s = 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            const double d = l[i] > p[i] ? l[i] - p[i] : (p[i] > h[i] ? p[i] - h[i] : 0.0);
            s += d * d;
        }
        return s;
    }

    // Depth-first, nearer child first; cheap once `best` already holds a tight bound.
    void descend(std::size_t id, const Point& p, std::size_t k, std::vector<std::pair<double, std::size_t>>& best,
                 const Window& w) const {
        const Node& n = nodes_[id];
        if (n.left == 0) {
            for (std::size_t s = n.begin; s < n.end; ++s)
                if (!in_window(w, s)) consider(p, s, k, best);
            return;
        }
        double dl = box_dist2(n.left, p), dr = box_dist2(n.right, p);
        std::size_t first = n.left, second = n.right;
        if (dr < dl) {
            std::swap(first, second);
            std::swap(dl, dr);
        }
        if (best.size() < k || dl < best.back().first) descend(first, p, k, best, w);
        if (best.size() < k || dr < best.back().first) descend(second, p, k, best, w);
    }

    // Best-first traversal ordered by box distance.
    void search(std::size_t root, const Point& p, std::size_t k, std::vector<std::pair<double, std::size_t>>& best,
                const Window& w) const {
        using Entry = std::pair<double, std::size_t>;
        auto& open = heap_;
        open.clear();
        open.emplace_back(box_dist2(root, p), root);
        while (!open.empty()) {
            std::pop_heap(open.begin(), open.end(), std::greater<Entry>());
            auto [bd, id] = open.back();
            open.pop_back();
            if (best.size() == k && bd >= best.back().first) break;
            const Node& n = nodes_[id];
            if (n.left == 0) {
                for (std::size_t s = n.begin; s < n.end; ++s)
                    if (!in_window(w, s)) consider(p, s, k, best);
                continue;
            }
            for (std::size_t c : {n.left, n.right}) {
                const double d = box_dist2(c, p);
                if (best.size() == k && d >= best.back().first) continue;
                open.emplace_back(d, c);
                std::push_heap(open.begin(), open.end(), std::greater<Entry>());
            }
        }
    }

    mutable std::vector<std::pair<double, std::size_t>> heap_;
    std::vector<double> coords_;
    std::vector<std::pair<std::size_t, std::size_t>> segs_;
    std::vector<Node> nodes_;
    std::vector<double> bounds_;
    std::size_t dim_ = 0;
};

inline std::vector<std::pair<std::size_t, std::size_t>> polyline_segments(const SampleCloud& c) {
    std::vector<std::pair<std::size_t, std::size_t>> segs;
    const std::size_t n = c.points.size();
    std::size_t b = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (b < c.breaks.size() && c.breaks[b] < i) ++b;
        if (b < c.breaks.size() && c.breaks[b] == i) continue;
        segs.emplace_back(i - 1, i);
    }
    if (c.closed && n > 2) segs.emplace_back(n - 1, 0);
    if (segs.empty()) segs.emplace_back(0, 0);
    return segs;
}

inline double one_sided(const SampleCloud& a, const SegmentIndex& index) {
    double worst = 0;
    std::optional<std::size_t> hint;
    for (const auto& p : a.points) {
        const auto nn = index.nearest(p, 1, hint);
        worst = std::max(worst, nn.front().first);
        hint = nn.front().second;
    }
    return worst;
}

}  // namespace detail

/// Symmetric Hausdorff distance between two finite point sets.
inline double hausdorff(const SampleCloud& a, const SampleCloud& b) {
    if (a.points.empty() || b.points.empty()) throw InvalidInput("hausdorff of an empty cloud");
    if (a.dim() != b.dim()) throw InvalidInput("hausdorff of clouds with different dimensions");
    auto as_points = [](const SampleCloud& c) {
        std::vector<std::pair<std::size_t, std::size_t>> segs;
        for (std::size_t i = 0; i < c.points.size(); ++i) segs.emplace_back(i, i);
        return segs;
    };
    detail::SegmentIndex ia(a.points, as_points(a));
    detail::SegmentIndex ib(b.points, as_points(b));
    return std::max(detail::one_sided(a, ib), detail::one_sided(b, ia));
}

namespace detail {

/// Distance from p to the curve near the sampled segment (i, j); `sag` estimates
/// how far the curve strays from that chord.
inline double refine_to_curve(const Point& p, const Curve& curve, const SampleCloud& cloud, std::size_t i,
                              std::size_t j, double sag, double accept) {
    const double si = cloud.params[i];
    double sj = cloud.params[j];
    if (j < i) sj += curve.hi - curve.lo;  // closing segment
    const double chord = seg_dist(p, cloud.points[i], cloud.points[j]);
    if (chord + sag <= accept) return chord + sag;
    const double h = sj - si;
    double lo = si - h, hi = sj + h;
    if (!curve.closed) {
        lo = std::max(lo, curve.lo);
        hi = std::min(hi, curve.hi);
    }
    auto g = [&](double s) {
        Point q = curve.f(s);
        return q.empty() ? std::numeric_limits<double>::infinity() : dist(p, q);
    };
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double gc = g(c), gd = g(d);
    double best = std::min({g(lo), g(hi), gc, gd, dist(p, cloud.points[i]), dist(p, cloud.points[j])});
    for (int it = 0; it < 200 && b - a > 1e-16 * (1 + std::abs(a)); ++it) {
        if (gc < gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + phi * (b - a);
            gd = g(d);
        }
        best = std::min({best, gc, gd});
        if (best <= accept) break;
    }
    return best;
}

// Twice the second difference at each sample, a generous bound on the chord sagitta
// of its adjacent segments for uniformly spaced smooth samples.
inline std::vector<double> sagitta_bounds(const SampleCloud& c) {
    const std::size_t n = c.points.size();
    std::vector<double> out(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        if (!c.closed && (i == 0 || i + 1 == n)) continue;
        const Point& a = c.points[(i + n - 1) % n];
        const Point& b = c.points[i];
        const Point& d = c.points[(i + 1) % n];
        double s = 0;
        for (std::size_t k = 0; k < b.size(); ++k) s += std::pow(a[k] - 2 * b[k] + d[k], 2);
        out[i] = 2 * std::sqrt(s);
    }
    for (std::size_t b : c.breaks) {
        out[b] = std::numeric_limits<double>::infinity();
        out[b - 1] = std::numeric_limits<double>::infinity();
    }
    return out;
}

inline double one_sided_curve(const SampleCloud& a, const Curve& curve_b, const SampleCloud& b, double accept) {
    SegmentIndex index(b.points, polyline_segments(b));
    const std::vector<double> sag = sagitta_bounds(b);
    double worst = 0;
    std::optional<std::size_t> hint;
    for (const auto& p : a.points) {
        if (hint) {
            // a chord bound near the previous match already certifies this point
            const auto [d, k] = index.window_nearest(p, *hint);
            const auto& [i, j] = index.segment(k);
            const double bound = i == j ? d : d + std::max(sag[i], sag[j]);
            if (bound <= accept) {
                worst = std::max(worst, bound);
                hint = k;
                continue;
            }
        }
        double best = std::numeric_limits<double>::infinity();
        const auto nn = index.nearest(p, 2, hint);
        hint = nn.front().second;
        for (const auto& [d, k] : nn) {
            if (d >= best || best <= accept) break;
            const auto& [i, j] = index.segment(k);
            best = std::min(best, i == j ? d : refine_to_curve(p, curve_b, b, i, j, std::max(sag[i], sag[j]), accept));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace detail

/// Symmetric distance between two parametric curves: each of n samples of one
/// curve is measured against the other curve itself (polyline search, then
/// golden-section refinement of the parameter). Refinement is skipped where the
/// chord estimate is already below `accept`.
inline double hausdorff_curves(const Curve& a, const Curve& b, std::size_t n, double accept = 0) {
    SampleCloud sa = sample(a, n);
    SampleCloud sb = sample(b, n);
    if (sa.dim() != sb.dim()) throw InvalidInput("curves have different target dimensions");
    return std::max(detail::one_sided_curve(sa, b, sb, accept), detail::one_sided_curve(sb, a, sa, accept));
}

/// Largest |F(1, x)| over the cloud.
inline double max_implicit_residual(const MPoly& f, const SampleCloud& c) {
    std::vector<detail::DoubleTerm> terms;
    for (const auto& [e, v] : f.terms()) terms.push_back({to_double(v), e});
    double worst = 0;
    for (const auto& p : c.points) {
        std::vector<double> x{1.0};
        x.insert(x.end(), p.begin(), p.end());
        worst = std::max(worst, std::abs(detail::eval_terms(terms, x)));
    }
    return worst;
}

struct BoundednessProbe {
    bool escaped = false;
    double max_norm = 0;
};

/// Numeric boundedness test of the real trace: grid of n angles, then
/// golden-section descent of |P0| / |(P1..Pm)| around each grid minimum.
inline BoundednessProbe probe_boundedness(const ProjParam& p, std::size_t n = 10000, double threshold = 1e6) {
    auto c = detail::form_coeffs(p);
    auto ratio = [&](double s) {
        const double t0 = std::cos(s / 2), t1 = std::sin(s / 2);
        double num = 0;
        for (std::size_t i = 1; i < c.size(); ++i) num += std::pow(detail::horner(c[i], t0, t1), 2);
        num = std::sqrt(num);
        const double den = std::abs(detail::horner(c[0], t0, t1));
        return num > 0 ? den / num : std::numeric_limits<double>::infinity();
    };
    const double pi = std::numbers::pi;
    std::vector<double> s(n), r(n);
    for (std::size_t j = 0; j < n; ++j) {
        s[j] = -pi + 2 * pi * static_cast<double>(j + 1) / static_cast<double>(n);
        r[j] = ratio(s[j]);
    }
    double min_ratio = std::numeric_limits<double>::infinity();
    const double phi = (std::sqrt(5.0) - 1) / 2;
    for (std::size_t j = 0; j < n; ++j) {
        min_ratio = std::min(min_ratio, r[j]);
        const double prev = r[(j + n - 1) % n], next = r[(j + 1) % n];
        if (r[j] > prev || r[j] > next) continue;
        const double h = 2 * pi / static_cast<double>(n);
        double a = s[j] - h, b = s[j] + h;
        double cc = b - phi * (b - a), d = a + phi * (b - a);
        double fc = ratio(cc), fd = ratio(d);
        for (int it = 0; it < 200 && b - a > 1e-17; ++it) {
            if (fc < fd) {
                b = d; d = cc; fd = fc; cc = b - phi * (b - a); fc = ratio(cc);
            } else {
                a = cc; cc = d; fc = fd; d = a + phi * (b - a); fd = ratio(d);
            }
            min_ratio = std::min({min_ratio, fc, fd});
        }
    }
    BoundednessProbe out;
    out.max_norm = min_ratio > 0 ? 1 / min_ratio : std::numeric_limits<double>::infinity();
    out.escaped = out.max_norm > threshold;
    return out;
}

/// Winding number of a nonvanishing map S^1 -> C, s -> f(s), s in [0, 2pi).
/// The sample count starts at n and doubles until every argument step is below pi/4.
inline int winding_number(const std::function<std::complex<double>(double)>& f, std::size_t n = 64) {
    const double pi = std::numbers::pi;
    for (n = std::max<std::size_t>(n, 8); n <= (std::size_t{1} << 24); n *= 2) {
        double total = 0, worst = 0;
        std::complex<double> prev = f(0.0);
        if (std::abs(prev) < 1e-8) throw Inconclusive("map vanishes (|value| < 1e-8) on the circle");
        for (std::size_t j = 1; j <= n; ++j) {
            std::complex<double> cur = f(2 * pi * static_cast<double>(j) / static_cast<double>(n));
            if (std::abs(cur) < 1e-8) throw Inconclusive("map vanishes (|value| < 1e-8) on the circle");
            const double step = std::arg(cur / prev);
            worst = std::max(worst, std::abs(step));
            total += step;
            prev = cur;
        }
        if (worst < pi / 4) return static_cast<int>(std::lround(total / (2 * pi)));
    }
    throw Inconclusive("argument steps stay above pi/4 at 2^24 samples");
}

inline int winding_number(const LaurentPoly& l, std::size_t n = 64) {
    return winding_number([&l](double s) { return l(std::polar(1.0, s)); }, n);
}

inline int winding_number(const RealPolyMap& g, std::size_t n = 64) {
    if (g.source != Source::CIRCLE || g.m() != 2) throw InvalidInput("winding number needs a circle map into R^2");
    Curve c = curve_of(g);
    return winding_number(
        [&c](double s) {
            Point p = c.f(s);
            return std::complex<double>(p[0], p[1]);
        },
        n);
}

/// Circle map w^2/|w|^2 for w = lambda1 * z^k1, the lift of a degree-k1 self-map of RP^1.
inline LaurentPoly rp1_lift_construction(int k1, const Gauss& lambda1) {
    if (is_zero(lambda1)) throw InvalidInput("lambda1 must be nonzero");
    const Gauss unit = lambda1 * lambda1 / Gauss(lambda1.norm());
    return LaurentPoly::monomial(unit, 2 * k1);
}

/// Degree of the RP^1 self-map whose squared circle lift is l.
inline int rp1_degree_from_lift(const LaurentPoly& l, std::size_t n = 64) {
    const int w = winding_number(l, n);
    if (w % 2 != 0) throw InvalidInput("odd winding number: not the lift of an RP^1 self-map");
    return w / 2;
}

enum class PlotFormat { SVG, CSV };

inline void write_csv(std::ostream& os, const std::vector<SampleCloud>& clouds) {
    if (clouds.empty()) throw InvalidInput("no clouds to plot");
    const std::size_t m = clouds.front().dim();
    for (std::size_t i = 1; i <= m; ++i) os << "x" << i << ",";
    os << "param\n";
    os << std::setprecision(17);
    for (const auto& c : clouds) {
        if (c.dim() != m) throw InvalidInput("clouds have different dimensions");
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            for (double v : c.points[k]) os << v << ",";
            os << c.params[k] << "\n";
        }
    }
}

inline void write_svg(std::ostream& os, const std::vector<SampleCloud>& clouds) {
    if (clouds.empty()) throw InvalidInput("no clouds to plot");
    double minx = std::numeric_limits<double>::infinity(), miny = minx, maxx = -minx, maxy = -minx;
    for (const auto& c : clouds) {
        if (c.dim() != 2) throw InvalidInput("SVG output needs points in R^2");
        for (const auto& p : c.points) {
            minx = std::min(minx, p[0]);
            maxx = std::max(maxx, p[0]);
            miny = std::min(miny, p[1]);
            maxy = std::max(maxy, p[1]);
        }
    }
    double w = maxx - minx, h = maxy - miny;
    double pad = 0.05 * std::max(w, h);
    if (!(pad > 0)) pad = 1;
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    os << std::setprecision(9);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\""
       << minx - pad << " " << -maxy - pad << " " << w + 2 * pad << " " << h + 2 * pad << "\">\n";
    const double stroke = (std::max(w, h) + 2 * pad) / 400;
    for (std::size_t k = 0; k < clouds.size(); ++k) {
        const auto& c = clouds[k];
        std::vector<std::size_t> cuts = c.breaks;
        cuts.push_back(c.points.size());
        std::size_t start = 0;
        for (std::size_t cut : cuts) {
            os << "  <polyline fill=\"none\" stroke=\"" << colors[k % 4] << "\" stroke-width=\"" << stroke
               << "\" points=\"";
            for (std::size_t i = start; i < cut; ++i) os << c.points[i][0] << "," << -c.points[i][1] << " ";
            if (c.closed && c.breaks.empty() && cut > 0) os << c.points[0][0] << "," << -c.points[0][1];
            os << "\"/>\n";
            start = cut;
        }
    }
    os << "</svg>\n";
}

inline void emit_plot(const std::vector<SampleCloud>& clouds, const std::string& path, PlotFormat format) {
    std::ostringstream buf;
    if (format == PlotFormat::SVG)
        write_svg(buf, clouds);
    else
        write_csv(buf, clouds);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    out << buf.str();
    if (!out) throw InvalidInput("write to '" + path + "' failed");
}

}  // namespace rcurve
