#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace rcurve;

namespace {

MPoly xs(const std::string& text) { return parse_poly(text, {"x0", "x1", "x2"}); }

bool equal_up_to_sign(const MPoly& a, const MPoly& b) { return a == b || a == -b; }

Rat vanish_at(const MPoly& F, const ProjParam& p, const Rat& t) {
    std::vector<Rat> at;
    for (const auto& c : p.components()) at.push_back(c.eval<Rat>(Rat(1), t));
    return F.substitute<Rat>(at);
}

}  // namespace

TEST(Properness, Examples) {
    auto c = properness_check(rcurve::test::circle());
    EXPECT_EQ(c.generic_fiber_degree, 1);
    EXPECT_TRUE(c.node_pairs.empty());

    auto d = properness_check(rcurve::test::fixture("improper"));
    EXPECT_EQ(d.generic_fiber_degree, 2);

    auto g = properness_check(rcurve::test::gerono());
    EXPECT_EQ(g.generic_fiber_degree, 1);
    bool origin_pair = false;
    for (const auto& [s, t] : g.node_pairs) {
        if (s.is_rational() && t.is_rational() && !s.at_infinity && !t.at_infinity) {
            Rat a = s.rational_value(), b = t.rational_value();
            origin_pair = origin_pair || ((a == 1 && b == -1) || (a == -1 && b == 1));
        }
    }
    EXPECT_TRUE(origin_pair);
}

TEST(Properness, CompositionWithDegreeTwoMap) {
    // circle composed with [t0^2 - t1^2 : 2 t0 t1]
    ProjParam p = parse_param({"(t0^2 - t1^2)^2 + (2*t0*t1)^2", "2*(t0^2 - t1^2)*(2*t0*t1)",
                               "(2*t0*t1)^2 - (t0^2 - t1^2)^2"});
    EXPECT_EQ(properness_check(p).generic_fiber_degree, 2);
    try {
        infinity_fibers(p);
        FAIL() << "expected MathRejection";
    } catch (const MathRejection& e) {
        EXPECT_EQ(e.reason(), "improper");
        EXPECT_EQ(e.evidence().at("generic_fiber_degree"), "2");
    }
}

TEST(InfinityFibers, Line) {
    InfinityReport r = infinity_fibers(rcurve::test::line());
    ASSERT_EQ(r.fibers.size(), 1u);
    EXPECT_EQ(r.fibers[0].point.coords, (std::vector<QuadExt>{0, 1, 0}));
    EXPECT_EQ(r.fibers[0].fiber.size(), 1u);
    EXPECT_TRUE(r.fibers[0].is_real_point);
    EXPECT_FALSE(r.real_trace_bounded);
}

TEST(InfinityFibers, Gerono) {
    InfinityReport r = infinity_fibers(rcurve::test::gerono());
    ASSERT_EQ(r.fibers.size(), 1u);
    const auto& f = r.fibers[0];
    EXPECT_EQ(f.point.coords, (std::vector<QuadExt>{0, 0, 1}));
    EXPECT_TRUE(f.is_real_point);
    EXPECT_EQ(f.fiber.size(), 2u);
    EXPECT_TRUE(f.fiber_is_conjugate_pair);
    EXPECT_EQ(f.multiplicities, (std::vector<unsigned>{2, 2}));
    EXPECT_TRUE(same_point(f.fiber[0].conj(), f.fiber[1]));
    EXPECT_TRUE(r.real_trace_bounded);
}

TEST(InfinityFibers, Circle) {
    InfinityReport r = infinity_fibers(rcurve::test::circle());
    ASSERT_EQ(r.fibers.size(), 2u);
    const std::vector<QuadExt> q{0, 1, QuadExt::i()}, qbar{0, 1, QuadExt(0) - QuadExt::i()};
    std::vector<std::vector<QuadExt>> points{r.fibers[0].point.coords, r.fibers[1].point.coords};
    EXPECT_TRUE((points[0] == q && points[1] == qbar) || (points[0] == qbar && points[1] == q));
    for (const auto& f : r.fibers) {
        EXPECT_EQ(f.fiber.size(), 1u);
        EXPECT_FALSE(f.is_real_point);
    }
    EXPECT_TRUE(r.real_trace_bounded);
}

TEST(InfinityFibers, ConstantRejected) {
    try {
        infinity_fibers(parse_param({"t0", "2*t0", "3*t0"}));
        FAIL() << "expected MathRejection";
    } catch (const MathRejection& e) {
        EXPECT_EQ(e.reason(), "constant");
    }
}

TEST(RealTraceBounded, Examples) {
    EXPECT_TRUE(is_real_trace_bounded(rcurve::test::circle()));
    EXPECT_TRUE(is_real_trace_bounded(rcurve::test::gerono()));
    EXPECT_FALSE(is_real_trace_bounded(rcurve::test::parabola()));
    ProjParam p = parse_param({"t0^2 - 2*t1^2", "t0*t1", "t1^2"});
    EXPECT_FALSE(is_real_trace_bounded(p));
    EXPECT_EQ(real_root_count_of_p0(p), 2);
}

TEST(Implicitize, Examples) {
    EXPECT_TRUE(equal_up_to_sign(implicitize_plane(rcurve::test::circle()), xs("x1^2 + x2^2 - x0^2")));
    EXPECT_EQ(implicitize_plane(rcurve::test::gerono()), xs("x0^2*(x2^2 - x1^2) + x1^4"));
    EXPECT_TRUE(equal_up_to_sign(implicitize_plane(rcurve::test::line()), xs("x2")));
}

TEST(Implicitize, Errors) {
    EXPECT_THROW(implicitize_plane(parse_param({"t0^2", "t0*t1", "t1^2", "t0^2 + t1^2"})), InvalidInput);
    EXPECT_THROW(implicitize_plane(rcurve::test::fixture("improper")), MathRejection);
}

TEST(Implicitize, VanishesOnTheParameterization) {
    for (const char* name : {"circle", "gerono", "ellipse", "bicircular", "parabola", "line"}) {
        ProjParam p = rcurve::test::fixture(name);
        MPoly F = implicitize_plane(p);
        EXPECT_TRUE(F.is_homogeneous()) << name;
        for (long k = -5; k <= 5; ++k) EXPECT_EQ(vanish_at(F, p, make_rat(k, 3)), 0) << name << " t=" << k << "/3";
    }
}

TEST(Implicitize, DegreeEqualsParameterDegreeWhenProper) {
    for (const char* name : {"circle", "gerono", "ellipse", "bicircular"}) {
        ProjParam p = rcurve::test::fixture(name);
        EXPECT_EQ(implicitize_plane(p).total_degree(), p.degree()) << name;
    }
}
