#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace rcurve;

namespace {

QMPoly q(const std::string& text, const std::vector<std::string>& vars) { return to_quad(parse_poly(text, vars)); }

std::vector<QMPoly> qs(std::initializer_list<const char*> texts, const std::vector<std::string>& vars) {
    std::vector<QMPoly> out;
    for (const char* t : texts) out.push_back(q(t, vars));
    return out;
}

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

RealPolyMap circle_map(std::initializer_list<const char*> comps) {
    RealPolyMap g;
    g.source = Source::CIRCLE;
    g.vars = kXY;
    g.components = qs(comps, kXY);
    return g;
}

Gauss G(long re_v, long im_v) { return gauss(make_rat(re_v), make_rat(im_v)); }

LaurentPoly random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(-4, 4), count(1, 6);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    std::map<int, Gauss> c;
    for (int k = count(rng); k > 0; --k) c[exp(rng)] = gauss(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
    return LaurentPoly(c);
}

}  // namespace

TEST(WitnessInterval, Examples) {
    RealPolyMap a = witness_interval(SemialgInput::arc(rcurve::test::line(), Rat(-1), Rat(1)));
    EXPECT_EQ(a.source, Source::INTERVAL);
    EXPECT_EQ(a.components, qs({"t", "0"}, kT));

    RealPolyMap b = witness_interval(SemialgInput::arc(rcurve::test::line(), Rat(0), Rat(1)));
    EXPECT_EQ(b.components, qs({"1/2*t + 1/2", "0"}, kT));

    RealPolyMap c = witness_interval(SemialgInput::arc(rcurve::test::parabola(), Rat(0), Rat(2)));
    EXPECT_EQ(c.components, qs({"t + 1", "(t + 1)^2"}, kT));
}

TEST(WitnessInterval, EndpointsExact) {
    struct Case {
        ProjParam p;
        Rat a, b;
    };
    std::vector<Case> cases{{rcurve::test::line(), -1, 1},
                            {rcurve::test::parabola(), make_rat(-1, 3), Rat(5)},
                            {rcurve::test::fixture("cubic_arc"), -2, make_rat(3, 2)}};
    for (const auto& [p, a, b] : cases) {
        SemialgInput in = SemialgInput::arc(p, a, b);
        RealPolyMap w = witness_interval(in);
        for (auto [u, t] : {std::pair<long, Rat>{-1, a}, std::pair<long, Rat>{1, b}}) {
            auto v = eval_exact(w, {make_rat(u)});
            ProjPoint pt = evaluate(p, Rat(1), t);
            for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], pt.coords[i + 1]);
        }
        VerifyReport r = verify_witness(w, in, 1e-9, 2000);
        EXPECT_TRUE(r.pass()) << r.detail;
    }
}

TEST(WitnessInterval, RationalRootNotAtInfinity) {
    // P0 = (t1 - t0)^2: the only denominator root is t = 1
    ProjParam p = parse_param({"(t1 - t0)^2", "t0*t1", "t1^2"});
    for (auto [a, b] : {std::pair<Rat, Rat>{2, 5}, std::pair<Rat, Rat>{-3, make_rat(1, 2)}}) {
        SemialgInput in = SemialgInput::arc(p, a, b);
        ASSERT_EQ(classify(in).case_label, CaseLabel::CASE1);
        RealPolyMap w = witness_interval(in);
        VerifyReport r = verify_witness(w, in, 1e-9, 2000);
        EXPECT_TRUE(r.pass()) << r.detail;
        EXPECT_TRUE(r.endpoints_ok);
    }
}

TEST(WitnessInterval, WrongCaseRejected) {
    try {
        witness_interval(SemialgInput::arc(rcurve::test::circle(), Rat(0), Rat(1)));
        FAIL() << "expected MathRejection";
    } catch (const MathRejection& e) {
        EXPECT_EQ(e.reason(), "wrong_case");
    }
    EXPECT_THROW(witness_interval(SemialgInput::full(rcurve::test::circle())), MathRejection);
}

TEST(WitnessCircle, Examples) {
    RealPolyMap g = witness_circle(SemialgInput::full(rcurve::test::gerono()));
    EXPECT_EQ(g.components, qs({"1 - 2*x^2", "2*x*y - 4*x^3*y"}, kXY));
    EXPECT_EQ(g.surd, 0);

    RealPolyMap c = witness_circle(SemialgInput::full(rcurve::test::circle()));
    EXPECT_EQ(c.components, qs({"2*x*y", "1 - 2*x^2"}, kXY));

    RealPolyMap l = witness_circle(SemialgInput::arc(rcurve::test::line(), Rat(-1), Rat(1)));
    EXPECT_EQ(l.components, qs({"x", "0"}, kXY));
}

TEST(WitnessCircle, QuadraticSurd) {
    SemialgInput in = SemialgInput::full(rcurve::test::fixture("ellipse"));
    RealPolyMap g = witness_circle(in);
    EXPECT_EQ(g.surd, 2);
    EXPECT_TRUE(verify_witness(g, in, 1e-9, 4000).pass());
    EXPECT_THROW(laurent_from_real(g), MathRejection);
}

TEST(WitnessCircle, ClassifierNo) {
    for (const char* name : {"parabola", "bicircular", "line"}) {
        try {
            witness_circle(SemialgInput::full(rcurve::test::fixture(name)));
            FAIL() << name;
        } catch (const MathRejection& e) {
            EXPECT_EQ(e.reason(), "classifier_no") << name;
        }
    }
}

TEST(WitnessCircle, ComponentsAreReduced) {
    for (const char* name : {"circle", "gerono", "ellipse"}) {
        RealPolyMap g = witness_circle(SemialgInput::full(rcurve::test::fixture(name)));
        for (const auto& c : g.components) {
            EXPECT_LE(c.degree_in(1), 1) << name;
            EXPECT_EQ(circle_reduce(c), c) << name;
        }
    }
}

TEST(CircleReduce, Idempotent) {
    QMPoly p = q("x^3*y^5 - 2*y^4 + x*y^2 + 7", kXY);
    QMPoly r = circle_reduce(p);
    EXPECT_EQ(circle_reduce(r), r);
    EXPECT_LE(r.degree_in(1), 1);
    // agrees on a rational point of the circle: (3/5, 4/5)
    std::vector<Rat> at{make_rat(3, 5), make_rat(4, 5)};
    auto conv = [](const QuadExt& v) { return v; };
    std::vector<QuadExt> atq{QuadExt(at[0]), QuadExt(at[1])};
    EXPECT_EQ(p.eval(atq, conv), r.eval(atq, conv));
}

TEST(WitnessSphere, Examples) {
    RealPolyMap a = witness_sphere_k(SemialgInput::arc(rcurve::test::line(), Rat(-1), Rat(1)), 2);
    EXPECT_EQ(a.source, Source::SPHERE);
    EXPECT_EQ(a.vars, kXYZ);
    EXPECT_EQ(a.components, qs({"x", "0"}, kXYZ));

    RealPolyMap b = witness_sphere_k(SemialgInput::arc(rcurve::test::parabola(), Rat(0), Rat(2)), 2);
    EXPECT_EQ(b.components, qs({"x + 1", "(x + 1)^2"}, kXYZ));

    RealPolyMap c = witness_sphere_k(SemialgInput::arc(rcurve::test::parabola(), Rat(0), Rat(2)), 4);
    EXPECT_EQ(c.vars.size(), 5u);

    try {
        witness_sphere_k(SemialgInput::full(rcurve::test::gerono()), 2);
        FAIL() << "expected MathRejection";
    } catch (const MathRejection& e) {
        EXPECT_EQ(e.reason(), "classifier_no");
        EXPECT_NE(std::string(e.what()).find("classifier NO"), std::string::npos);
    }
    EXPECT_THROW(witness_sphere_k(SemialgInput::arc(rcurve::test::line(), Rat(-1), Rat(1)), 1), InvalidInput);
}

TEST(Laurent, FromRealExamples) {
    EXPECT_EQ(laurent_from_real(circle_map({"x^2 - y^2", "2*x*y"})), LaurentPoly::monomial(G(1, 0), 2));
    EXPECT_EQ(laurent_from_real(circle_map({"2*x", "0"})), LaurentPoly({{1, G(1, 0)}, {-1, G(1, 0)}}));
    const Rat h(1, 2), f(1, 4);
    LaurentPoly expected({{1, Gauss(h)}, {-1, Gauss(h)}, {2, Gauss(f)}, {-2, Gauss(Rat(-f))}});
    LaurentPoly got = laurent_from_real(circle_map({"x", "x*y"}));
    EXPECT_EQ(got, expected);
    for (int j = 0; j < 64; ++j) {
        const double s = 2 * std::numbers::pi * j / 64;
        std::complex<double> v = got(std::polar(1.0, s));
        EXPECT_NEAR(v.real(), std::cos(s), 1e-12);
        EXPECT_NEAR(v.imag(), std::cos(s) * std::sin(s), 1e-12);
    }
}

TEST(Laurent, ToRealExamples) {
    EXPECT_EQ(real_from_laurent(LaurentPoly::monomial(G(1, 0), 2)).components, qs({"2*x^2 - 1", "2*x*y"}, kXY));
    EXPECT_EQ(real_from_laurent(LaurentPoly::monomial(G(3, -2), 0)).components, qs({"3", "-2"}, kXY));
    EXPECT_EQ(real_from_laurent(LaurentPoly::monomial(G(1, 0), -1)).components, qs({"x", "-y"}, kXY));
}

TEST(Laurent, RoundTripIsIdentity) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 100; ++k) {
        LaurentPoly l = random_laurent(rng);
        EXPECT_EQ(laurent_from_real(real_from_laurent(l)), l) << to_string(l);
    }
}

TEST(Laurent, CircleWitnessOfCircle) {
    LaurentPoly l = laurent_from_real(witness_circle(SemialgInput::full(rcurve::test::circle())));
    EXPECT_EQ(l, LaurentPoly::monomial(G(0, -1), 2));
}

TEST(Laurent, Arithmetic) {
    LaurentPoly z = LaurentPoly::monomial(G(1, 0), 1), zi = LaurentPoly::monomial(G(1, 0), -1);
    EXPECT_EQ(z * zi, LaurentPoly::monomial(G(1, 0), 0));
    EXPECT_TRUE((z + G(-1, 0) * z).is_zero_poly());
    EXPECT_EQ(to_string(LaurentPoly()), "0");
}

TEST(VerifyWitness, Examples) {
    SemialgInput g = SemialgInput::full(rcurve::test::gerono());
    VerifyReport a = verify_witness(witness_circle(g), g, 1e-9, 10000);
    EXPECT_TRUE(a.pass()) << a.detail;
    EXPECT_TRUE(a.exact_checked);

    SemialgInput c = SemialgInput::full(rcurve::test::circle());
    EXPECT_TRUE(verify_witness(witness_circle(c), c, 1e-9, 10000).pass());
}

TEST(VerifyWitness, PerturbedCoefficientIsExactFailure) {
    SemialgInput g = SemialgInput::full(rcurve::test::gerono());
    RealPolyMap w = witness_circle(g);
    w.components[0] += QMPoly(2, QuadExt(1));
    VerifyReport r = verify_witness(w, g, 1e-9, 2000);
    EXPECT_FALSE(r.pass());
    EXPECT_FALSE(r.exact_ok);
    EXPECT_EQ(r.failure_kind(), "exact_identity");
}

TEST(VerifyWitness, ResolutionFailureIsNotExactFailure) {
    SemialgInput g = SemialgInput::full(rcurve::test::gerono());
    VerifyReport r = verify_witness(circle_map({"x", "x*y"}), g, 1e-30, 200);
    EXPECT_TRUE(r.exact_ok);
    EXPECT_EQ(r.failure_kind(), r.pass() ? "" : "hausdorff");
}

TEST(VerifyWitness, WrongEndpointsDetected) {
    SemialgInput in = SemialgInput::arc(rcurve::test::line(), Rat(-1), Rat(1));
    RealPolyMap w = witness_interval(in);
    w.components[0] = q("1/2*t", kT);
    VerifyReport r = verify_witness(w, in, 1e-6, 1000);
    EXPECT_FALSE(r.endpoints_ok);
    EXPECT_FALSE(r.pass());
}

TEST(VerifyWitness, DimensionMismatch) {
    SemialgInput in = SemialgInput::full(rcurve::test::circle());
    EXPECT_THROW(verify_witness(circle_map({"x"}), in), InvalidInput);
}
