#include <gtest/gtest.h>

#include "exact_core_cases.hpp"
#include "test_util.hpp"

using namespace rcurve;
using rcurve::test::P;

TEST(Rat, NormalizedRepresentation) {
    Rat r = make_rat(Integer(6), Integer(-4));
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(parse_rat("-10/4"), make_rat(-5, 2));
    EXPECT_THROW(make_rat(Integer(1), Integer(0)), InvalidInput);
    EXPECT_THROW(parse_rat("1/0"), InvalidInput);
}

TEST(PolyGcd, Examples) {
    EXPECT_EQ(monic(gcd(P({-1, 0, 1}), P({-1, 1}))), P({-1, 1}));
    EXPECT_EQ(monic(gcd(P({1, 0, 1}), P({-1, 0, 1}))), P({1}));
    EXPECT_EQ(monic(gcd(P({-1, 0, 0, 0, 1}), P({0, -1, 0, 1}))), P({-1, 0, 1}));
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(P({-1, 1}), P({-1, 1})), 0);
    EXPECT_EQ(abs(resultant(P({-2, 1}), P({-3, 1}))), 1);
    EXPECT_EQ(resultant(P({1, 0, 1}), P({-1, 0, 1})), 4);
    EXPECT_THROW(resultant(UPoly(), P({1, 1})), InvalidInput);
}

TEST(Resultant, SylvesterSignConvention) {
    // det [[1, -2], [1, -3]] = -1
    EXPECT_EQ(resultant(P({-2, 1}), P({-3, 1})), -1);
}

TEST(SquarefreePart, Examples) {
    EXPECT_EQ(squarefree_part(pow(P({-1, 1}), 3)), P({-1, 1}));
    EXPECT_EQ(squarefree_part(pow(P({1, 0, 1}), 2)), P({1, 0, 1}));
    EXPECT_EQ(squarefree_part(P({0, 0, -1, 1})), P({0, -1, 1}));
    EXPECT_THROW(squarefree_part(UPoly()), InvalidInput);
}

TEST(FactorRational, Examples) {
    auto f = factor_rational(P({-1, 0, 0, 0, 1}));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].poly, P({-1, 1}));
    EXPECT_EQ(f[1].poly, P({1, 1}));
    EXPECT_EQ(f[2].poly, P({1, 0, 1}));
    for (const auto& x : f) EXPECT_EQ(x.multiplicity, 1u);

    auto g = factor_rational(pow(P({1, 0, 1}), 2));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].poly, P({1, 0, 1}));
    EXPECT_EQ(g[0].multiplicity, 2u);

    auto h = factor_rational(P({-2, 0, 1}));
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].poly, P({-2, 0, 1}));

    EXPECT_THROW(factor_rational(P({5})), InvalidInput);
}

TEST(FactorRational, SwinnertonDyerDegreeEight) {
    // minimal polynomial of sqrt2 + sqrt3 + sqrt5: irreducible, splits mod every prime
    UPoly sd = P({576, 0, -960, 0, 352, 0, -40, 0, 1});
    auto f = factor_rational(sd);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].poly, sd);
    auto g = factor_rational(sd * P({-3, 0, 1}));
    EXPECT_EQ(g.size(), 2u);
}

TEST(FactorRational, HighDegreeProduct) {
    // (t^12 - 1)(t^12 + 2) has degree 24
    UPoly f = (pow(UPoly::x(), 12) - P({1})) * (pow(UPoly::x(), 12) + P({2}));
    auto fac = factor_rational(f);
    UPoly prod(Rat(1));
    for (const auto& x : fac) prod = prod * pow(x.poly, x.multiplicity);
    EXPECT_EQ(prod, monic(f));
    // cyclotomics Phi_1,2,3,4,6,12 plus t^12 + 2 (Eisenstein)
    EXPECT_EQ(fac.size(), 7u);
}

TEST(Sturm, Examples) {
    EXPECT_EQ(sturm_real_root_count(P({1, 0, 1})), 0);
    EXPECT_EQ(sturm_real_root_count(P({-2, 0, 1})), 2);
    EXPECT_EQ(sturm_real_root_count(P({0, -1, 0, 1}), Rat(0), Rat(2)), 1);
    EXPECT_EQ(sturm_real_root_count(P({0, -1, 0, 1}), Rat(-1), Rat(0)), 1);
    EXPECT_THROW(sturm_real_root_count(pow(P({-1, 1}), 2)), InvalidInput);
}

TEST(ComplexRoots, Examples) {
    auto i_roots = isolate_complex_roots(P({1, 0, 1}));
    ASSERT_EQ(i_roots.size(), 2u);
    EXPECT_FALSE(i_roots[0].is_real());
    EXPECT_TRUE(same_point(i_roots[0].conj(), i_roots[1]));
    EXPECT_EQ(i_roots[0].re.lo, i_roots[1].re.lo);
    EXPECT_EQ(i_roots[0].re.hi, i_roots[1].re.hi);
    EXPECT_EQ(i_roots[0].im.lo, -i_roots[1].im.hi);
    EXPECT_EQ(i_roots[0].im.hi, -i_roots[1].im.lo);

    auto r = isolate_complex_roots(P({-3, 2}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].re.contains(make_rat(3, 2)));
    EXPECT_EQ(r[0].im.lo, 0);
    EXPECT_EQ(r[0].im.hi, 0);

    auto four = isolate_complex_roots(P({-1, 0, 0, 0, 1}));
    ASSERT_EQ(four.size(), 4u);
    const std::vector<std::pair<int, int>> expected = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (auto [re_v, im_v] : expected) {
        int hits = 0;
        for (const auto& b : four) hits += (b.re.contains(Rat(re_v)) && b.im.contains(Rat(im_v))) ? 1 : 0;
        EXPECT_EQ(hits, 1) << re_v << "+" << im_v << "i";
    }
    EXPECT_THROW(isolate_complex_roots(pow(P({1, 0, 1}), 2)), InvalidInput);
}

TEST(ComplexRoots, BoxesPairwiseDisjointAndIsolating) {
    UPoly f = P({-1, 0, 0, 0, 1}) * P({2, 0, 1}) * P({-1, 1, 1});
    auto boxes = isolate_complex_roots(f);
    ASSERT_EQ(static_cast<int>(boxes.size()), f.degree());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (!boxes[i].is_real()) {
            auto n = count_roots_in_box(f, boxes[i].box());
            ASSERT_TRUE(n.has_value());
            EXPECT_EQ(*n, 1);
        }
        for (std::size_t j = i + 1; j < boxes.size(); ++j) EXPECT_FALSE(same_point(boxes[i], boxes[j]));
    }
}

TEST(RefineBox, Examples) {
    auto roots = isolate_complex_roots(P({1, 0, 1}));
    AlgPoint1 up = sgn(roots[0].im.lo) > 0 ? roots[0] : roots[1];
    AlgPoint1 r = refine_box(up, make_rat(1, 8));
    EXPECT_LE(r.re.width(), make_rat(1, 8));
    EXPECT_LE(r.im.width(), make_rat(1, 8));
    EXPECT_TRUE(r.re.contains(0));
    EXPECT_TRUE(r.im.contains(1));

    auto sqrt2 = isolate_complex_roots(P({-2, 0, 1}));
    AlgPoint1 pos = sgn(sqrt2[0].re.lo) > 0 ? sqrt2[0] : sqrt2[1];
    AlgPoint1 fine = refine_box(pos, Rat(Integer(1), Integer(1024)));
    EXPECT_LE(fine.re.width(), Rat(Integer(1), Integer(1024)));
    EXPECT_LT(fine.re.lo * fine.re.lo, 2);
    EXPECT_GE(fine.re.hi * fine.re.hi, 2);
    EXPECT_EQ(sturm_real_root_count(P({-2, 0, 1}), fine.re.lo, fine.re.hi), 1);
    AlgPoint1 finer = refine_box(fine, Rat(Integer(1), Integer(1) << 14));
    EXPECT_GE(finer.re.lo, make_rat(14141, 10000));
    EXPECT_LE(finer.re.hi, make_rat(14143, 10000));
}

TEST(RefineBox, WidthShrinksMonotonically) {
    auto roots = isolate_complex_roots(P({-1, 1, 1, 1}));
    for (const auto& start : roots) {
        AlgPoint1 p = start;
        Rat w = std::max(p.re.width(), p.im.width());
        for (int step = 0; step < 6; ++step) {
            p = refine_once(p);
            Rat nw = std::max(p.re.width(), p.im.width());
            if (p.minpoly.degree() > 1) EXPECT_LT(nw, w);
            w = nw;
            EXPECT_TRUE(same_point(p, start));
        }
    }
}

TEST(QuadExt, FieldArithmetic) {
    QuadExt s = QuadExt::sqrt_of(2);
    EXPECT_EQ(s * s, QuadExt(2));
    QuadExt x = QuadExt(Integer(2), make_rat(1, 2), Rat(3));
    EXPECT_EQ(x * (QuadExt(1) / x), QuadExt(1));
    EXPECT_EQ(x.norm(), make_rat(1, 4) - Rat(18));
    EXPECT_THROW(QuadExt(Integer(4), Rat(1), Rat(1)), InvalidInput);
    EXPECT_EQ(QuadExt::i() * QuadExt::i(), QuadExt(-1));
}

TEST(ExactCoreProperties, RandomizedInstances) {
    std::mt19937_64 rng(20261018);
    for (int k = 0; k < 200; ++k) {
        std::string failure = rcurve::test::run_exact_core_instance(rng);
        ASSERT_EQ(failure, "") << "instance " << k;
    }
}

TEST(ExactCoreProperties, GcdIsGreatestAmongRandomDivisors) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        UPoly common = rcurve::test::rand_poly(rng, 1 + k % 3, 5);
        UPoly f = common * rcurve::test::rand_poly(rng, 2, 5);
        UPoly g = common * rcurve::test::rand_poly(rng, 2, 5);
        UPoly h = gcd(f, g);
        EXPECT_TRUE(divides(h, f));
        EXPECT_TRUE(divides(h, g));
        EXPECT_TRUE(divides(common, h));
        EXPECT_EQ(is_zero(resultant(f, g)), h.degree() >= 1);
    }
}
