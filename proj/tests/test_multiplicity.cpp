#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "abel/displacement.hpp"
#include "abel/multiplicity.hpp"
#include "instances.hpp"

using namespace abel;
using instances::kTwoPi;

namespace {

TEST(ClassifyOrigin, NonzeroB) {
    const auto c = classify_origin(AbelEquation(5, TrigPoly(1.0), TrigPoly(-1.0), kTwoPi));
    EXPECT_NEAR(c.A, kTwoPi, 1e-14);
    EXPECT_NEAR(c.B, -kTwoPi, 1e-14);
    EXPECT_EQ(c.case_label, OriginCase::BNonzero);
    EXPECT_EQ(c.multiplicity, 3);
    EXPECT_TRUE(c.closed_form);
}

TEST(ClassifyOrigin, ZeroBNonzeroA) {
    for (int n = 4; n <= 7; ++n) {
        const auto c = classify_origin(AbelEquation(n, TrigPoly(1.0), TrigPoly(0.0, {{1, 1.0, 0.0}}, kTwoPi), kTwoPi));
        EXPECT_EQ(c.B, 0.0);
        EXPECT_NEAR(c.A, kTwoPi, 1e-14);
        EXPECT_EQ(c.case_label, OriginCase::BZeroANonzero);
        EXPECT_EQ(c.multiplicity, n - 1);
    }
}

TEST(ClassifyOrigin, BothZero) {
    for (int n = 4; n <= 7; ++n) {
        const auto c = classify_origin(
            AbelEquation(n, TrigPoly(0.0, {{1, 1.0, 0.0}}, kTwoPi), TrigPoly(0.0, {{1, 0.0, 1.0}}, kTwoPi), kTwoPi));
        EXPECT_EQ(c.case_label, OriginCase::BothZero);
        EXPECT_EQ(c.multiplicity, n);
    }
}

TEST(ClassifyOrigin, CubicWithZeroMeanBetaUsesSeries) {
    // For n = 3 beta multiplies z, so B = 0 with a nonconstant beta leaves
    // the closed form; the series answer is used instead.
    const auto c = classify_origin(AbelEquation(3, TrigPoly(1.0), TrigPoly(0.0, {{1, 0.5, 0.0}}, kTwoPi), kTwoPi));
    EXPECT_FALSE(c.closed_form);
    const auto w = winding_count(AbelEquation(3, TrigPoly(1.0), TrigPoly(0.0, {{1, 0.5, 0.0}}, kTwoPi), kTwoPi),
                                 cplx(0.0, 0.0), 1e-3, 64);
    ASSERT_TRUE(w.certified);
    EXPECT_EQ(c.multiplicity, w.winding);
}

TEST(ClassifyOrigin, ToleranceSeparatesNoise) {
    const auto c = classify_origin(AbelEquation(4, TrigPoly(1e-12), TrigPoly(-1e-13), kTwoPi));
    EXPECT_EQ(c.case_label, OriginCase::BothZero);
    EXPECT_EQ(c.multiplicity, 4);
}

TEST(SeriesCoefficients, AbelEquationRecursion) {
    const int n = 6;
    const AbelEquation eq(n, TrigPoly(0.3, {{1, 0.2, 0.1}}, kTwoPi), TrigPoly(-0.7, {{2, 0.1, 0.0}}, kTwoPi), kTwoPi);
    const auto s = series_coefficients(eq.general(), n);
    ASSERT_EQ(int(s.at_period.size()), n);
    EXPECT_NEAR(s.at_period[0], 1.0, 1e-9);
    for (int k = 2; k <= n - 3; ++k) EXPECT_NEAR(s.at_period[std::size_t(k - 1)], 0.0, 1e-9) << "k=" << k;
    EXPECT_NEAR(s.at_period[std::size_t(n - 3)], -0.7 * kTwoPi, 1e-9);
    EXPECT_NEAR(s.at_period[std::size_t(n - 2)], 0.3 * kTwoPi, 1e-9);
    EXPECT_NEAR(s.at_period[std::size_t(n - 1)], kTwoPi, 1e-9);
}

TEST(SeriesCoefficients, PurePower) {
    const auto s = series_coefficients(GeneralEquation::pure(5, 1.0), 5);
    EXPECT_NEAR(s.at_period[0], 1.0, 1e-12);
    for (int k = 2; k <= 4; ++k) EXPECT_NEAR(s.at_period[std::size_t(k - 1)], 0.0, 1e-12);
    EXPECT_NEAR(s.at_period[4], 1.0, 1e-10);
}

TEST(SeriesCoefficients, LinearCoefficientIsExponential) {
    // a_1(omega) = exp(int P_{n-1})
    std::vector<TrigPoly> P{TrigPoly(0.0, {{1, 1.0, 0.0}}, kTwoPi), TrigPoly(0.0, {{1, 0.0, 1.0}}, kTwoPi),
                            TrigPoly(0.05, {{2, 0.3, -0.2}}, kTwoPi), TrigPoly(0.0, kTwoPi)};
    const GeneralEquation eq(4, P, kTwoPi);
    const auto s = series_coefficients(eq, 4);
    EXPECT_NEAR(s.at_period[0], std::exp(0.05 * kTwoPi), 1e-9);
}

TEST(SeriesCoefficients, RequiresVanishingConstantTerm) {
    std::vector<TrigPoly> P{TrigPoly(0.0), TrigPoly(0.0), TrigPoly(1.0)};
    EXPECT_THROW(series_coefficients(GeneralEquation(3, P, kTwoPi), 3), PnNotZero);
}

TEST(GeneralMultiplicity, Examples) {
    EXPECT_EQ(multiplicity_origin_general(AbelEquation(5, TrigPoly(0.4), TrigPoly(-1.0), kTwoPi).general()), 3);
    for (int n = 3; n <= 7; ++n) EXPECT_EQ(multiplicity_origin_general(GeneralEquation::pure(n, 1.0)), n);
    EXPECT_EQ(multiplicity_origin_general(
                  AbelEquation(6, TrigPoly(0.0, {{1, 1.0, 0.0}}, kTwoPi), TrigPoly(0.0, {{1, 0.0, 1.0}}, kTwoPi), kTwoPi)
                      .general()),
              6);
}

TEST(GeneralMultiplicity, QuarticWithForcedLinearTerm) {
    std::vector<TrigPoly> P{TrigPoly(0.0, {{1, 1.0, 0.0}}, kTwoPi), TrigPoly(0.0, {{1, 0.0, 1.0}}, kTwoPi),
                            TrigPoly(0.0, {{1, 0.4, 0.3}, {2, -0.2, 0.1}}, kTwoPi), TrigPoly(0.0, kTwoPi)};
    const GeneralEquation eq(4, P, kTwoPi);
    const auto m = multiplicity_origin_general(eq);
    ASSERT_TRUE(m);
    const auto w = winding_count(eq, cplx(0.0, 0.0), 1e-3, 64);
    ASSERT_TRUE(w.certified);
    EXPECT_EQ(*m, w.winding);
}

TEST(GeneralMultiplicity, AgreesWithClosedFormAndWinding) {
    instances::Source src(4711);
    for (int i = 0; i < 20; ++i) {
        const int n = 3 + i % 5;
        const auto eq = src.abel(n, 1.0);
        const auto c = classify_origin(eq);
        EXPECT_EQ(multiplicity_origin_general(eq.general()), c.multiplicity);
        const auto w = winding_count(eq, cplx(0.0, 0.0), 1e-3, 64);
        ASSERT_TRUE(w.certified);
        EXPECT_EQ(w.winding, c.multiplicity);
    }
}

TEST(DefaultTau, ScalesWithPeriod) {
    EXPECT_EQ(default_tau(0.5), 1e-9);
    EXPECT_DOUBLE_EQ(default_tau(kTwoPi), 1e-9 * kTwoPi);
}

}  // namespace
