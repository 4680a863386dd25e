#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abel/trigpoly.hpp"

using namespace abel;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

TEST(TrigPolyEval, ConstantIsMean) { EXPECT_EQ(eval(TrigPoly(1.0), 0.37), 1.0); }

TEST(TrigPolyEval, CosineAtZero) {
    const TrigPoly p(0.0, {{1, 1.0, 0.0}}, kTwoPi);
    EXPECT_DOUBLE_EQ(eval(p, 0.0), 1.0);
}

TEST(TrigPolyEval, SineAtQuarterPeriod) {
    const TrigPoly p(2.0, {{1, 0.0, 3.0}}, kTwoPi);
    EXPECT_NEAR(eval(p, kPi / 2), 5.0, 1e-15);
}

TEST(TrigPolyEval, Periodic) {
    const TrigPoly p(0.3, {{1, 0.5, -0.2}, {3, 1.1, 0.7}}, 3.0);
    for (double t : {0.0, 0.4, 1.7, 2.9}) EXPECT_NEAR(p(t), p(t + 3.0), 1e-14);
}

TEST(TrigPolyConstruction, RejectsUnorderedHarmonics) {
    EXPECT_THROW(TrigPoly(0.0, {{2, 1.0, 0.0}, {1, 1.0, 0.0}}, kTwoPi), std::invalid_argument);
    EXPECT_THROW(TrigPoly(0.0, {{1, 1.0, 0.0}, {1, 1.0, 0.0}}, kTwoPi), std::invalid_argument);
}

TEST(TrigPolyConstruction, RejectsNonpositivePeriod) { EXPECT_THROW(TrigPoly(1.0, 0.0), std::invalid_argument); }

TEST(TrigPolyIntegral, MeanTimesPeriod) {
    EXPECT_DOUBLE_EQ(integral_over_period(TrigPoly(1.0, kTwoPi)), kTwoPi);
    EXPECT_EQ(integral_over_period(TrigPoly(0.0, {{1, 5.0, 0.0}, {3, 0.0, -2.0}}, kTwoPi)), 0.0);
    EXPECT_DOUBLE_EQ(integral_over_period(TrigPoly(-0.5, {{2, 1.0, 0.0}}, 4.0)), -2.0);
}

TEST(TrigPolyIntegral, MatchesQuadrature) {
    const TrigPoly p(0.7, {{1, 0.3, -0.4}, {2, -1.0, 0.25}}, 5.0);
    const int m = 20000;
    double s = 0.0;
    for (int k = 0; k < m; ++k) s += p((k + 0.5) * 5.0 / m);
    EXPECT_NEAR(s * 5.0 / m, integral_over_period(p), 1e-10);
}

TEST(TrigPolySupBound, Examples) {
    EXPECT_DOUBLE_EQ(sup_bound(TrigPoly(1.0, {{1, 2.0, -3.0}}, kTwoPi)), 6.0);
    EXPECT_EQ(sup_bound(TrigPoly(0.0)), 0.0);
    EXPECT_DOUBLE_EQ(sup_bound(TrigPoly(-1.0, {{2, 0.0, 0.5}}, kTwoPi)), 1.5);
}

TEST(TrigPolySupBound, DominatesSamples) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const TrigPoly p(u(rng), {{1, u(rng), u(rng)}, {2, u(rng), u(rng)}, {5, u(rng), u(rng)}}, kTwoPi);
    double mx = 0.0;
    for (int k = 0; k < 10000; ++k) mx = std::max(mx, std::abs(p(kTwoPi * k / 10000.0)));
    EXPECT_GE(sup_bound(p), mx);
}

TEST(CertifyNonpositive, DominatedMean) {
    EXPECT_TRUE(std::holds_alternative<CertifiedNonpositive>(certify_nonpositive(TrigPoly(-5.0, {{1, 1.0, 0.0}}, kTwoPi))));
}

TEST(CertifyNonpositive, PositiveConstantViolatedAtZero) {
    const auto c = certify_nonpositive(TrigPoly(1.0));
    ASSERT_TRUE(std::holds_alternative<CertifiedViolated>(c));
    EXPECT_EQ(std::get<CertifiedViolated>(c).t, 0.0);
}

TEST(CertifyNonpositive, NegativeCosineViolatedAtPi) {
    const auto c = certify_nonpositive(TrigPoly(0.0, {{1, -1.0, 0.0}}, kTwoPi));
    ASSERT_TRUE(std::holds_alternative<CertifiedViolated>(c));
    const double t = std::get<CertifiedViolated>(c).t;
    EXPECT_NEAR(t, kPi, 1e-12);
    EXPECT_GT(eval(TrigPoly(0.0, {{1, -1.0, 0.0}}, kTwoPi), t), 0.0);
}

TEST(CertifyNonpositive, TouchingZeroIsCertifiedByMeanBound) {
    // -1 + cos t reaches 0 at t = 0; the coefficient bound gives exactly 0.
    EXPECT_TRUE(is_certified_nonpositive(certify_nonpositive(TrigPoly(-1.0, {{1, 1.0, 0.0}}, kTwoPi))));
}

TEST(CertifyNonpositive, NeedsSamples) { EXPECT_THROW(certify_nonpositive(TrigPoly(-1.0), 4), std::invalid_argument); }

TEST(CertifyNonpositive, ZeroIsNonpositive) { EXPECT_TRUE(is_certified_nonpositive(certify_nonpositive(TrigPoly(0.0)))); }

TEST(RestrictToCircle, Examples) {
    const auto c = restrict_to_circle(HomogeneousPoly({2.5}));
    EXPECT_EQ(c.mean(), 2.5);
    EXPECT_TRUE(c.is_constant());

    const auto r = restrict_to_circle(HomogeneousPoly({1.0, 0.0, 1.0}));
    EXPECT_NEAR(r.mean(), 1.0, 1e-15);
    EXPECT_LT(r.coefficient_l1(), 1e-15);

    const auto l = restrict_to_circle(HomogeneousPoly({0.3, -0.8}));
    EXPECT_EQ(l.mean(), 0.0);
    ASSERT_EQ(l.harmonics().size(), 1u);
    EXPECT_NEAR(l.harmonics()[0].cos_coef, 0.3, 1e-15);
    EXPECT_NEAR(l.harmonics()[0].sin_coef, -0.8, 1e-15);
}

TEST(RestrictToCircle, AgreesWithDirectEvaluation) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int d = 0; d <= 8; ++d) {
        std::vector<double> coefs(std::size_t(d + 1));
        for (auto& x : coefs) x = u(rng);
        const HomogeneousPoly h(coefs);
        const auto p = restrict_to_circle(h);
        for (int k = 0; k < 100; ++k) {
            const double th = kPi * u(rng);
            const double want = h(std::cos(th), std::sin(th));
            EXPECT_NEAR(p(th), want, 1e-12 * std::max(1.0, std::abs(want))) << "degree " << d;
        }
    }
}

TEST(RestrictToCircle, OddDegreeHasZeroMean) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int d = 1; d <= 9; d += 2) {
        std::vector<double> coefs(std::size_t(d + 1));
        for (auto& x : coefs) x = u(rng);
        EXPECT_EQ(restrict_to_circle(HomogeneousPoly(coefs)).mean(), 0.0) << "degree " << d;
    }
}

TEST(HomogeneousPoly, RadialPower) {
    const auto h = HomogeneousPoly::radial(3, -0.5);
    EXPECT_EQ(h.degree(), 6);
    EXPECT_NEAR(h(0.6, 0.8), -0.5, 1e-15);
    EXPECT_NEAR(h(2.0, 0.0), -0.5 * 64.0, 1e-12);
}

}  // namespace
