#include "rainbow_forge/exact_math.hpp"

#include <cmath>
#include <gtest/gtest.h>

#include "rainbow_forge/rng.hpp"

using namespace rainbow;

TEST(ExactMath, FloorRational) {
    EXPECT_EQ(floor_rational(Rational(7, 2)), 3);
    EXPECT_EQ(floor_rational(Rational(-7, 2)), -4);
    EXPECT_EQ(floor_rational(Rational(6, 2)), 3);
    EXPECT_EQ(floor_rational(Rational(0)), 0);
}

TEST(ExactMath, CmpExpAgainstDouble) {
    // e^2 = 7.389...
    EXPECT_EQ(cmp_exp(2, Rational(7)), 1);
    EXPECT_EQ(cmp_exp(2, Rational(8)), -1);
    EXPECT_EQ(cmp_exp(0, Rational(1)), 0);
    EXPECT_EQ(cmp_exp(-1, Rational(1, 3)), 1);   // e^-1 = .3678 > 1/3
    EXPECT_EQ(cmp_exp(-1, Rational(2, 5)), -1);  // .3678 < .4
}

TEST(ExactMath, CmpExpNearTie) {
    // 2721/1001 = 2.71828... brackets e tightly from below
    EXPECT_EQ(cmp_exp(1, Rational(2721, 1001)), 1);
    EXPECT_EQ(cmp_exp(1, Rational(2719, 1000)), -1);
    // 28667/10546 agrees with e to ~9 digits
    EXPECT_EQ(cmp_exp(1, Rational(28667, 10546)) != 0, true);
}

TEST(ExactMath, LinearLogMatchesDoubleEvaluation) {
    CounterRng rng(81);
    for (int trial = 0; trial < 500; ++trial) {
        long long ca = static_cast<long long>(rng.below(40));
        long long cb = static_cast<long long>(rng.below(40));
        long long a = 1 + static_cast<long long>(rng.below(30));
        long long b = 1 + static_cast<long long>(rng.below(30));
        long long d = static_cast<long long>(rng.below(20)) - 10;
        double val = static_cast<double>(ca) * std::log(static_cast<double>(a)) -
                     static_cast<double>(cb) * std::log(static_cast<double>(b)) -
                     static_cast<double>(d);
        if (std::abs(val) < 1e-6) continue;  // the screen's margin band
        EXPECT_EQ(cmp_linear_log(ca, a, cb, b, d), val > 0 ? 1 : -1)
            << ca << " ln " << a << " - " << cb << " ln " << b << " - " << d;
    }
}

TEST(ExactMath, LinearLogExactTies) {
    // 2 ln 8 = 6 ln 2 exactly
    EXPECT_EQ(cmp_linear_log(2, 8, 6, 2, 0), 0);
    EXPECT_EQ(cmp_linear_log(2, 8, 6, 2, 1), -1);
    EXPECT_EQ(cmp_linear_log(3, 9, 6, 3, 0), 0);
}

TEST(ExactMath, EpsThreshold) {
    // eps_max(u=1) = 1 for any n
    EXPECT_EQ(cmp_eps_threshold(Rational(1), 1, 5), 0);
    EXPECT_EQ(cmp_eps_threshold(Rational(9, 10), 1, 5), -1);
    // eps_max(u=n) = 0
    EXPECT_EQ(cmp_eps_threshold(Rational(0), 6, 6), 0);
    EXPECT_EQ(cmp_eps_threshold(Rational(1, 100), 6, 6), 1);
    // eps_max(2, 4) = 1/2 exactly
    EXPECT_EQ(cmp_eps_threshold(Rational(1, 2), 2, 4), 0);
    EXPECT_EQ(cmp_eps_threshold(Rational(49, 100), 2, 4), -1);
    EXPECT_EQ(cmp_eps_threshold(Rational(51, 100), 2, 4), 1);
    // eps_max(8, 101) = 1 - ln 8/ln 101 = 0.54945...
    EXPECT_EQ(cmp_eps_threshold(Rational(54, 100), 8, 101), -1);
    EXPECT_EQ(cmp_eps_threshold(Rational(55, 100), 8, 101), 1);
}

TEST(ExactMath, SizeEventThreshold) {
    // n/sqrt(e) for n = 16 is 9.704...
    EXPECT_TRUE(at_least_n_over_sqrt_e(10, 16));
    EXPECT_FALSE(at_least_n_over_sqrt_e(9, 16));
    EXPECT_TRUE(at_least_n_over_sqrt_e(16, 16));
    // n = 12: threshold 7.278...
    EXPECT_TRUE(at_least_n_over_sqrt_e(8, 12));
    EXPECT_FALSE(at_least_n_over_sqrt_e(7, 12));
}

TEST(ExactMath, SubgraphRatio) {
    // K2 ratio 1/(ln 2 - 1/3) = 2.776.. beats K3 ratio 2/(ln 3 - 1/3) = 2.609..
    EXPECT_EQ(cmp_subgraph_ratio(1, 2, 3, 3), 1);
    // equal pairs tie exactly
    EXPECT_EQ(cmp_subgraph_ratio(1, 2, 1, 2), 0);
    // edgeless and singleton are ratio zero
    EXPECT_EQ(cmp_subgraph_ratio(0, 5, 0, 1), 0);
    EXPECT_EQ(cmp_subgraph_ratio(1, 2, 0, 1), 1);
}

TEST(ExactMath, DegreeGuarantee) {
    // H = G trivially satisfies the guarantee
    EXPECT_TRUE(degree_guarantee_holds(3, 3, 3, 3));
    // K2 inside K3
    EXPECT_TRUE(degree_guarantee_holds(1, 2, 3, 3));
}

TEST(Rng, DeterministicAndBounded) {
    CounterRng a(42), b(42);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
    CounterRng c(7);
    for (int i = 0; i < 1000; ++i) {
        auto v = c.below(17);
        EXPECT_LT(v, 17u);
    }
    // exact Bernoulli(1/3) frequency over many draws
    CounterRng d(11);
    int hits = 0;
    for (int i = 0; i < 30000; ++i) hits += d.bernoulli(1, 3);
    EXPECT_NEAR(hits / 30000.0, 1.0 / 3.0, 0.01);
}
