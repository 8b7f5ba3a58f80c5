#include <gtest/gtest.h>

#include <cmath>

#include "catqec/series.hpp"

using namespace catqec;

namespace {
// Direct sum of x^k/k! over the class, by recursion.
double direct(double x, unsigned m, unsigned j) {
    double term = 1.0, acc = 0.0;
    for (unsigned k = 0; k < 600; ++k) {
        if (k > 0) term *= x / k;
        if (k % m == j) acc += term;
    }
    return acc;
}
}  // namespace

TEST(Sectioned, ModTwoIsCoshSinh) {
    for (double x : {0.1, 1.0, 4.0, 25.0}) {
        EXPECT_NEAR(sectioned_exp(x, 2, 0) / std::cosh(x), 1.0, 1e-13);
        EXPECT_NEAR(sectioned_exp(x, 2, 1) / std::sinh(x), 1.0, 1e-13);
    }
}

TEST(Sectioned, ModFourClosedForms) {
    const double x = 3.7;
    EXPECT_NEAR(sectioned_exp(x, 4, 0), 0.5 * (std::cosh(x) + std::cos(x)), 1e-12);
    EXPECT_NEAR(sectioned_exp(x, 4, 1), 0.5 * (std::sinh(x) + std::sin(x)), 1e-12);
    EXPECT_NEAR(sectioned_exp(x, 4, 2), 0.5 * (std::cosh(x) - std::cos(x)), 1e-12);
    EXPECT_NEAR(sectioned_exp(x, 4, 3), 0.5 * (std::sinh(x) - std::sin(x)), 1e-12);
}

TEST(Sectioned, AgreesWithDirectSumAndFilter) {
    for (unsigned m : {1u, 3u, 5u, 6u, 12u})
        for (double x : {0.05, 0.9, 4.0, 16.0, 49.0})
            for (unsigned j = 0; j < m; ++j) {
                const double ref = direct(x, m, j);
                EXPECT_NEAR(sectioned_exp(x, m, j) / ref, 1.0, 1e-12) << m << " " << x << " " << j;
                if (ref > 1e-6 * std::exp(x))
                    EXPECT_NEAR(sectioned_exp_filter(x, m, j) / ref, 1.0, 1e-9) << m << " " << x << " " << j;
            }
}

TEST(Sectioned, PoissonClassesSumToOne) {
    for (double x : {1e-6, 0.3, 7.0, 81.0}) {
        double s = 0.0;
        for (long j = 0; j < 10; ++j) s += poisson_class(x, 10, j);
        EXPECT_NEAR(s, 1.0, 1e-13);
    }
}

TEST(Sectioned, TinyArgumentHighClass) {
    // P(Poisson(x) = 11 mod 12) ~ x^11/11! for small x; no underflow to zero
    const double x = 1e-3;
    const double lp = log_poisson_class(x, 12, 11);
    EXPECT_NEAR(lp, -x + 11 * std::log(x) - std::lgamma(12.0), 1e-9);
}

TEST(Sectioned, ZeroArgument) {
    EXPECT_EQ(poisson_class(0.0, 4, 0), 1.0);
    EXPECT_EQ(poisson_class(0.0, 4, 1), 0.0);
    EXPECT_EQ(poisson_class(0.0, 4, -4), 1.0);
}

TEST(Sectioned, NegativeIndexWraps) {
    EXPECT_EQ(mod_class(-1, 4), 3u);
    EXPECT_DOUBLE_EQ(poisson_class(2.0, 3, -1), poisson_class(2.0, 3, 2));
}

TEST(Sectioned, RejectsBadInput) {
    EXPECT_THROW(log_poisson_class(-1.0, 2, 0), std::invalid_argument);
    EXPECT_THROW(log_poisson_class(1.0, 0, 0), std::invalid_argument);
}
