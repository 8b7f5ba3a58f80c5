#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "catqec/restoration.hpp"
#include "oracles.hpp"

using namespace catqec;

TEST(Filter, ParamsDecomposeOverlap) {
    const cplx s = std::polar(0.4, 0.9);
    const auto fp = filter_params(s);
    EXPECT_NEAR(fp.b0 * fp.b0 + fp.b1 * fp.b1, 1.0, 1e-15);
    // <0|1> = e^{i phi}(b0^2 - b1^2)
    EXPECT_LT(std::abs(std::polar(fp.b0 * fp.b0 - fp.b1 * fp.b1, fp.phi) - s), 1e-15);
    EXPECT_THROW(filter_params(1.0), std::domain_error);
}

TEST(Filter, PovmComplete) {
    for (double r : {0.0, 0.1, 0.5, 0.99})
        EXPECT_LT(povm_completeness_error(filter_operators(filter_params(r))), 1e-12);
}

TEST(Filter, SuccessIsOneMinusOverlap) {
    // filtered states become orthogonal; success averaged over the two inputs is 1 - |s|
    const auto fp = filter_params(std::polar(0.3, 0.5));
    const auto ops = filter_operators(fp);
    const Eigen::Vector2cd in0(fp.b0, fp.b1);
    const Eigen::Vector2cd in1 = std::polar(1.0, fp.phi) * Eigen::Vector2cd(fp.b0, -fp.b1);
    EXPECT_NEAR((ops.success * in0).squaredNorm(), 1 - 0.3, 1e-14);
    EXPECT_NEAR((ops.success * in1).squaredNorm(), 1 - 0.3, 1e-14);
    EXPECT_LT(std::abs((ops.success * in0).dot(ops.success * in1)), 1e-15);
}

TEST(Filter, VacuumCodeL0) {
    for (double a : {0.3, 1.0, 2.0}) {
        const cplx s = codeword_overlap(CodeSpec{0, 2, a}, 0, 0, 1);
        EXPECT_NEAR(filter_success(s), 1.0 - std::exp(-2 * a * a), 1e-12);
    }
}

TEST(Filter, PhaseForOddL1ErrorSpace) {
    for (double a : {0.7, 1.3, 2.1}) {
        const auto fp = filter_params(codeword_overlap(CodeSpec{1, 2, a}, 1, 0, 1));
        const double sgn = std::sin(a * a) > 0 ? 1.0 : -1.0;
        EXPECT_NEAR(fp.phi, sgn * 0.5 * std::numbers::pi, 1e-12) << a;
    }
}

TEST(Teleport, MatchesFilteredStateNorm) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<unsigned> Ld(1, 3);
    std::uniform_real_distribution<double> ad(0.8, 2.2), gd(0.5, 0.98), ph(0, 2 * std::numbers::pi), th(0.1, 1.4);
    for (int t = 0; t < 10; ++t) {
        const unsigned L = Ld(rng);
        const double a = ad(rng), g = gd(rng), tt = th(rng), phi = ph(rng);
        const unsigned q = rng() % (L + 1);
        const auto c = LogicalCoeffs::qubit(std::cos(tt), std::polar(std::sin(tt), phi));
        const CodeSpec spec{L, 2, a};
        const double got = teleport_success(spec, q, ChannelParams{g}, c);
        const double ref = oracle::filtered_teleport_norm(L, q, a, g, c.amplitudes[0], c.amplitudes[1],
                                                          static_cast<int>(code_nmax(spec)));
        EXPECT_NEAR(got, ref, 1e-9) << "L" << L << " a" << a << " g" << g << " q" << q;
    }
}

TEST(Teleport, WeightedVariantDiffers) {
    // real overlaps and real coefficients; for imaginary s~ the two happen to agree
    const cplx st = 0.3, sb = 0.2;
    const auto c = LogicalCoeffs::normalized({0.6, 0.8});
    EXPECT_NEAR(teleport_success_weighted(st, sb, c) / teleport_success_from_overlaps(st, sb, c), 4.06912 / 4.0, 1e-12);
    EXPECT_GT(std::abs(teleport_success_weighted(st, sb, c) - teleport_success_from_overlaps(st, sb, c)), 1e-6);
}

TEST(Teleport, DecreasesWithOverlapAndStaysInRange) {
    const auto c = LogicalCoeffs::normalized({1.0, 1.0});
    double prev = 2.0;
    for (double r = 0.0; r < 1.0; r += 0.1) {
        const double p = teleport_success_from_overlaps(r, 0.0, c);
        EXPECT_LT(p, prev);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0 + 1e-15);
        prev = p;
    }
    EXPECT_EQ(teleport_success_from_overlaps(1.0, 0.0, c), 0.0);
}

TEST(Teleport, BellNormsExplicitSum) {
    // sum of the four output norms is 4 for any s_bar when the output words are the Z pair
    const auto c = LogicalCoeffs::normalized({0.6, cplx(0.0, 0.8)});
    const auto n = bell_norms(0.2, cplx(0.1, -0.3), c);
    EXPECT_NEAR(n.N_chi[0] + n.N_chi[1] + n.N_chi[2] + n.N_chi[3], 4.0, 1e-14);
}

TEST(OneWay, StepFactorIsWeightedAverage) {
    const CodeSpec spec{2, 2, 3.0};
    const auto c = LogicalCoeffs::normalized({1.0, 1.0});
    const double g = 0.99;
    const auto w = loss_class_weights(spec, c, ChannelParams{g});
    double ref = 0.0;
    for (unsigned i = 0; i < spec.cycle(); ++i)
        ref += w.ptilde[i] * teleport_success(spec, i % 3, ChannelParams{g}, branch_coeffs(spec, c, i));
    EXPECT_NEAR(ow_step_factor(spec, c, g), ref, 1e-14);
    EXPECT_GT(ref, 0.0);
    EXPECT_LT(ref, 1.0);
    EXPECT_NEAR(ow_success(spec, c, g, 3), std::pow(ref, 3), 1e-14);
    EXPECT_THROW(ow_success(spec, c, g, 0), std::invalid_argument);
}
