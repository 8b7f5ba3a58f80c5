#include <gtest/gtest.h>

#include <cmath>

#include "catqec/qec_analysis.hpp"
#include "catqec/restoration.hpp"
#include "catqec/tables.hpp"

using namespace catqec;

namespace {
RepeaterConfig base(unsigned ar_every, double spacing) {
    RepeaterConfig c;
    c.ar_every = ar_every;
    c.spacing_km = spacing;
    return c;
}
}  // namespace

TEST(Repeater, SegmentGamma) {
    EXPECT_NEAR(segment_gamma(22.0, 22.0), std::exp(-1.0), 1e-15);
    EXPECT_THROW(segment_gamma(0.0, 22.0), std::invalid_argument);
}

TEST(Repeater, ConfigValidation) {
    auto c = base(0, 1.0);
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = base(1, 2000.0);
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = base(1, 1.0);
    c.spec.d = 3;
    c.coeffs = LogicalCoeffs::normalized({1.0, 1.0, 1.0});
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Repeater, ProductInvariant) {
    for (unsigned ar : {1u, 2u, 3u}) {
        const auto r = simulate_chain(base(ar, 10.0));
        ASSERT_EQ(r.trace.size(), r.stations);
        double f = 1.0, p = 1.0;
        unsigned long restores = 0;
        for (const auto& s : r.trace) {
            f *= s.F_factor;
            p *= s.P_factor;
            if (s.P_factor != 1.0) ++restores;
        }
        EXPECT_DOUBLE_EQ(f, r.fidelity);
        EXPECT_DOUBLE_EQ(p, r.success_prob);
        EXPECT_EQ(restores, r.restorations);
        EXPECT_EQ(r.restorations, r.stations / ar);
    }
}

TEST(Repeater, AmplitudeThreadsThroughUnrestoredStations) {
    const auto r = simulate_chain(base(2, 10.0));
    const double g = segment_gamma(10.0, 22.0);
    EXPECT_DOUBLE_EQ(r.trace[0].amplitude_in, 7.0);
    EXPECT_NEAR(r.trace[1].amplitude_in, std::sqrt(g) * 7.0, 1e-14);
    EXPECT_DOUBLE_EQ(r.trace[2].amplitude_in, 7.0);
    EXPECT_EQ(r.trace[0].P_factor, 1.0);
}

TEST(Repeater, SingleHopMatchesDirectEvaluation) {
    RepeaterConfig c = base(1, 5.0);
    c.total_km = 5.0;
    const auto r = simulate_chain(c);
    const double g = segment_gamma(5.0, 22.0);
    EXPECT_EQ(r.stations, 1u);
    EXPECT_NEAR(r.fidelity, fidelity_state(c.spec, c.coeffs, ChannelParams{g}), 1e-15);
    EXPECT_NEAR(r.success_prob, ow_step_factor(c.spec, c.coeffs, g), 1e-15);
}

TEST(Repeater, NonIntegralSpacingIsFlagged) {
    const auto r = simulate_chain(base(1, 30.0));
    EXPECT_TRUE(r.spacing_rounded);
    EXPECT_EQ(r.stations, 33u);
    EXPECT_FALSE(simulate_chain(base(1, 0.1)).spacing_rounded);
}

TEST(Repeater, CollapseFlag) {
    RepeaterConfig c = base(1, 1.0);
    c.spec.alpha = 0.05;
    c.total_km = 2.0;
    EXPECT_TRUE(simulate_chain(c).collapsed);
    EXPECT_FALSE(simulate_chain(base(1, 1.0)).collapsed);
}

TEST(Repeater, WorstCasePicksLowerFidelity) {
    const auto w = simulate_worst_case(base(2, 1.0));
    EXPECT_DOUBLE_EQ(w.fidelity(), std::min(w.plus.fidelity, w.minus.fidelity));
}

TEST(Repeater, NewSchemeBeatsOldOnTableRows) {
    // Compared per input state; the worst-case sign can differ between the schemes.
    for (const auto& ref : table_reference()) {
        const auto r = reproduce_row(ref);
        const std::string tag = ref.table + " L" + std::to_string(ref.L) + " a" + std::to_string(ref.alpha) + " L0 " +
                                std::to_string(ref.spacing_km);
        EXPECT_GE(r.fresh.plus.success_prob, r.old.plus.success_prob) << tag;
        EXPECT_GE(r.fresh.minus.success_prob, r.old.minus.success_prob) << tag;
    }
}

TEST(Repeater, DominatedLimit) {
    // one restoration over the whole distance: exponentially small success
    RepeaterConfig c = base(1, 1000.0);
    const auto r = simulate_chain(c);
    EXPECT_EQ(r.restorations, 1u);
    EXPECT_LT(r.success_prob, 1e-10);
}

TEST(Sweep, PreservesOrderAndHandlesEmpty) {
    const std::vector<double> v{50.0, 1.0, 10.0};
    const auto out = sweep(base(2, 1.0), SweepAxis::Spacing, v);
    ASSERT_EQ(out.size(), 3u);
    for (std::size_t i = 0; i < v.size(); ++i)
        EXPECT_DOUBLE_EQ(out[i].fidelity, simulate_chain(base(2, v[i])).fidelity);
    EXPECT_TRUE(sweep(base(2, 1.0), SweepAxis::Spacing, {}).empty());
    EXPECT_THROW(sweep(base(2, 1.0), SweepAxis::Gamma, {1.5}), std::invalid_argument);
    EXPECT_EQ(parse_sweep_axis("alpha"), SweepAxis::Alpha);
    EXPECT_THROW(parse_sweep_axis("beta"), std::invalid_argument);
}

TEST(Sweep, GammaAxisSetsSpacing) {
    const double g = segment_gamma(10.0, 22.0);
    RepeaterConfig c = base(1, 1.0);
    c.total_km = 100.0;
    const auto out = sweep(c, SweepAxis::Gamma, {g});
    c.spacing_km = 10.0;
    EXPECT_NEAR(out[0].success_prob, simulate_chain(c).success_prob, 1e-12);
}

TEST(Sweep, SpacingCurveShapes) {
    const std::vector<double> grid{0.01, 0.02, 0.05, 0.1, 0.2, 0.4, 0.5, 1.0, 2.0, 4.0, 5.0, 10.0, 20.0, 25.0, 50.0, 100.0};
    const auto out = sweep_worst_case(base(2, 1.0), SweepAxis::Spacing, grid);
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].success_prob() > out[best].success_prob()) best = i;
    EXPECT_GT(best, 0u);
    EXPECT_LT(best, grid.size() - 1);
    // F falls below 1e-100 by a few km; only the short range is meaningful
    for (std::size_t i = 1; i < out.size() && grid[i] <= 2.0; ++i)
        EXPECT_LE(out[i].fidelity(), out[i - 1].fidelity() + 1e-12) << grid[i];
}

TEST(Tables, ReferenceRowsPresent) {
    const auto all = table_reference();
    const auto t2 = table_reference("II");
    EXPECT_GT(all.size(), t2.size());
    bool found = false;
    for (const auto& r : t2)
        if (r.alpha == 7.0 && r.spacing_km == 0.1) {
            found = true;
            EXPECT_DOUBLE_EQ(r.F_new.value, 0.963915);
            EXPECT_DOUBLE_EQ(r.P_new.value, 0.451687);
        }
    EXPECT_TRUE(found);
    EXPECT_THROW(table_reference("IV"), std::invalid_argument);
}

TEST(Tables, Deviations) {
    EXPECT_NEAR(fidelity_deviation(0.95, RefValue{0.96, false}), -0.01, 1e-15);
    EXPECT_NEAR(probability_deviation(0.55, RefValue{0.5, false}), 0.1, 1e-15);
}
