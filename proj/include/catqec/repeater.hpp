#pragma once

#include <string>
#include <vector>

#include "catqec/cat_code.hpp"

namespace catqec {

struct RepeaterConfig {
    double total_km = 1000.0;
    double spacing_km = 0.1;
    double attenuation_km = 22.0;
    unsigned ar_every = 1;  // 1: restore at every station ("old"), 2: every second station ("new")
    CodeSpec spec{4, 2, 7.0};
    LogicalCoeffs coeffs = LogicalCoeffs::normalized({1.0, 1.0});
    bool keep_trace = true;

    void validate() const;
};

struct StationTrace {
    unsigned long station = 0;  // 1-based
    double amplitude_in = 0.0;
    double F_factor = 1.0;
    double P_factor = 1.0;
};

struct ChainResult {
    double fidelity = 1.0;
    double success_prob = 1.0;
    unsigned long stations = 0;
    unsigned long restorations = 0;
    bool collapsed = false;        // some station saw an amplitude below 0.1
    bool spacing_rounded = false;  // total/spacing was not integral; station count rounded down
    std::vector<StationTrace> trace;
};

// exp(-length / attenuation)
double segment_gamma(double length_km, double attenuation_km);

// Station-by-station product of correctable weights (F) and restoration factors (P).
ChainResult simulate_chain(const RepeaterConfig& config);

// Runs a = b and a = -b; F is the smaller of the two, P comes from the same run.
struct WorstCaseChain {
    ChainResult plus;
    ChainResult minus;
    bool minus_is_worst = false;
    double fidelity() const { return minus_is_worst ? minus.fidelity : plus.fidelity; }
    double success_prob() const { return minus_is_worst ? minus.success_prob : plus.success_prob; }
};
WorstCaseChain simulate_worst_case(RepeaterConfig config);

enum class SweepAxis { Spacing, Alpha, Gamma };
SweepAxis parse_sweep_axis(const std::string& name);

// One result per value, input order; values run concurrently.
// Gamma axis: spacing is set so that each segment transmits the given gamma.
std::vector<ChainResult> sweep(const RepeaterConfig& base, SweepAxis axis, const std::vector<double>& values);
std::vector<WorstCaseChain> sweep_worst_case(const RepeaterConfig& base, SweepAxis axis,
                                             const std::vector<double>& values);

}  // namespace catqec
