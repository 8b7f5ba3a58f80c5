#include "catqec/repeater.hpp"

#include <cmath>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "catqec/qec_analysis.hpp"
#include "catqec/restoration.hpp"

namespace catqec {

void RepeaterConfig::validate() const {
    if (!(total_km > 0.0) || !(spacing_km > 0.0) || !(attenuation_km > 0.0))
        throw std::invalid_argument("RepeaterConfig: distances must be positive");
    if (total_km < spacing_km) throw std::invalid_argument("RepeaterConfig: total_km < spacing_km");
    if (ar_every == 0) throw std::invalid_argument("RepeaterConfig: ar_every must be positive");
    spec.validate();
    if (spec.d != 2) throw std::invalid_argument("RepeaterConfig: qubit codes only");
    coeffs.validate(spec.d);
}

double segment_gamma(double length_km, double attenuation_km) {
    if (!(length_km > 0.0) || !(attenuation_km > 0.0)) throw std::invalid_argument("segment_gamma: lengths must be positive");
    return std::exp(-length_km / attenuation_km);
}

ChainResult simulate_chain(const RepeaterConfig& config) {
    config.validate();
    ChainResult out;
    const double ratio = config.total_km / config.spacing_km;
    const double n_round = std::round(ratio);
    if (std::abs(ratio - n_round) <= 1e-9 * std::max(1.0, ratio)) {
        out.stations = static_cast<unsigned long>(n_round);
    } else {
        out.stations = static_cast<unsigned long>(std::floor(ratio));
        out.spacing_rounded = true;
    }
    const double gamma = segment_gamma(config.spacing_km, config.attenuation_km);
    // Restoration sees the loss accumulated since the previous restoration.
    const double gamma_ar = std::pow(gamma, static_cast<double>(config.ar_every));
    const double alpha = config.spec.alpha;

    std::map<std::pair<double, bool>, std::pair<double, double>> cache;
    auto factors = [&](double amp, bool restore) {
        const auto key = std::make_pair(amp, restore);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const double f = fidelity_state(config.spec.with_alpha(amp), config.coeffs, ChannelParams{gamma});
        const double p = restore ? ow_step_factor(config.spec, config.coeffs, gamma_ar) : 1.0;
        return cache.emplace(key, std::make_pair(f, p)).first->second;
    };

    if (config.keep_trace) out.trace.reserve(out.stations);
    double amp = alpha;
    for (unsigned long s = 1; s <= out.stations; ++s) {
        const bool restore = s % config.ar_every == 0;
        if (amp < 0.1) out.collapsed = true;
        const auto [f, p] = factors(amp, restore);
        out.fidelity *= f;
        out.success_prob *= p;
        if (restore) ++out.restorations;
        if (config.keep_trace) out.trace.push_back(StationTrace{s, amp, f, p});
        amp = restore ? alpha : std::sqrt(gamma) * amp;
    }
    return out;
}

WorstCaseChain simulate_worst_case(RepeaterConfig config) {
    const double h = 1.0 / std::sqrt(2.0);
    WorstCaseChain w;
    config.coeffs = LogicalCoeffs::qubit(h, h);
    w.plus = simulate_chain(config);
    config.coeffs = LogicalCoeffs::qubit(h, -h);
    w.minus = simulate_chain(config);
    w.minus_is_worst = w.minus.fidelity < w.plus.fidelity;
    return w;
}

SweepAxis parse_sweep_axis(const std::string& name) {
    if (name == "spacing") return SweepAxis::Spacing;
    if (name == "alpha") return SweepAxis::Alpha;
    if (name == "gamma") return SweepAxis::Gamma;
    throw std::invalid_argument("unknown sweep axis '" + name + "' (spacing|alpha|gamma)");
}

namespace {

RepeaterConfig apply_axis(RepeaterConfig c, SweepAxis axis, double v) {
    if (!(v > 0.0)) throw std::invalid_argument("sweep: values must be positive");
    switch (axis) {
        case SweepAxis::Spacing: c.spacing_km = v; break;
        case SweepAxis::Alpha: c.spec.alpha = v; break;
        case SweepAxis::Gamma:
            if (!(v < 1.0)) throw std::invalid_argument("sweep: gamma values must lie in (0, 1)");
            c.spacing_km = -c.attenuation_km * std::log(v);
            break;
    }
    return c;
}

template <class Result, class Fn>
std::vector<Result> run_parallel(const std::vector<double>& values, Fn fn) {
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Result> out;
    out.reserve(values.size());
    for (std::size_t start = 0; start < values.size(); start += width) {
        std::vector<std::future<Result>> batch;
        for (std::size_t i = start; i < std::min(values.size(), start + width); ++i)
            batch.push_back(std::async(std::launch::async, fn, values[i]));
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

}  // namespace

std::vector<ChainResult> sweep(const RepeaterConfig& base, SweepAxis axis, const std::vector<double>& values) {
    return run_parallel<ChainResult>(values, [&](double v) { return simulate_chain(apply_axis(base, axis, v)); });
}

std::vector<WorstCaseChain> sweep_worst_case(const RepeaterConfig& base, SweepAxis axis,
                                             const std::vector<double>& values) {
    return run_parallel<WorstCaseChain>(values,
                                        [&](double v) { return simulate_worst_case(apply_axis(base, axis, v)); });
}

}  // namespace catqec
