#include "catqec/loss_channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "catqec/series.hpp"

namespace catqec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ln of the A_k matrix element <n-k|A_k|n> = sqrt(C(n,k) gamma^{n-k} (1-gamma)^k).
double log_kraus_element(std::size_t n, std::size_t k, double log_g, double log_1mg) {
    const double log_binom = log_factorial(n) - log_factorial(k) - log_factorial(n - k);
    const double loss = k == 0 ? 0.0 : static_cast<double>(k) * log_1mg;
    const double keep = n == k ? 0.0 : static_cast<double>(n - k) * log_g;
    return 0.5 * (log_binom + keep + loss);
}

Eigen::VectorXcd branch_phases(const CodeSpec& spec, unsigned i) {
    Eigen::VectorXcd ph(spec.d);
    for (unsigned k = 0; k < spec.d; ++k) ph[k] = std::polar(1.0, kTwoPi * k * i / spec.cycle());
    return ph;
}

}  // namespace

void ChannelParams::validate() const {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("ChannelParams: gamma must lie in (0, 1]");
}

FockVector kraus_apply(const FockVector& state, ChannelParams params, std::size_t k) {
    params.validate();
    const std::size_t n_max = state.n_max();
    FockVector out(n_max);
    if (k > n_max) return out;
    if (params.gamma == 1.0 && k > 0) return out;
    const double log_g = std::log(params.gamma);
    const double log_1mg = params.gamma < 1.0 ? std::log1p(-params.gamma) : 0.0;
    for (std::size_t n = k; n <= n_max; ++n) {
        const double f = std::exp(log_kraus_element(n, k, log_g, log_1mg));
        out.coeffs[static_cast<Eigen::Index>(n - k)] = f * state.coeffs[static_cast<Eigen::Index>(n)];
    }
    return out;
}

DensityMatrix channel_apply_exact(const DensityMatrix& rho, ChannelParams params) {
    params.validate();
    const cplx tr = rho.trace();
    if (std::abs(tr - 1.0) > 1e-10) throw std::invalid_argument("channel_apply_exact: trace(rho) must be 1");
    const auto dim = rho.entries.rows();
    const std::size_t n_max = rho.n_max();
    const Eigen::Index top = std::min<Eigen::Index>(5, dim);
    if (rho.entries.diagonal().tail(top).real().sum() >= 1e-12)
        throw TruncationError("channel_apply_exact: input population in top 5 Fock levels exceeds 1e-12");
    if (params.gamma == 1.0) return rho;
    const double log_g = std::log(params.gamma);
    const double log_1mg = std::log1p(-params.gamma);

    DensityMatrix out(n_max);
    double kept = 0.0;
    Eigen::VectorXd f(dim);
    for (std::size_t k = 0; k <= n_max; ++k) {
        const auto len = dim - static_cast<Eigen::Index>(k);
        for (Eigen::Index n = 0; n < len; ++n)
            f[n] = std::exp(log_kraus_element(static_cast<std::size_t>(n) + k, k, log_g, log_1mg));
        const auto kk = static_cast<Eigen::Index>(k);
        const auto fv = f.head(len);
        // (A_k rho A_k^dagger)[n][n'] = f[n] f[n'] rho[n+k][n'+k]
        out.entries.topLeftCorner(len, len).array() +=
            (fv * fv.transpose()).cast<cplx>().array() * rho.entries.block(kk, kk, len, len).array();
        for (Eigen::Index n = 0; n < len; ++n) kept += f[n] * f[n] * rho.entries(n + kk, n + kk).real();
        if (kept > 1.0 - 1e-12) break;
    }
    return out;
}

cplx kraus_prefactor(const CodeSpec& spec, unsigned k, std::size_t m, ChannelParams params) {
    spec.validate();
    params.validate();
    if (k >= spec.d) throw std::out_of_range("kraus_prefactor: logical index out of range");
    if (params.gamma == 1.0) return m == 0 ? cplx(1.0) : cplx(0.0);
    const unsigned mod = spec.modulus();
    const double x = spec.alpha * spec.alpha;
    const double y = params.gamma * x;
    const double log_n0 = x + log_poisson_class(x, mod, 0);
    const double log_nq = y + log_poisson_class(y, mod, -static_cast<long>(m % mod));
    const double mm = static_cast<double>(m);
    const double log_mag = mm * std::log(spec.alpha) + 0.5 * mm * std::log1p(-params.gamma) -
                           0.5 * log_factorial(m) + 0.5 * (log_nq - log_n0);
    return std::polar(std::exp(log_mag), mm * kTwoPi * k / spec.cycle());
}

std::vector<double> class_probabilities(const CodeSpec& spec, ChannelParams params) {
    spec.validate();
    params.validate();
    const unsigned mod = spec.modulus();
    const unsigned M = spec.cycle();
    const double a2 = spec.alpha * spec.alpha;
    const double y = params.gamma * a2;
    const double x = (1.0 - params.gamma) * a2;
    const double log_den = log_poisson_class(a2, mod, 0);
    // e^{-y} e^{-x} / e^{-a2} = 1, so the Poisson class form is exact.
    std::vector<double> p(M);
    for (unsigned i = 0; i < M; ++i) {
        const double lq = log_poisson_class(y, mod, -static_cast<long>(i % mod));
        const double li = log_poisson_class(x, M, i);
        p[i] = std::exp(lq + li - log_den);
    }
    return p;
}

std::vector<double> class_probabilities_l1(double alpha, double gamma) {
    const double a2 = alpha * alpha;
    const double y = gamma * a2;
    const double x = (1.0 - gamma) * a2;
    const double den = 2.0 * std::cosh(a2);
    return {
        std::cosh(y) * (std::cos(x) + std::cosh(x)) / den,
        std::sinh(y) * (std::sin(x) + std::sinh(x)) / den,
        std::cosh(y) * (std::cosh(x) - std::cos(x)) / den,
        std::sinh(y) * (std::sinh(x) - std::sin(x)) / den,
    };
}

LossClassWeights loss_class_weights(const CodeSpec& spec, const LogicalCoeffs& c, ChannelParams params) {
    spec.validate();
    params.validate();
    c.validate(spec.d);
    LossClassWeights out;
    out.p = class_probabilities(spec, params);
    const Eigen::VectorXcd cv = c.vector();
    const double den = codeword_form(spec, 0, cv, cv).real();
    const double damped = std::sqrt(params.gamma) * spec.alpha;
    out.ptilde.resize(spec.cycle());
    for (unsigned i = 0; i < spec.cycle(); ++i) {
        if (out.p[i] == 0.0) {
            out.ptilde[i] = 0.0;
            continue;
        }
        const Eigen::VectorXcd ci = branch_phases(spec, i).cwiseProduct(cv);
        const double num = codeword_form(spec, i % spec.modulus(), ci, ci, damped).real();
        out.ptilde[i] = out.p[i] * num / den;
    }
    return out;
}

std::vector<MixtureComponent> logical_mixture(const CodeSpec& spec, const LogicalCoeffs& c, ChannelParams params) {
    const LossClassWeights w = loss_class_weights(spec, c, params);
    const std::size_t nm = code_nmax(spec);
    const double damped = std::sqrt(params.gamma) * spec.alpha;
    const unsigned mod = spec.modulus();

    std::vector<std::vector<FockVector>> words(mod);
    for (unsigned q = 0; q < mod; ++q)
        for (unsigned k = 0; k < spec.d; ++k) words[q].push_back(codeword_fock(spec, {k, q}, damped, nm));

    std::vector<MixtureComponent> out;
    out.reserve(spec.cycle());
    for (unsigned i = 0; i < spec.cycle(); ++i) {
        MixtureComponent comp;
        comp.index = i;
        comp.space_q = i % mod;
        comp.cycle_j = i / mod;
        comp.phase_label = std::polar(1.0, kTwoPi * i / spec.cycle());
        comp.weight = w.ptilde[i];
        FockVector psi(nm);
        for (unsigned k = 0; k < spec.d; ++k)
            psi.coeffs += c.amplitudes[k] * std::polar(1.0, kTwoPi * k * i / spec.cycle()) * words[comp.space_q][k].coeffs;
        const double nrm = psi.norm();
        if (nrm > 0.0) psi.coeffs /= nrm;
        else comp.weight = 0.0;
        comp.state = std::move(psi);
        out.push_back(std::move(comp));
    }
    return out;
}

DensityMatrix mixture_density(const std::vector<MixtureComponent>& components) {
    std::vector<std::pair<double, FockVector>> terms;
    terms.reserve(components.size());
    for (const auto& c : components) terms.emplace_back(c.weight, c.state);
    return mix(terms);
}

}  // namespace catqec
