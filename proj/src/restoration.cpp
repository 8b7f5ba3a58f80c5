#include "catqec/restoration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catqec {

FilterParams filter_params(cplx s) {
    const double r = std::abs(s);
    if (!(r < 1.0)) throw std::domain_error("filter_params: |s| >= 1, codewords are collinear");
    FilterParams fp;
    fp.s = s;
    fp.b0 = std::sqrt(0.5 * (1.0 + r));
    fp.b1 = std::sqrt(0.5 * (1.0 - r));
    fp.phi = r > 0.0 ? std::arg(s) : 0.0;
    return fp;
}

FilterOperators filter_operators(const FilterParams& fp) {
    const double t = fp.b1 / fp.b0;
    FilterOperators ops;
    ops.success << t, 0.0, 0.0, 1.0;
    ops.failure << std::sqrt(std::max(0.0, 1.0 - t * t)), 0.0, 0.0, 0.0;
    return ops;
}

double povm_completeness_error(const FilterOperators& ops) {
    const Eigen::Matrix2cd sum =
        ops.success.adjoint() * ops.success + ops.failure.adjoint() * ops.failure - Eigen::Matrix2cd::Identity();
    return sum.cwiseAbs().maxCoeff();
}

double filter_success(cplx s) {
    const double r = std::abs(s);
    if (!(r < 1.0)) throw std::domain_error("filter_success: |s| >= 1, codewords are collinear");
    return 1.0 - r;
}

BellNorms bell_norms(cplx s_tilde, cplx s_bar, const LogicalCoeffs& c) {
    c.validate(2);
    BellNorms n;
    n.N_phi_plus = 1.0 + (s_tilde * s_tilde).real();
    n.N_phi_minus = 1.0 - (s_tilde * s_tilde).real();
    n.N_psi_plus = 1.0 + std::norm(s_tilde);
    n.N_psi_minus = 1.0 - std::norm(s_tilde);
    n.N_phi_hat = 1.0 + (s_tilde * s_bar).real();
    const cplx c0 = c.amplitudes[0];
    const cplx c1 = c.amplitudes[1];
    n.N_omega = 1.0 + 2.0 * (std::conj(c0) * c1 * s_tilde).real();

    Eigen::Matrix2cd g;
    g << 1.0, s_bar, std::conj(s_bar), 1.0;
    const std::array<Eigen::Vector2cd, 4> chi{
        Eigen::Vector2cd(c0, c1), Eigen::Vector2cd(c0, -c1),
        Eigen::Vector2cd(c1, c0), Eigen::Vector2cd(-c1, c0)};
    for (std::size_t i = 0; i < 4; ++i) n.N_chi[i] = chi[i].dot(g * chi[i]).real();
    return n;
}

double teleport_success_from_overlaps(cplx s_tilde, cplx s_bar, const LogicalCoeffs& c) {
    if (!(std::abs(s_tilde) < 1.0)) return 0.0;  // filter cannot succeed on collinear words
    const double f = filter_success(s_tilde);
    const BellNorms n = bell_norms(s_tilde, s_bar, c);
    const double chi = n.N_chi[0] + n.N_chi[1] + n.N_chi[2] + n.N_chi[3];
    return f * f / (4.0 * n.N_omega * n.N_phi_hat) * chi;
}

double teleport_success_weighted(cplx s_tilde, cplx s_bar, const LogicalCoeffs& c) {
    if (!(std::abs(s_tilde) < 1.0)) return 0.0;
    const double f = filter_success(s_tilde);
    const BellNorms n = bell_norms(s_tilde, s_bar, c);
    const double sum = n.N_chi[0] * n.N_phi_plus + n.N_chi[1] * n.N_phi_minus + n.N_chi[2] * n.N_psi_plus +
                       n.N_chi[3] * n.N_psi_minus;
    return f * f / (4.0 * n.N_omega * n.N_phi_hat) * sum;
}

double teleport_success(const CodeSpec& spec, unsigned q, ChannelParams params, const LogicalCoeffs& c) {
    if (spec.d != 2) throw std::invalid_argument("teleport_success: qubit codes only");
    params.validate();
    const cplx s_tilde = codeword_overlap(spec, q, 0, 1, std::sqrt(params.gamma) * spec.alpha);
    const cplx s_bar = codeword_overlap(spec, 0, 0, 1);
    return teleport_success_from_overlaps(s_tilde, s_bar, c);
}

LogicalCoeffs branch_coeffs(const CodeSpec& spec, const LogicalCoeffs& c, unsigned i) {
    c.validate(2);
    return LogicalCoeffs::qubit(c.amplitudes[0],
                                std::polar(1.0, 2.0 * std::numbers::pi * i / spec.cycle()) * c.amplitudes[1]);
}

double ow_step_factor(const CodeSpec& spec, const LogicalCoeffs& c, double gamma_segment) {
    if (spec.d != 2) throw std::invalid_argument("ow_step_factor: qubit codes only");
    const ChannelParams params{gamma_segment};
    const auto w = loss_class_weights(spec, c, params);
    const double damped = std::sqrt(gamma_segment) * spec.alpha;
    const cplx s_bar = codeword_overlap(spec, 0, 0, 1);
    std::vector<cplx> s_tilde(spec.modulus());
    for (unsigned q = 0; q < spec.modulus(); ++q) s_tilde[q] = codeword_overlap(spec, q, 0, 1, damped);
    double acc = 0.0;
    for (unsigned i = 0; i < spec.cycle(); ++i) {
        if (w.ptilde[i] == 0.0) continue;
        acc += w.ptilde[i] *
               teleport_success_from_overlaps(s_tilde[i % spec.modulus()], s_bar, branch_coeffs(spec, c, i));
    }
    return acc;
}

double ow_success(const CodeSpec& spec, const LogicalCoeffs& c, double gamma_segment, unsigned long n_restorations) {
    if (n_restorations == 0) throw std::invalid_argument("ow_success: n_restorations must be positive");
    return std::pow(ow_step_factor(spec, c, gamma_segment), static_cast<double>(n_restorations));
}

}  // namespace catqec
