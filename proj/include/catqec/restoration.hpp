#pragma once

#include <array>

#include "catqec/cat_code.hpp"
#include "catqec/loss_channel.hpp"

namespace catqec {

// Bloch decomposition of two unit vectors with overlap s:
//   |0> = b0|e0> + b1|e1>,  |1> = e^{i phi} (b0|e0> - b1|e1>).
struct FilterParams {
    double b0 = 0.0;
    double b1 = 0.0;
    double phi = 0.0;
    cplx s;
};

// Throws std::domain_error for |s| >= 1.
FilterParams filter_params(cplx s);

// In the {e0, e1} basis: A_s = diag(b1/b0, 1), A_f = diag(sqrt(1 - (b1/b0)^2), 0).
struct FilterOperators {
    Eigen::Matrix2cd success;
    Eigen::Matrix2cd failure;
};
FilterOperators filter_operators(const FilterParams& fp);
// max |A_s^dagger A_s + A_f^dagger A_f - 1|
double povm_completeness_error(const FilterOperators& ops);

// 1 - |s|
double filter_success(cplx s);

struct BellNorms {
    double N_phi_plus = 0.0;   // 1 + Re(s~^2)
    double N_phi_minus = 0.0;  // 1 - Re(s~^2)
    double N_psi_plus = 0.0;   // 1 + |s~|^2
    double N_psi_minus = 0.0;  // 1 - |s~|^2
    double N_phi_hat = 0.0;    // 1 + Re(s~ s-)
    double N_omega = 0.0;      // 1 + 2 Re(c0* c1 s~)
    std::array<double, 4> N_chi{};  // output qubits c0|0>+c1|1>, c0|0>-c1|1>, c1|0>+c0|1>, -c1|0>+c0|1>
};

// s_tilde: overlap in the damped error space, s_bar: overlap in the undamped code space.
BellNorms bell_norms(cplx s_tilde, cplx s_bar, const LogicalCoeffs& c);

// Squared norm of the doubly filtered input (x) asymmetric Bell state:
// (1 - |s~|)^2 / (4 N_omega N_phi_hat) * sum_i N_chi_i.
double teleport_success_from_overlaps(cplx s_tilde, cplx s_bar, const LogicalCoeffs& c);

// Variant that also weights each output norm N_chi_i by the matching Bell-state norm.
// Kept for comparison only; it disagrees with the explicit filtered-state norm.
double teleport_success_weighted(cplx s_tilde, cplx s_bar, const LogicalCoeffs& c);

// Input qubit c in error space q at amplitude sqrt(gamma) alpha, output in the code space at alpha.
double teleport_success(const CodeSpec& spec, unsigned q, ChannelParams params, const LogicalCoeffs& c);

// Coefficients of mixture branch i: (c0, e^{2 pi i i/(2(L+1))} c1).
LogicalCoeffs branch_coeffs(const CodeSpec& spec, const LogicalCoeffs& c, unsigned i);

// sum_i ptilde_i * teleport_success(branch i) for one restoration after transmission gamma_segment.
double ow_step_factor(const CodeSpec& spec, const LogicalCoeffs& c, double gamma_segment);

// ow_step_factor ^ n_restorations.
double ow_success(const CodeSpec& spec, const LogicalCoeffs& c, double gamma_segment, unsigned long n_restorations);

}  // namespace catqec
