#pragma once

#include <vector>

#include "catqec/cat_code.hpp"
#include "catqec/loss_channel.hpp"

namespace catqec {

enum class Basis { Z, X };

// Error operators used for the Knill-Laflamme matrix.
enum class ErrorModel {
    Annihilation,  // E_k = a^k
    Kraus,         // E_k = A_k at a given gamma
};

struct KLReport {
    unsigned error_i = 0;
    unsigned error_j = 0;
    Eigen::MatrixXcd gram;          // <c_k| E_i^dagger E_j |c_l>
    double ortho_violation = 0.0;   // max |off-diagonal|
    double deform_violation = 0.0;  // max |g_kk - g_ll| / max |g_kk|
};

struct KLOptions {
    ErrorModel model = ErrorModel::Annihilation;
    double gamma = 1.0;  // Kraus model only
};

// Codewords of the chosen basis. X = (w0 +/- w1)/sqrt(N'_+/-), d=2 only.
std::vector<FockVector> basis_codewords(const CodeSpec& spec, Basis basis);

KLReport kl_check(const CodeSpec& spec, Basis basis, unsigned error_i, unsigned error_j,
                  KLOptions opts = {});

// N'_+/- = 2 (1 +/- Re s) for s = <w0|w1> in the code space.
double x_basis_norm(const CodeSpec& spec, int sign);

// L=1 X-basis diagonals <+-| (a^j)^dagger a^j |+-> for odd j = 4k+1 (closed form).
double x_basis_diagonal_l1(double alpha, unsigned j, int sign);
// Ratio (diag_+ N'_+) / (diag_- N'_-) = (1 - s)/(1 + s), s = sin(a^2)/sinh(a^2).
double x_basis_ratio_l1(double alpha);

struct SyndromeProjection {
    DensityMatrix rho;       // normalized conditional state (zero when empty)
    double probability = 0.0;
    bool empty = false;      // syndrome has zero probability; rho is left zero
};

SyndromeProjection parity_project(const std::vector<MixtureComponent>& mixture, unsigned q);

// Sum of the weights of the correctable components i = 0..L.
double fidelity_state(const CodeSpec& spec, const LogicalCoeffs& c, ChannelParams params);

struct FidelityResult {
    double F_plus = 0.0;   // a = b = 1/sqrt(2)
    double F_minus = 0.0;  // a = -b = 1/sqrt(2)
    double F_of_ab = 0.0;  // F at a = b
    double F_bound = 0.0;  // min(F_plus, F_minus)
    LogicalCoeffs minimizing_coeffs;
};

// Qubit bound over real coefficients; dF/da vanishes at a = 1/sqrt(2).
FidelityResult fidelity_bound(const CodeSpec& spec, ChannelParams params);

// Diagnostic minimum of fidelity_state over complex coefficients
// a = cos t, b = e^{i phi} sin t on a phases x amplitudes grid.
struct PhaseGridResult {
    double F_min = 1.0;
    LogicalCoeffs argmin;
};
PhaseGridResult fidelity_phase_grid(const CodeSpec& spec, ChannelParams params, unsigned phases = 16,
                                    unsigned amplitudes = 32);

// Trace-overlap fidelity after syndrome readout, phase-gate undo and restoration
// to the undamped code space, referenced to the undamped input.
double recovered_fidelity(const CodeSpec& spec, const LogicalCoeffs& c, ChannelParams params);

}  // namespace catqec
