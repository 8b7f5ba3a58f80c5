#pragma once

#include <vector>

#include "catqec/cat_code.hpp"
#include "catqec/fock.hpp"

namespace catqec {

// gamma is the transmission; each photon is lost with probability 1 - gamma.
struct ChannelParams {
    double gamma = 1.0;
    void validate() const;
};

struct MixtureComponent {
    double weight = 0.0;
    FockVector state;       // normalized, codewords at sqrt(gamma) alpha
    unsigned space_q = 0;   // i mod (L+1)
    unsigned cycle_j = 0;   // i / (L+1)
    cplx phase_label;       // e^{2 pi i i/(d(L+1))}, the phase gate on sector k=1
    unsigned index = 0;     // loss class i mod d(L+1)
};

struct LossClassWeights {
    std::vector<double> p;       // class probabilities of a single codeword
    std::vector<double> ptilde;  // mixture weights of the encoded logical state
};

// A_k |psi> with A_k = sqrt((1-gamma)^k / k!) sqrt(gamma)^n a^k; not normalized.
FockVector kraus_apply(const FockVector& state, ChannelParams params, std::size_t k);

// sum_k A_k rho A_k^dagger, truncated once the dropped weight is below 1e-12.
DensityMatrix channel_apply_exact(const DensityMatrix& rho, ChannelParams params);

// Coefficient of w~_{k,q} in A_m w_{k,0}, q = m mod (L+1):
// beta_k^m (1-gamma)^{m/2} / sqrt(m!) * sqrt(N~_q / N_0).
cplx kraus_prefactor(const CodeSpec& spec, unsigned k, std::size_t m, ChannelParams params);

// p_i = P(losses = i mod d(L+1)) for any single codeword, i = 0..d(L+1)-1.
std::vector<double> class_probabilities(const CodeSpec& spec, ChannelParams params);

// L=1, d=2 closed forms in terms of cos/cosh and sin/sinh.
std::vector<double> class_probabilities_l1(double alpha, double gamma);

LossClassWeights loss_class_weights(const CodeSpec& spec, const LogicalCoeffs& c, ChannelParams params);

// d(L+1) branches of the channel output of the encoded state sum_k c_k w_{k,0}.
std::vector<MixtureComponent> logical_mixture(const CodeSpec& spec, const LogicalCoeffs& c,
                                              ChannelParams params);

DensityMatrix mixture_density(const std::vector<MixtureComponent>& components);

}  // namespace catqec
