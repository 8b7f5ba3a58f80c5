#pragma once

#include <optional>
#include <vector>

#include "catqec/fock.hpp"

namespace catqec {

// (L, d, alpha): corrects up to L losses, encodes a d-level system on d(L+1)
// coherent components of amplitude alpha.
struct CodeSpec {
    unsigned L = 1;
    unsigned d = 2;
    double alpha = 2.0;

    unsigned cycle() const { return d * (L + 1); }  // number of mixture components
    unsigned modulus() const { return L + 1; }
    // Codewords become nearly collinear below this amplitude.
    bool small_amplitude() const { return alpha < 0.1; }
    void validate() const;
    CodeSpec with_alpha(double a) const { return CodeSpec{L, d, a}; }
};

struct CodewordId {
    unsigned k = 0;  // logical index
    unsigned q = 0;  // error space, 0 = code space
};

struct LogicalCoeffs {
    std::vector<cplx> amplitudes;

    static LogicalCoeffs qubit(cplx a, cplx b) { return LogicalCoeffs{{a, b}}; }
    // Rescales to unit norm; throws on the zero vector.
    static LogicalCoeffs normalized(std::vector<cplx> amps);
    std::size_t size() const { return amplitudes.size(); }
    Eigen::VectorXcd vector() const;
    void validate(unsigned d) const;
};

// Phase of the k-th logical sector: beta_k = alpha * sector_phase(spec, k).
cplx sector_phase(const CodeSpec& spec, unsigned k);

// Eigenvalue of exp(2 pi i n/(L+1)) on error space q. The support is n = -q
// mod (L+1), so the eigenvalue is exp(-2 pi i q/(L+1)).
cplx parity_eigenvalue(unsigned L, unsigned q);

// Fock dimension used for a code and any damped version of it.
std::size_t code_nmax(const CodeSpec& spec);

// sum_j e^{2 pi i q j/(L+1)} |beta_k e^{2 pi i j/(L+1)}>, scaled to unit norm by a positive constant.
FockVector codeword_coherent(const CodeSpec& spec, CodewordId id,
                             std::optional<double> amplitude = std::nullopt,
                             std::optional<std::size_t> n_max = std::nullopt);

// Same vector from its Fock series: beta_k^n / sqrt(n!) on n = -q mod (L+1).
FockVector codeword_fock(const CodeSpec& spec, CodewordId id,
                         std::optional<double> amplitude = std::nullopt,
                         std::optional<std::size_t> n_max = std::nullopt);

// d x d matrix <w_{k,q}|w_{l,q}> of normalized codewords.
Eigen::MatrixXcd codeword_gram(const CodeSpec& spec, unsigned q,
                               std::optional<double> amplitude = std::nullopt);

// u^dagger G_q v for the Gram matrix G_q, summed over Fock classes n mod d(L+1).
// u = v gives a sum of nonnegative terms, accurate even when sum_k u_k w_k nearly cancels.
cplx codeword_form(const CodeSpec& spec, unsigned q, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                   std::optional<double> amplitude = std::nullopt);

// <w_{k1,q}|w_{k2,q}>; closed forms for L=1 (both spaces) and the L=2 code space.
cplx codeword_overlap(const CodeSpec& spec, unsigned q, unsigned k1, unsigned k2,
                      std::optional<double> amplitude = std::nullopt);

// L=1 qubit: q=0 gives cos(a^2)/cosh(a^2), q=1 gives i sin(a^2)/sinh(a^2).
cplx overlap_l1(unsigned q, double alpha);
// L=2 qubit code space.
double overlap_l2_code(double alpha);

struct CodeResidual {
    double parity = 0.0;        // |(exp(2 pi i n/(L+1)) - lambda_q) w|
    double annihilation = 0.0;  // |(a^{L+1} - beta_k^{L+1}) w| / alpha^{L+1}
};
CodeResidual verify_code_equations(const CodeSpec& spec, CodewordId id);

// Normalized encoded state proportional to sum_k c_k w_{k,0}.
FockVector encode(const CodeSpec& spec, const LogicalCoeffs& c,
                  std::optional<std::size_t> n_max = std::nullopt);

}  // namespace catqec
