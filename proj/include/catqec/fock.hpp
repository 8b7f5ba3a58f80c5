#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace catqec {

using cplx = std::complex<double>;

// Thrown when a state does not fit its Fock truncation.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Truncated single-mode state; coeffs[n] is the amplitude of |n>, n = 0..n_max.
struct FockVector {
    Eigen::VectorXcd coeffs;

    FockVector() = default;
    explicit FockVector(std::size_t n_max) : coeffs(Eigen::VectorXcd::Zero(n_max + 1)) {}
    explicit FockVector(Eigen::VectorXcd c) : coeffs(std::move(c)) {}

    std::size_t n_max() const { return static_cast<std::size_t>(coeffs.size()) - 1; }
    double norm() const { return coeffs.norm(); }
};

struct DensityMatrix {
    Eigen::MatrixXcd entries;

    DensityMatrix() = default;
    explicit DensityMatrix(std::size_t n_max)
        : entries(Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1)) {}
    explicit DensityMatrix(Eigen::MatrixXcd m) : entries(std::move(m)) {}

    std::size_t n_max() const { return static_cast<std::size_t>(entries.rows()) - 1; }
    cplx trace() const { return entries.trace(); }
};

// n_max = max(ceil(|a|^2 + 8|a| + 25), 64).
std::size_t truncation_nmax(double amplitude);

// ln(n!); tabulated below 4096, lgamma above.
double log_factorial(std::size_t n);

// Sum of |c_n|^2 over the top five indices.
double tail_mass(const FockVector& v);
// Throws TruncationError when tail_mass(v) >= 1e-12 * |v|^2.
void check_truncation(const FockVector& v, const std::string& what);

FockVector coherent_state(cplx alpha, std::size_t n_max);
FockVector annihilate(const FockVector& state, std::size_t k);
FockVector parity_phase_apply(const FockVector& state, unsigned modulus);

// Rescales to unit norm and rotates the first nonzero coefficient onto the positive real axis.
FockVector normalize(const FockVector& v);

cplx inner(const FockVector& u, const FockVector& v);
DensityMatrix outer(const FockVector& u, const FockVector& v);
DensityMatrix mix(const std::vector<std::pair<double, FockVector>>& components);

// 0.5 * sum |eig(a - b)| for Hermitian a, b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const DensityMatrix& rho);
double hermiticity_error(const DensityMatrix& rho);

}  // namespace catqec
