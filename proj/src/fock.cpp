#include "catqec/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace catqec {

namespace {

void require_same_dim(const FockVector& u, const FockVector& v) {
    if (u.coeffs.size() != v.coeffs.size())
        throw std::invalid_argument("Fock dimension mismatch: " + std::to_string(u.coeffs.size()) +
                                    " vs " + std::to_string(v.coeffs.size()));
}

}  // namespace

std::size_t truncation_nmax(double amplitude) {
    const double a = std::abs(amplitude);
    const auto n = static_cast<std::size_t>(std::ceil(a * a + 8.0 * a + 25.0));
    return std::max<std::size_t>(n, 64);
}

double log_factorial(std::size_t n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(4096);
        t[0] = 0.0;
        for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] + std::log(static_cast<double>(k));
        return t;
    }();
    if (n < table.size()) return table[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double tail_mass(const FockVector& v) {
    const auto dim = v.coeffs.size();
    const auto top = std::min<Eigen::Index>(5, dim);
    return v.coeffs.tail(top).squaredNorm();
}

void check_truncation(const FockVector& v, const std::string& what) {
    const double total = v.coeffs.squaredNorm();
    const double tail = tail_mass(v);
    if (total > 0.0 && tail >= 1e-12 * total) {
        std::ostringstream os;
        os << what << ": tail mass " << tail << " of " << total << " in top 5 of n_max=" << v.n_max()
           << " exceeds 1e-12";
        throw TruncationError(os.str());
    }
}

FockVector coherent_state(cplx alpha, std::size_t n_max) {
    FockVector out(n_max);
    const double r = std::abs(alpha);
    if (r == 0.0) {
        out.coeffs[0] = 1.0;
        return out;
    }
    const double theta = std::arg(alpha);
    const double log_r = std::log(r);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double nn = static_cast<double>(n);
        const double log_mag = -0.5 * r * r + nn * log_r - 0.5 * log_factorial(n);
        out.coeffs[static_cast<Eigen::Index>(n)] = std::polar(std::exp(log_mag), nn * theta);
    }
    check_truncation(out, "coherent_state");
    return out;
}

FockVector annihilate(const FockVector& state, std::size_t k) {
    const std::size_t n_max = state.n_max();
    FockVector out(n_max);
    if (k > n_max) return out;
    for (std::size_t n = 0; n + k <= n_max; ++n) {
        const double f = std::exp(0.5 * (log_factorial(n + k) - log_factorial(n)));
        out.coeffs[static_cast<Eigen::Index>(n)] = f * state.coeffs[static_cast<Eigen::Index>(n + k)];
    }
    return out;
}

FockVector parity_phase_apply(const FockVector& state, unsigned modulus) {
    if (modulus == 0) throw std::invalid_argument("parity_phase_apply: modulus must be positive");
    FockVector out = state;
    for (Eigen::Index n = 0; n < out.coeffs.size(); ++n) {
        const auto r = static_cast<double>(static_cast<unsigned long>(n) % modulus);
        out.coeffs[n] *= std::polar(1.0, 2.0 * std::numbers::pi * r / modulus);
    }
    return out;
}

FockVector normalize(const FockVector& v) {
    const double nrm = v.norm();
    if (nrm == 0.0) throw std::invalid_argument("normalize: zero vector");
    FockVector out(Eigen::VectorXcd(v.coeffs / nrm));
    for (Eigen::Index n = 0; n < out.coeffs.size(); ++n) {
        if (std::abs(out.coeffs[n]) > 0.0) {
            const cplx ph = std::conj(out.coeffs[n]) / std::abs(out.coeffs[n]);
            out.coeffs *= ph;
            out.coeffs[n] = std::abs(out.coeffs[n]);
            break;
        }
    }
    return out;
}

cplx inner(const FockVector& u, const FockVector& v) {
    require_same_dim(u, v);
    return u.coeffs.dot(v.coeffs);  // Eigen conjugates the left operand
}

DensityMatrix outer(const FockVector& u, const FockVector& v) {
    require_same_dim(u, v);
    return DensityMatrix(Eigen::MatrixXcd(u.coeffs * v.coeffs.adjoint()));
}

DensityMatrix mix(const std::vector<std::pair<double, FockVector>>& components) {
    if (components.empty()) throw std::invalid_argument("mix: no components");
    DensityMatrix rho(components.front().second.n_max());
    for (const auto& [w, psi] : components) {
        require_same_dim(components.front().second, psi);
        if (w == 0.0) continue;
        const double nrm = psi.norm();
        if (nrm == 0.0) throw std::invalid_argument("mix: zero state with nonzero weight");
        const Eigen::VectorXcd u = psi.coeffs / nrm;
        rho.entries.noalias() += w * (u * u.adjoint());
    }
    return rho;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.entries.rows() != b.entries.rows())
        throw std::invalid_argument("trace_distance: dimension mismatch");
    const Eigen::MatrixXcd diff = a.entries - b.entries;
    const Eigen::MatrixXcd herm = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double min_eigenvalue(const DensityMatrix& rho) {
    const Eigen::MatrixXcd herm = 0.5 * (rho.entries + rho.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double hermiticity_error(const DensityMatrix& rho) {
    return (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace catqec
