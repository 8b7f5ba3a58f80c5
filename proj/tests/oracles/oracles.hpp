#pragma once
// Brute-force reference implementations for tests. Nothing here calls the
// library's series, codeword or channel code; states are built by plain
// recursion and operators as dense matrices.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |beta> by c_n = c_{n-1} beta / sqrt(n), c_0 = exp(-|beta|^2/2).
inline Vec coherent(cplx beta, int n_max) {
    Vec v(n_max + 1);
    v[0] = std::exp(-0.5 * std::norm(beta));
    for (int n = 1; n <= n_max; ++n) v[n] = v[n - 1] * beta / std::sqrt(static_cast<double>(n));
    return v;
}

// <a|b> summed term by term: sum_n (a* b)^n / n! times the Gaussian prefactor.
inline cplx coherent_overlap_series(cplx a, cplx b, int terms = 400) {
    cplx term = 1.0, acc = 1.0;
    const cplx z = std::conj(a) * b;
    for (int n = 1; n < terms; ++n) {
        term *= z / static_cast<double>(n);
        acc += term;
    }
    return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b)) * acc;
}

inline Mat annihilation(int n_max) {
    Mat a = Mat::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

// A_k = sqrt((1-g)^k / k!) g^{n/2} a^k as dense matrices, k = 0..n_max.
inline std::vector<Mat> kraus_all(int n_max, double gamma) {
    const Mat a = annihilation(n_max);
    Eigen::VectorXd damp(n_max + 1);
    for (int n = 0; n <= n_max; ++n) damp[n] = std::pow(gamma, 0.5 * n);
    std::vector<Mat> out;
    Mat ak = Mat::Identity(n_max + 1, n_max + 1);
    double pref = 1.0;
    for (int k = 0; k <= n_max; ++k) {
        if (k > 0) {
            ak = a * ak;
            pref *= (1.0 - gamma) / k;
        }
        out.push_back(std::sqrt(pref) * damp.asDiagonal() * ak);
    }
    return out;
}

inline Mat kraus(int n_max, double gamma, int k) { return kraus_all(n_max, gamma)[k]; }

inline Mat channel(const Mat& rho, double gamma) {
    const int n_max = static_cast<int>(rho.rows()) - 1;
    Mat out = Mat::Zero(rho.rows(), rho.cols());
    for (const Mat& A : kraus_all(n_max, gamma)) out += A * rho * A.adjoint();
    return out;
}

// sum_j e^{2 pi i q j/(L+1)} |A e^{2 pi i k/(d(L+1))} e^{2 pi i j/(L+1)}>, unit norm.
inline Vec codeword(int L, int d, int k, int q, double A, int n_max) {
    const int m = L + 1;
    Vec v = Vec::Zero(n_max + 1);
    for (int j = 0; j < m; ++j) {
        const cplx beta = A * std::polar(1.0, kTwoPi * k / (d * m) + kTwoPi * j / m);
        v += std::polar(1.0, kTwoPi * q * j / m) * coherent(beta, n_max);
    }
    return v / v.norm();
}

inline Vec encoded(int L, int d, const std::vector<cplx>& c, double A, int n_max) {
    Vec v = Vec::Zero(n_max + 1);
    for (int k = 0; k < d; ++k) v += c[k] * codeword(L, d, k, 0, A, n_max);
    return v / v.norm();
}

// P(number of lost photons = i mod M) for a normalized input, from Kraus norms.
inline std::vector<double> loss_classes(const Vec& psi, double gamma, int M) {
    const int n_max = static_cast<int>(psi.size()) - 1;
    std::vector<double> p(M, 0.0);
    const auto ops = kraus_all(n_max, gamma);
    for (int k = 0; k <= n_max; ++k) p[k % M] += (ops[k] * psi).squaredNorm();
    return p;
}

inline double trace_distance(const Mat& a, const Mat& b) {
    const Mat d = a - b;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Squared norm of (F (x) F (x) 1) |omega>|phi_hat+>, F the unambiguous filter on
// span{w0~, w1~}. Input omega = c0 w0~ + c1 w1~ (damped words, space q);
// phi_hat+ = w0~ (x) w0 + w1~ (x) w1 with code-space words at alpha.
inline double filtered_teleport_norm(int L, int q, double alpha, double gamma, cplx c0, cplx c1, int n_max) {
    const double damped = std::sqrt(gamma) * alpha;
    const Vec t0 = codeword(L, 2, 0, q, damped, n_max);
    const Vec t1 = codeword(L, 2, 1, q, damped, n_max);
    const Vec u0 = codeword(L, 2, 0, 0, alpha, n_max);
    const Vec u1 = codeword(L, 2, 1, 0, alpha, n_max);

    const cplx s = t0.dot(t1);
    const double r = std::abs(s);
    const double phi = r > 0 ? std::arg(s) : 0.0;
    const double b0 = std::sqrt(0.5 * (1 + r));
    const double b1 = std::sqrt(0.5 * (1 - r));
    const Vec e0 = (t0 + std::polar(1.0, -phi) * t1) / (2 * b0);
    const Vec e1 = (t0 - std::polar(1.0, -phi) * t1) / (2 * b1);
    const Mat F = (b1 / b0) * (e0 * e0.adjoint()) + e1 * e1.adjoint();

    Vec omega = c0 * t0 + c1 * t1;
    omega /= omega.norm();
    const double in_norm = (F * omega).squaredNorm();

    // Bell pair: sum_{y,y'} <x_y|x_y'> <u_y|u_y'> with x = t (unfiltered) or F t (filtered).
    const Vec ft[2] = {F * t0, F * t1};
    const Vec tt[2] = {t0, t1};
    const Vec uu[2] = {u0, u1};
    cplx bell = 0.0, bell_f = 0.0;
    for (int y = 0; y < 2; ++y)
        for (int yp = 0; yp < 2; ++yp) {
            bell += tt[y].dot(tt[yp]) * uu[y].dot(uu[yp]);
            bell_f += ft[y].dot(ft[yp]) * uu[y].dot(uu[yp]);
        }
    return in_norm * bell_f.real() / bell.real();
}

}  // namespace oracle
