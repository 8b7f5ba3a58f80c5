#include "catqec/qec_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catqec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

FockVector apply_error(const FockVector& v, unsigned k, const KLOptions& opts) {
    if (opts.model == ErrorModel::Annihilation) return annihilate(v, k);
    return kraus_apply(v, ChannelParams{opts.gamma}, k);
}

}  // namespace

std::vector<FockVector> basis_codewords(const CodeSpec& spec, Basis basis) {
    spec.validate();
    const std::size_t nm = code_nmax(spec);
    std::vector<FockVector> z;
    for (unsigned k = 0; k < spec.d; ++k) z.push_back(codeword_fock(spec, {k, 0}, std::nullopt, nm));
    if (basis == Basis::Z) return z;
    if (spec.d != 2) throw std::invalid_argument("X basis is defined for qubit codes only");
    std::vector<FockVector> x;
    for (int sign : {+1, -1}) {
        FockVector v(Eigen::VectorXcd(z[0].coeffs + static_cast<double>(sign) * z[1].coeffs));
        v.coeffs /= std::sqrt(x_basis_norm(spec, sign));
        x.push_back(std::move(v));
    }
    return x;
}

double x_basis_norm(const CodeSpec& spec, int sign) {
    const cplx s = codeword_overlap(spec, 0, 0, 1);
    return 2.0 * (1.0 + sign * s.real());
}

KLReport kl_check(const CodeSpec& spec, Basis basis, unsigned error_i, unsigned error_j, KLOptions opts) {
    if (opts.model == ErrorModel::Kraus) ChannelParams{opts.gamma}.validate();
    const auto words = basis_codewords(spec, basis);
    const auto n = static_cast<Eigen::Index>(words.size());
    std::vector<FockVector> ei, ej;
    for (const auto& w : words) {
        ei.push_back(apply_error(w, error_i, opts));
        ej.push_back(apply_error(w, error_j, opts));
    }
    KLReport rep;
    rep.error_i = error_i;
    rep.error_j = error_j;
    rep.gram.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) rep.gram(k, l) = inner(ei[k], ej[l]);

    double max_diag = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) max_diag = std::max(max_diag, std::abs(rep.gram(k, k)));
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            if (k == l) continue;
            rep.ortho_violation = std::max(rep.ortho_violation, std::abs(rep.gram(k, l)));
            if (max_diag > 0.0)
                rep.deform_violation =
                    std::max(rep.deform_violation, std::abs(rep.gram(k, k) - rep.gram(l, l)) / max_diag);
        }
    }
    return rep;
}

double x_basis_diagonal_l1(double alpha, unsigned j, int sign) {
    if (j % 2 == 0) throw std::invalid_argument("x_basis_diagonal_l1: odd loss count expected");
    const double x = alpha * alpha;
    const double s0 = overlap_l1(0, alpha).real();
    const double s1 = overlap_l1(1, alpha).imag();
    // a^2 flips the sign of the k=1 word, so j = 3 mod 4 swaps the two diagonals.
    const int eff = (j % 4 == 1) ? sign : -sign;
    const double n_prime = 2.0 * (1.0 + sign * s0);
    return std::pow(x, static_cast<double>(j)) * std::tanh(x) * 2.0 * (1.0 - eff * s1) / n_prime;
}

double x_basis_ratio_l1(double alpha) {
    const double s1 = overlap_l1(1, alpha).imag();
    return (1.0 - s1) / (1.0 + s1);
}

SyndromeProjection parity_project(const std::vector<MixtureComponent>& mixture, unsigned q) {
    if (mixture.empty()) throw std::invalid_argument("parity_project: empty mixture");
    SyndromeProjection out;
    out.rho = DensityMatrix(mixture.front().state.n_max());
    for (const auto& c : mixture) {
        if (c.space_q != q || c.weight == 0.0) continue;
        out.probability += c.weight;
        out.rho.entries.noalias() += c.weight * (c.state.coeffs * c.state.coeffs.adjoint());
    }
    if (out.probability <= 0.0) {
        out.empty = true;
        out.probability = 0.0;
        out.rho.entries.setZero();
        return out;
    }
    out.rho.entries /= out.probability;
    return out;
}

double fidelity_state(const CodeSpec& spec, const LogicalCoeffs& c, ChannelParams params) {
    const auto w = loss_class_weights(spec, c, params);
    double f = 0.0;
    for (unsigned i = 0; i <= spec.L; ++i) f += w.ptilde[i];
    return f;
}

FidelityResult fidelity_bound(const CodeSpec& spec, ChannelParams params) {
    if (spec.d != 2) throw std::invalid_argument("fidelity_bound: qubit codes only");
    const double h = 1.0 / std::sqrt(2.0);
    const auto plus = LogicalCoeffs::qubit(h, h);
    const auto minus = LogicalCoeffs::qubit(h, -h);
    FidelityResult r;
    r.F_plus = fidelity_state(spec, plus, params);
    r.F_minus = fidelity_state(spec, minus, params);
    r.F_of_ab = r.F_plus;
    r.F_bound = std::min(r.F_plus, r.F_minus);
    r.minimizing_coeffs = r.F_plus <= r.F_minus ? plus : minus;
    return r;
}

PhaseGridResult fidelity_phase_grid(const CodeSpec& spec, ChannelParams params, unsigned phases,
                                    unsigned amplitudes) {
    if (spec.d != 2) throw std::invalid_argument("fidelity_phase_grid: qubit codes only");
    if (phases == 0 || amplitudes < 2) throw std::invalid_argument("fidelity_phase_grid: grid too small");
    PhaseGridResult best;
    best.F_min = 2.0;
    for (unsigned ia = 0; ia < amplitudes; ++ia) {
        const double t = 0.5 * std::numbers::pi * ia / (amplitudes - 1);
        for (unsigned ip = 0; ip < phases; ++ip) {
            const double phi = kTwoPi * ip / phases;
            const auto c = LogicalCoeffs::qubit(std::cos(t), std::polar(std::sin(t), phi));
            const double f = fidelity_state(spec, c, params);
            if (f < best.F_min) {
                best.F_min = f;
                best.argmin = c;
            }
        }
    }
    return best;
}

double recovered_fidelity(const CodeSpec& spec, const LogicalCoeffs& c, ChannelParams params) {
    const auto w = loss_class_weights(spec, c, params);
    const Eigen::VectorXcd cv = c.vector();
    const double nref = codeword_form(spec, 0, cv, cv).real();
    double f = 0.0;
    for (unsigned i = 0; i < spec.cycle(); ++i) {
        if (w.ptilde[i] == 0.0) continue;
        const unsigned j = i / spec.modulus();
        // residual phase after undoing the q-branch gate: e^{2 pi i k j / d}
        Eigen::VectorXcd ci(spec.d);
        for (unsigned k = 0; k < spec.d; ++k) ci[k] = cv[k] * std::polar(1.0, kTwoPi * k * j / spec.d);
        const double nres = codeword_form(spec, 0, ci, ci).real();
        const cplx ov = codeword_form(spec, 0, cv, ci);
        f += w.ptilde[i] * std::norm(ov) / (nref * nres);
    }
    return f;
}

}  // namespace catqec
