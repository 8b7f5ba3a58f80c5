#include <algorithm>
#include <cmath>
#include <numeric>

#include "catqec/loss_channel.hpp"
#include "catqec/qec_analysis.hpp"
#include "catqec/restoration.hpp"
#include "cli.hpp"
#include "oracles.hpp"

namespace catqec::cli {

namespace {

VerifyCheck check(std::string name, double value, double tol) { return {std::move(name), value, tol, value < tol}; }

}  // namespace

std::vector<VerifyCheck> run_verify() {
    std::vector<VerifyCheck> out;

    {
        double worst = 0.0;
        for (unsigned L : {0u, 1u, 2u, 3u})
            for (unsigned d : {2u, 3u})
                for (unsigned q = 0; q <= L; ++q) {
                    const CodeSpec spec{L, d, 2.5};
                    const auto n = static_cast<int>(code_nmax(spec));
                    for (unsigned k = 0; k < d; ++k) {
                        const auto ref = oracle::codeword(L, d, k, q, 2.5, n);
                        worst = std::max(worst, (codeword_fock(spec, {k, q}).coeffs - ref).cwiseAbs().maxCoeff());
                    }
                }
        out.push_back(check("codewords vs coherent sums", worst, 1e-10));
    }
    {
        double worst = 0.0;
        for (double a : {0.5, 2.0, 3.0, 6.0}) {
            const auto n = static_cast<int>(code_nmax(CodeSpec{2, 2, a}));
            for (unsigned q = 0; q < 2; ++q) {
                const cplx ref = oracle::codeword(1, 2, 0, q, a, n).dot(oracle::codeword(1, 2, 1, q, a, n));
                worst = std::max(worst, std::abs(overlap_l1(q, a) - ref));
            }
            const cplx ref2 = oracle::codeword(2, 2, 0, 0, a, n).dot(oracle::codeword(2, 2, 1, 0, a, n));
            worst = std::max(worst, std::abs(overlap_l2_code(a) - ref2));
        }
        out.push_back(check("closed-form overlaps", worst, 1e-10));
    }
    {
        double worst = 0.0;
        for (unsigned L : {1u, 2u})
            for (double g : {0.6, 0.9}) {
                const CodeSpec spec{L, 2, 2.0};
                const auto n = static_cast<int>(code_nmax(spec));
                const auto p = class_probabilities(spec, ChannelParams{g});
                const auto ref = oracle::loss_classes(oracle::codeword(L, 2, 1, 0, 2.0, n), g, spec.cycle());
                for (unsigned i = 0; i < spec.cycle(); ++i) worst = std::max(worst, std::abs(p[i] - ref[i]));
            }
        out.push_back(check("loss-class probabilities vs Kraus norms", worst, 1e-10));
    }
    {
        const CodeSpec spec{1, 2, 2.0};
        const auto c = LogicalCoeffs::normalized({1.0, cplx(0.5, 0.5)});
        const auto psi = encode(spec, c);
        const auto rho = outer(psi, psi);
        const auto exact = oracle::channel(rho.entries, 0.8);
        const auto mixed = mixture_density(logical_mixture(spec, c, ChannelParams{0.8}));
        out.push_back(check("channel output vs closed-form mixture", oracle::trace_distance(exact, mixed.entries), 1e-8));
        out.push_back(check("fast channel vs dense Kraus sum",
                            (channel_apply_exact(rho, ChannelParams{0.8}).entries - exact).cwiseAbs().maxCoeff(), 1e-12));
    }
    {
        double worst = 0.0;
        for (unsigned L = 0; L <= 4; ++L)
            for (double g : {0.1, 0.5, 0.95}) {
                const auto w = loss_class_weights(CodeSpec{L, 2, 3.0}, LogicalCoeffs::normalized({1.0, -1.0}), ChannelParams{g});
                worst = std::max(worst, std::abs(std::accumulate(w.ptilde.begin(), w.ptilde.end(), 0.0) - 1.0));
            }
        out.push_back(check("mixture weights sum to one", worst, 1e-10));
    }
    {
        double worst = 0.0;
        for (unsigned k = 0; k <= 12; ++k) {
            const auto r = kl_check(CodeSpec{2, 2, 3.0}, Basis::Z, k, k, KLOptions{ErrorModel::Kraus, 0.8});
            worst = std::max(worst, std::abs(r.gram(0, 0) - r.gram(1, 1)));
        }
        out.push_back(check("Z-basis non-deformation", worst, 1e-12));
    }
    {
        double worst = 0.0;
        const double h = 1.0 / std::sqrt(2.0);
        for (unsigned q = 0; q < 3; ++q) {
            const CodeSpec spec{2, 2, 1.5};
            const auto c = LogicalCoeffs::qubit(h, cplx(0.0, h));
            const double got = teleport_success(spec, q, ChannelParams{0.9}, c);
            const double ref = oracle::filtered_teleport_norm(2, q, 1.5, 0.9, h, cplx(0.0, h), static_cast<int>(code_nmax(spec)));
            worst = std::max(worst, std::abs(got - ref));
        }
        out.push_back(check("teleportation success vs filtered norm", worst, 1e-9));
    }
    return out;
}

}  // namespace catqec::cli
