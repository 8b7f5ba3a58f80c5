#include "catqec/cat_code.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "catqec/series.hpp"

namespace catqec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_id(const CodeSpec& spec, CodewordId id) {
    if (id.k >= spec.d || id.q > spec.L) {
        std::ostringstream os;
        os << "codeword id (k=" << id.k << ", q=" << id.q << ") out of range for L=" << spec.L
           << ", d=" << spec.d;
        throw std::out_of_range(os.str());
    }
}

double resolve_amplitude(const CodeSpec& spec, std::optional<double> amplitude) {
    const double a = amplitude.value_or(spec.alpha);
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("codeword amplitude must be positive");
    return a;
}

// <w_k|w_l> from the Fock-class series: sum over n = -q of p_n e^{i n delta} / sum p_n.
cplx class_series_overlap(double A, unsigned m, unsigned q, double delta) {
    const double x = A * A;
    const unsigned r = mod_class(-static_cast<long>(q), m);
    const double log_norm = log_poisson_class(x, m, r);
    const double lx = std::log(x);
    const double stop = x + 40.0 * std::sqrt(x) + 60.0;
    cplx acc = 0.0;
    for (std::size_t n = r;; n += m) {
        const double lt = -x + static_cast<double>(n) * lx - log_factorial(n) - log_norm;
        acc += std::polar(std::exp(lt), static_cast<double>(n) * delta);
        if (static_cast<double>(n) > stop && lt < -80.0) break;
    }
    return acc;
}

// Same overlap from the analytic Gram matrix of the coherent components.
cplx component_overlap(double A, unsigned m, unsigned q, double delta) {
    const double x = A * A;
    cplx acc = 0.0;
    for (unsigned j = 0; j < m; ++j) {
        for (unsigned jp = 0; jp < m; ++jp) {
            const double phase_w = kTwoPi * q * (static_cast<double>(jp) - static_cast<double>(j)) / m;
            const double dth = delta + kTwoPi * (static_cast<double>(jp) - static_cast<double>(j)) / m;
            // <A e^{i t1}|A e^{i t2}> = exp(x (e^{i(t2-t1)} - 1))
            const cplx e = std::exp(x * (std::polar(1.0, dth) - 1.0));
            acc += std::polar(1.0, phase_w) * e;
        }
    }
    const double norm = static_cast<double>(m) * m * poisson_class(x, m, -static_cast<long>(q));
    return acc / norm;
}

}  // namespace

void CodeSpec::validate() const {
    if (d < 2) throw std::invalid_argument("CodeSpec: d must be >= 2");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("CodeSpec: alpha must be positive");
}

LogicalCoeffs LogicalCoeffs::normalized(std::vector<cplx> amps) {
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    if (n2 == 0.0) throw std::invalid_argument("LogicalCoeffs: zero vector");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& a : amps) a *= s;
    return LogicalCoeffs{std::move(amps)};
}

Eigen::VectorXcd LogicalCoeffs::vector() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amplitudes.size()));
    for (std::size_t i = 0; i < amplitudes.size(); ++i) v[static_cast<Eigen::Index>(i)] = amplitudes[i];
    return v;
}

void LogicalCoeffs::validate(unsigned d) const {
    if (amplitudes.size() != d)
        throw std::invalid_argument("LogicalCoeffs: expected " + std::to_string(d) + " amplitudes");
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-9) throw std::invalid_argument("LogicalCoeffs: not normalized");
}

cplx sector_phase(const CodeSpec& spec, unsigned k) {
    return std::polar(1.0, kTwoPi * k / spec.cycle());
}

cplx parity_eigenvalue(unsigned L, unsigned q) {
    return std::polar(1.0, -kTwoPi * q / (L + 1));
}

std::size_t code_nmax(const CodeSpec& spec) { return truncation_nmax(spec.alpha); }

FockVector codeword_coherent(const CodeSpec& spec, CodewordId id, std::optional<double> amplitude,
                             std::optional<std::size_t> n_max) {
    spec.validate();
    check_id(spec, id);
    const double A = resolve_amplitude(spec, amplitude);
    const std::size_t nm = n_max.value_or(truncation_nmax(std::max(A, spec.alpha)));
    const unsigned m = spec.modulus();
    const cplx beta = A * sector_phase(spec, id.k);
    FockVector acc(nm);
    for (unsigned j = 0; j < m; ++j) {
        const cplx w = std::polar(1.0, kTwoPi * id.q * j / m);
        const cplx rot = std::polar(1.0, kTwoPi * j / m);
        acc.coeffs += w * coherent_state(beta * rot, nm).coeffs;
    }
    const double nrm = acc.norm();
    if (!(nrm > 0.0)) throw std::runtime_error("codeword_coherent: vanishing codeword");
    acc.coeffs /= nrm;
    return acc;
}

FockVector codeword_fock(const CodeSpec& spec, CodewordId id, std::optional<double> amplitude,
                         std::optional<std::size_t> n_max) {
    spec.validate();
    check_id(spec, id);
    const double A = resolve_amplitude(spec, amplitude);
    const std::size_t nm = n_max.value_or(truncation_nmax(std::max(A, spec.alpha)));
    const unsigned m = spec.modulus();
    const unsigned r = mod_class(-static_cast<long>(id.q), m);
    const double x = A * A;
    const double log_s = x + log_poisson_class(x, m, r);  // ln S_r^{(m)}(A^2)
    const double theta = kTwoPi * id.k / spec.cycle();
    const double log_a = std::log(A);
    FockVector out(nm);
    for (std::size_t n = r; n <= nm; n += m) {
        const double nn = static_cast<double>(n);
        const double log_mag = nn * log_a - 0.5 * log_factorial(n) - 0.5 * log_s;
        out.coeffs[static_cast<Eigen::Index>(n)] = std::polar(std::exp(log_mag), nn * theta);
    }
    check_truncation(out, "codeword_fock");
    return out;
}

Eigen::MatrixXcd codeword_gram(const CodeSpec& spec, unsigned q, std::optional<double> amplitude) {
    spec.validate();
    check_id(spec, CodewordId{0, q});
    const double A = resolve_amplitude(spec, amplitude);
    const unsigned m = spec.modulus();
    const bool use_components = poisson_class(A * A, m, -static_cast<long>(q)) > 1e-3;
    Eigen::MatrixXcd g(spec.d, spec.d);
    for (unsigned k = 0; k < spec.d; ++k) {
        g(k, k) = 1.0;
        for (unsigned l = k + 1; l < spec.d; ++l) {
            const double delta = kTwoPi * (static_cast<double>(l) - static_cast<double>(k)) / spec.cycle();
            const cplx v = use_components ? component_overlap(A, m, q, delta) : class_series_overlap(A, m, q, delta);
            g(k, l) = v;
            g(l, k) = std::conj(v);
        }
    }
    return g;
}

cplx codeword_form(const CodeSpec& spec, unsigned q, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                   std::optional<double> amplitude) {
    spec.validate();
    check_id(spec, CodewordId{0, q});
    if (u.size() != spec.d || v.size() != spec.d) throw std::invalid_argument("codeword_form: expected d coefficients");
    const double x = std::pow(resolve_amplitude(spec, amplitude), 2);
    const unsigned M = spec.cycle();
    const unsigned m = spec.modulus();
    const double log_norm = log_poisson_class(x, m, -static_cast<long>(q));
    cplx acc = 0.0;
    for (unsigned r = mod_class(-static_cast<long>(q), m); r < M; r += m) {
        cplx ur = 0.0, vr = 0.0;
        for (unsigned k = 0; k < spec.d; ++k) {
            const cplx ph = std::polar(1.0, kTwoPi * k * r / M);
            ur += u[k] * ph;
            vr += v[k] * ph;
        }
        acc += std::conj(ur) * vr * std::exp(log_poisson_class(x, M, r) - log_norm);
    }
    return acc;
}

cplx overlap_l1(unsigned q, double alpha) {
    const double x = alpha * alpha;
    const double e = std::exp(-x);
    if (q == 0) return 2.0 * std::cos(x) * e / (1.0 + e * e);
    return cplx(0.0, 2.0 * std::sin(x) * e / (1.0 - e * e));
}

double overlap_l2_code(double alpha) {
    const double x = alpha * alpha;
    const double c = std::cos(std::sqrt(3.0) * x / 2.0);
    // numerator and denominator divided by e^x
    return (std::exp(-2.0 * x) + 2.0 * std::exp(-0.5 * x) * c) / (1.0 + 2.0 * std::exp(-1.5 * x) * c);
}

cplx codeword_overlap(const CodeSpec& spec, unsigned q, unsigned k1, unsigned k2,
                      std::optional<double> amplitude) {
    spec.validate();
    check_id(spec, CodewordId{k1, q});
    check_id(spec, CodewordId{k2, q});
    const double A = resolve_amplitude(spec, amplitude);
    if (k1 == k2) return 1.0;
    if (spec.d == 2) {
        cplx s;
        bool closed = false;
        if (spec.L == 1 && A * A > 1e-4) {  // sin/sinh is 0/0 at A -> 0
            s = overlap_l1(q, A);
            closed = true;
        } else if (spec.L == 2 && q == 0) {
            s = overlap_l2_code(A);
            closed = true;
        }
        if (closed) return k1 == 0 ? s : std::conj(s);
    }
    return codeword_gram(spec, q, A)(k1, k2);
}

CodeResidual verify_code_equations(const CodeSpec& spec, CodewordId id) {
    const FockVector w = codeword_fock(spec, id);
    const unsigned m = spec.modulus();
    CodeResidual res;
    const FockVector pw = parity_phase_apply(w, m);
    res.parity = (pw.coeffs - parity_eigenvalue(spec.L, id.q) * w.coeffs).norm();
    const FockVector aw = annihilate(w, m);
    const cplx beta = spec.alpha * sector_phase(spec, id.k);
    const cplx ev = std::pow(beta, static_cast<int>(m));
    // a^{L+1} shifts support down by L+1; the top L+1 entries of a^{L+1} w have no source.
    Eigen::VectorXcd diff = aw.coeffs - ev * w.coeffs;
    diff.tail(static_cast<Eigen::Index>(m)).setZero();
    res.annihilation = diff.norm() / std::pow(spec.alpha, static_cast<double>(m));
    return res;
}

FockVector encode(const CodeSpec& spec, const LogicalCoeffs& c, std::optional<std::size_t> n_max) {
    spec.validate();
    c.validate(spec.d);
    const std::size_t nm = n_max.value_or(code_nmax(spec));
    FockVector psi(nm);
    for (unsigned k = 0; k < spec.d; ++k) psi.coeffs += c.amplitudes[k] * codeword_fock(spec, {k, 0}, std::nullopt, nm).coeffs;
    const double nrm = psi.norm();
    if (!(nrm > 0.0)) throw std::runtime_error("encode: logical state has zero norm");
    psi.coeffs /= nrm;
    return psi;
}

}  // namespace catqec
