#include "catqec/series.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "catqec/fock.hpp"

namespace catqec {

unsigned mod_class(long j, unsigned m) {
    const long mm = static_cast<long>(m);
    return static_cast<unsigned>(((j % mm) + mm) % mm);
}

double log_poisson_class(double x, unsigned m, long j) {
    if (m == 0) throw std::invalid_argument("sectioned series: modulus must be positive");
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("sectioned series: x must be finite and >= 0");
    const unsigned r = mod_class(j, m);
    if (x == 0.0) return r == 0 ? 0.0 : -std::numeric_limits<double>::infinity();

    // Terms ln(e^{-x} x^n / n!) for n = r, r+m, ...; peak near n = x.
    const double lx = std::log(x);
    auto log_term = [&](std::size_t n) {
        return -x + static_cast<double>(n) * lx - log_factorial(n);
    };
    const double stop = x + 40.0 * std::sqrt(x) + 60.0;
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t n = r; static_cast<double>(n) <= stop; n += m) peak = std::max(peak, log_term(n));
    if (!std::isfinite(peak)) peak = log_term(r);
    double acc = 0.0;
    for (std::size_t n = r;; n += m) {
        const double lt = log_term(n);
        acc += std::exp(lt - peak);
        if (static_cast<double>(n) > stop && lt - peak < -60.0) break;
    }
    return peak + std::log(acc);
}

double poisson_class(double x, unsigned m, long j) { return std::exp(log_poisson_class(x, m, j)); }

double sectioned_exp(double x, unsigned m, long j) { return std::exp(x + log_poisson_class(x, m, j)); }

double sectioned_exp_filter(double x, unsigned m, long j) {
    if (m == 0) throw std::invalid_argument("sectioned series: modulus must be positive");
    const unsigned jj = mod_class(j, m);
    std::complex<double> acc = 0.0;
    for (unsigned r = 0; r < m; ++r) {
        const double th = 2.0 * std::numbers::pi * r / m;
        const std::complex<double> w = std::polar(1.0, th);
        acc += std::polar(1.0, -th * jj) * std::exp(w * x);
    }
    return acc.real() / m;
}

}  // namespace catqec
