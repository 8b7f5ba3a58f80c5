#pragma once

namespace catqec {

// Sectioned exponentials S_j^{(m)}(x) = sum_{k = j mod m} x^k / k!, x >= 0.
//
// Everything is routed through the Poisson class probability
//   P(x; m, j) = e^{-x} S_j^{(m)}(x),
// which is a sum of positive terms and never overflows.

// ln P(x; m, j); -inf when the class is empty (x = 0, j != 0 mod m).
double log_poisson_class(double x, unsigned m, long j);
double poisson_class(double x, unsigned m, long j);

// e^x P(x; m, j). Overflows for x above ~700.
double sectioned_exp(double x, unsigned m, long j);

// Root-of-unity filter (1/m) sum_r w^{-jr} exp(w^r x), w = e^{2 pi i/m}.
// Independent evaluation path; loses relative accuracy when the class sum is
// tiny compared with e^x.
double sectioned_exp_filter(double x, unsigned m, long j);

// Non-negative residue of j mod m.
unsigned mod_class(long j, unsigned m);

}  // namespace catqec
