#pragma once

// Riemann-von Mangoldt style prime counting: pi_0(x) reconstructed from
// li(x), li(x^rho) over pairs of nontrivial zeros, and a convergent tail
// integral, assembled through the Moebius-weighted outer sum.

#include "zetasum/zero_catalog.hpp"

namespace zetasum {

// integral_x^infinity dt / ((t^3 - t) log t), evaluated after the
// substitution t = x / u; absolute error below 1e-10.
double tail_integral(double x);

// f(x) = li(x) - sum_{k<=N} 2 Re li(x^{rho_k}) + tail_integral(x) - log 2,
// with li the principal-value logarithmic integral.
double rvm_f(double x, int N, const ZeroCatalog& catalog);

// pi_0(x) ~= sum_{n} mu(n)/n * f(x^{1/n}), truncated at the first n with
// x^{1/n} < 2.  Requires x >= 2.
double rvm_pi(double x, int N, const ZeroCatalog& catalog);

// Number of terms the outer sum keeps at this x (x^{1/n} >= 2).
int rvm_outer_terms(double x);

}  // namespace zetasum
