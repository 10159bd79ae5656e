#pragma once

// Complex exponential integral Ei(z) (principal branch, cut on the negative
// real axis) and the logarithmic integral li(x^rho) = Ei(rho log x).

#include <complex>

#include "zetasum/jet.hpp"

namespace zetasum {

// Principal-branch Ei(z).  For real z > 0 this is the principal-value
// integral.  Throws std::domain_error for z = 0.
Complex exp_integral_ei(Complex z);

// li(x^rho) = Ei(rho * log x); requires x > 1.
Complex li_of_power(double x, Complex rho);

// Principal-value li(x) = Ei(log x) for real x > 1.
double li_pv(double x);

// li(2) = Ei(log 2): the constant separating the principal-value convention
// from the integral-from-2 convention li_from_2(x) = li_pv(x) - li(2).
double li_of_two();
double li_from_2(double x);

}  // namespace zetasum
