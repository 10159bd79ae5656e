#include "zetasum/expint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zetasum {

namespace {

const double kEulerGamma = 0.57721566490153286061;
const double kPi = 3.14159265358979323846;

// Ei(z) = gamma + Log z + sum_{k>=1} z^k / (k * k!).
// Round-off in the alternating region grows like e^{|z|} * 1e-16 while the
// result is of size e^{Re z}, so the series is only used when the
// cancellation margin |z| - Re z is modest (see exp_integral_ei).
Complex ei_series(Complex z) {
    const int max_terms = static_cast<int>(2.0 * std::abs(z)) + 80;
    Complex sum(0.0, 0.0);
    Complex term(1.0, 0.0);
    for (int k = 1; k <= max_terms; ++k) {
        term *= z / static_cast<double>(k);
        Complex add = term / static_cast<double>(k);
        sum += add;
        if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return kEulerGamma + std::log(z) + sum;
}

// Ei(z) ~ e^z/z * sum_k k!/z^k truncated at the smallest term, plus the
// exact +-i*pi of the principal branch off the real axis
// (Ei(z) = -E1(-z) + i*pi for Im z > 0, and E1's expansion carries no
// residual branch term).  Absolute error ~ e^{Re z - |z|} sqrt(|z|), which
// is negligible whenever this path is selected.
Complex ei_asymptotic(Complex z) {
    Complex sum(1.0, 0.0);
    Complex term(1.0, 0.0);
    double last = 1.0;
    for (int k = 1; k <= 400; ++k) {
        term *= static_cast<double>(k) / z;
        double mag = std::abs(term);
        if (mag > last) break;  // smallest term reached; stop before divergence
        sum += term;
        last = mag;
        if (mag < 1e-18) break;
    }
    Complex value = std::exp(z) / z * sum;
    if (z.imag() > 0.0)
        value += Complex(0.0, kPi);
    else if (z.imag() < 0.0)
        value -= Complex(0.0, kPi);
    return value;
}

}  // namespace

Complex exp_integral_ei(Complex z) {
    if (z == Complex(0.0, 0.0))
        throw std::domain_error("exp_integral_ei: singular at z = 0");
    const double r = std::abs(z);
    const double margin = r - std::max(0.0, z.real());
    if (r <= 20.0 || (margin <= 25.0 && r <= 600.0)) return ei_series(z);
    return ei_asymptotic(z);
}

Complex li_of_power(double x, Complex rho) {
    if (x <= 1.0) throw std::domain_error("li_of_power: need x > 1");
    return exp_integral_ei(rho * std::log(x));
}

double li_pv(double x) {
    if (x <= 1.0) throw std::domain_error("li_pv: need x > 1");
    return exp_integral_ei(Complex(std::log(x), 0.0)).real();
}

double li_of_two() {
    static const double value = li_pv(2.0);
    return value;
}

double li_from_2(double x) { return li_pv(x) - li_of_two(); }

}  // namespace zetasum
