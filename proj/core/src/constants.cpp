#include "zetasum/constants.hpp"

#include <cmath>
#include <complex>

#include "zetasum/zeta.hpp"

namespace zetasum {

namespace {

const double kPi = 3.14159265358979323846;

// Stieltjes constants from the Laurent expansion
//   zeta(s) = 1/(s-1) + sum_n (-1)^n gamma_n (s-1)^n / n!
// extracted as Taylor coefficients of zeta(s) - 1/(s-1) at s = 1 by a
// trapezoidal Cauchy integral over a circle (spectrally accurate).
void stieltjes(double out[3]) {
    const int nodes = 256;
    const double radius = 0.5;
    std::complex<double> c[3] = {0.0, 0.0, 0.0};
    for (int k = 0; k < nodes; ++k) {
        double theta = 2.0 * kPi * k / nodes;
        std::complex<double> w = std::polar(radius, theta);
        std::complex<double> g = zeta_minus_pole(std::complex<double>(1.0, 0.0) + w);
        for (int n = 0; n < 3; ++n) c[n] += g / std::pow(w, n);
    }
    double fact = 1.0;
    for (int n = 0; n < 3; ++n) {
        // gamma_n = (-1)^n n! c_n
        out[n] = ((n % 2 == 0) ? 1.0 : -1.0) * fact * (c[n] / static_cast<double>(nodes)).real();
        fact *= (n + 1);
    }
}

// Si(pi) by composite Simpson on the entire integrand sin(t)/t (removable
// singularity at 0).
double si_pi(int intervals) {
    auto f = [](double t) { return (t == 0.0) ? 1.0 : std::sin(t) / t; };
    const double h = kPi / intervals;
    double acc = f(0.0) + f(kPi);
    for (int i = 1; i < intervals; ++i)
        acc += f(i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

const Constants& constants() {
    static const Constants c = [] {
        Constants r{};
        double g[3];
        stieltjes(g);
        r.euler_gamma = g[0];
        r.stieltjes_1 = g[1];
        r.stieltjes_2 = g[2];
        r.glaisher_log = 1.0 / 12.0 -
            zeta_derivative(std::complex<double>(-1.0, 0.0), 1).real();
        r.gibbs_g = -0.5 + si_pi(2048) / kPi;
        return r;
    }();
    return c;
}

}  // namespace zetasum
