#include "zetasum/rvm.hpp"

#include <cmath>
#include <stdexcept>

#include "zetasum/arith.hpp"
#include "zetasum/expint.hpp"
#include "zetasum/quadrature.hpp"

namespace zetasum {

double tail_integral(double x) {
    if (x <= 1.0) throw std::domain_error("tail_integral: need x > 1");
    // t = x/u maps (x, infinity) to u in (0, 1):
    //   dt/((t^3 - t) log t) = u du / ((x^2 - u^2) log(x/u))
    auto f = [x](double u) -> std::complex<double> {
        if (u <= 0.0) return 0.0;
        return u / ((x * x - u * u) * std::log(x / u));
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    return integrate_adaptive(f, 0.0, 1.0, cfg, 4).value.real();
}

double rvm_f(double x, int N, const ZeroCatalog& catalog) {
    if (x < 2.0) throw std::domain_error("rvm_f: need x >= 2");
    double acc = li_pv(x) + tail_integral(x) - std::log(2.0);
    int n = std::min<int>(N, static_cast<int>(catalog.size()));
    for (int k = 1; k <= n; ++k) {
        Complex rho(0.5, catalog.ordinate(k));
        acc -= 2.0 * li_of_power(x, rho).real();
    }
    return acc;
}

int rvm_outer_terms(double x) {
    if (x < 2.0) throw std::domain_error("rvm_outer_terms: need x >= 2");
    int n = 0;
    while (std::pow(x, 1.0 / (n + 1)) >= 2.0) ++n;
    return n;
}

double rvm_pi(double x, int N, const ZeroCatalog& catalog) {
    int terms = rvm_outer_terms(x);
    double acc = 0.0;
    for (int n = 1; n <= terms; ++n) {
        double mu = arith_value(ArithmeticFunctionId::Mu, n);
        if (mu == 0.0) continue;
        acc += mu / n * rvm_f(std::pow(x, 1.0 / n), N, catalog);
    }
    return acc;
}

}  // namespace zetasum
