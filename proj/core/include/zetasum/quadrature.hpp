#pragma once

// Adaptive Gauss-Kronrod (7-15) quadrature for complex-valued integrands of
// a real parameter.  Oscillatory integrands are handled by seeding the
// subdivision with enough initial panels for the local oscillation scale.

#include <complex>
#include <functional>

namespace zetasum {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_subdivisions = 4000;
};

struct QuadratureOutcome {
    std::complex<double> value;
    double error = 0.0;  // accumulated Kronrod-Gauss discrepancy
    int panels = 0;
    bool converged = true;
};

// Integral of f over [a, b].  initial_panels splits the interval uniformly
// before adapting (use ~ oscillation cycles / 3 for wavy integrands).
// When the subdivision budget runs out the best estimate is returned with
// converged = false.
QuadratureOutcome integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureConfig& config = {}, int initial_panels = 1);

}  // namespace zetasum
