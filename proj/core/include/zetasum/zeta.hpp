#pragma once

// Riemann zeta and Hurwitz zeta for complex argument via Euler-Maclaurin
// summation, with analytic derivatives through jet arithmetic and reflection
// through the functional equation for arguments far left of the critical
// strip.

#include <complex>

#include "zetasum/jet.hpp"

namespace zetasum {

struct PrecisionBudget {
    double target_abs_error = 1e-12;
    int max_terms = 2000000;
};

// zeta(s).  Throws std::domain_error at the pole s = 1 and
// std::runtime_error when the height requires more terms than the budget
// allows.
Complex zeta(Complex s, const PrecisionBudget& budget = {});

// k-th derivative of zeta, 1 <= order <= 4 for the public contract (the
// implementation carries orders up to Jet::kMaxOrder).
Complex zeta_derivative(Complex s, int order, const PrecisionBudget& budget = {});

// zeta and its derivatives bundled as a Taylor jet at s.
Jet zeta_jet(Complex s, const PrecisionBudget& budget = {});

// zeta(s) - 1/(s-1): analytic at s = 1, stable in its neighborhood.
Complex zeta_minus_pole(Complex s, const PrecisionBudget& budget = {});

// Jet of zeta(s) - 1/(s-1) at s (used for Laurent expansions about the pole).
Jet zeta_minus_pole_jet(Complex s, const PrecisionBudget& budget = {});

// Hurwitz zeta(s, a) for 0 < a <= 1, Re(s) > -20 or so; no reflection.
Complex hurwitz_zeta(Complex s, double a, const PrecisionBudget& budget = {});

}  // namespace zetasum
