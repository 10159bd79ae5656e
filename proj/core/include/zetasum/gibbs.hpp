#pragma once

// Gibbs constant, Fourier square-wave partial sums, and normalized
// overshoot measurement around jumps of step-function approximations.

#include <functional>
#include <utility>

#include "zetasum/arith.hpp"
#include "zetasum/zero_catalog.hpp"

namespace zetasum {

// g = -1/2 + (1/pi) * integral_0^pi sin(t)/t dt ~= 0.0894898722.
double gibbs_constant();

// Partial sum (n cosine terms) of the unit square wave with an upward jump
// at x = pi/2: value 0 on (0, pi/2), 1 on (pi/2, pi).
double fourier_square_demo(int n, double x);

// Location and height of the first peak after the jump (golden-section
// search); the abscissa approaches pi/2 + pi/(2n).
std::pair<double, double> first_peak(int n);

struct OvershootReport {
    double x_jump;
    double jump_size;
    double y_min;  // minimum just before the jump
    double y_max;  // maximum just after the jump
    double d;      // ((y_max - y_min - jump_size)/2) / jump_size
    double window;
};

// Scan fn on dense grids left and right of x_jump (grid step `step`,
// golden-section refinement) for the extremes nearest the jump.
OvershootReport measure_overshoot_fn(const std::function<double(double)>& fn,
                                     double x_jump, double jump_size,
                                     double window, double step = 1e-4);

// Overshoot of approximate(id, x, N, 0, catalog) around a jump of the
// summatory function at integer x_jump.
OvershootReport measure_overshoot(ArithmeticFunctionId id, double x_jump,
                                  int N, const ZeroCatalog& catalog,
                                  double window = 0.3);

}  // namespace zetasum
