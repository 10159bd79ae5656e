#include "zetasum/gibbs.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "zetasum/formulas.hpp"
#include "zetasum/quadrature.hpp"

namespace zetasum {

namespace {

const double kPi = 3.14159265358979323846;

// Golden-section maximization of f on [a, b].
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b, double tol = 1e-9) {
    const double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

struct Extremum {
    double x;
    double y;
};

// Grid scan for the extremum nearest `from` moving toward `to`, refined by
// golden-section.  sign = +1 finds a maximum, -1 a minimum.
Extremum nearest_extremum(const std::function<double(double)>& f, double from,
                          double to, double step, int sign) {
    double dir = (to > from) ? 1.0 : -1.0;
    int n = static_cast<int>(std::floor(std::abs(to - from) / step));
    if (n < 3) throw std::runtime_error("overshoot scan: window too small");
    std::vector<double> ys(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        ys[static_cast<std::size_t>(i)] = sign * f(from + dir * step * i);
    for (int i = 1; i < n; ++i) {
        if (ys[static_cast<std::size_t>(i)] >=
                ys[static_cast<std::size_t>(i) - 1] &&
            ys[static_cast<std::size_t>(i)] >=
                ys[static_cast<std::size_t>(i) + 1]) {
            double lo = from + dir * step * (i - 1);
            double hi = from + dir * step * (i + 1);
            if (lo > hi) std::swap(lo, hi);
            auto [x, y] =
                golden_max([&](double t) { return sign * f(t); }, lo, hi);
            return {x, sign * y};
        }
    }
    throw std::runtime_error("overshoot scan: no local extremum in window");
}

}  // namespace

double gibbs_constant() {
    auto f = [](double t) -> std::complex<double> {
        if (t == 0.0) return 1.0;
        return std::sin(t) / t;
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    double si = integrate_adaptive(f, 0.0, kPi, cfg, 2).value.real();
    return -0.5 + si / kPi;
}

double fourier_square_demo(int n, double x) {
    if (n < 1) throw std::domain_error("fourier_square_demo: need n >= 1");
    double acc = 0.5;
    for (int j = 0; j < n; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc -= (2.0 / kPi) * sign * std::cos((2 * j + 1) * x) / (2 * j + 1);
    }
    return acc;
}

std::pair<double, double> first_peak(int n) {
    if (n < 1) throw std::domain_error("first_peak: need n >= 1");
    // the first peak after the jump at pi/2 sits near pi/2 + pi/(2n)
    double lo = kPi / 2.0 + 1e-6;
    double hi = kPi / 2.0 + kPi / n;
    return golden_max([n](double x) { return fourier_square_demo(n, x); }, lo,
                      hi);
}

OvershootReport measure_overshoot_fn(const std::function<double(double)>& fn,
                                     double x_jump, double jump_size,
                                     double window, double step) {
    if (jump_size <= 0.0)
        throw std::domain_error("measure_overshoot: need a positive jump");
    Extremum lo = nearest_extremum(fn, x_jump - 1e-9, x_jump - window, step,
                                   -1);
    Extremum hi = nearest_extremum(fn, x_jump + 1e-9, x_jump + window, step,
                                   +1);
    OvershootReport r;
    r.x_jump = x_jump;
    r.jump_size = jump_size;
    r.y_min = lo.y;
    r.y_max = hi.y;
    r.d = ((hi.y - lo.y - jump_size) / 2.0) / jump_size;
    r.window = window;
    return r;
}

OvershootReport measure_overshoot(ArithmeticFunctionId id, double x_jump,
                                  int N, const ZeroCatalog& catalog,
                                  double window) {
    double jump =
        arith_value(id, static_cast<std::int64_t>(std::llround(x_jump)));
    if (jump <= 0.0)
        throw std::domain_error(
            "measure_overshoot: summatory function does not jump upward "
            "here");
    ZeroTermEvaluator ev(id, catalog, N);
    auto fn = [&](double x) { return smooth_part(id, x) + ev.sum2re(x); };
    return measure_overshoot_fn(fn, x_jump, jump, window);
}

}  // namespace zetasum
