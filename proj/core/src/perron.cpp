#include "zetasum/perron.hpp"

#include <cmath>
#include <stdexcept>

#include "zetasum/zeta.hpp"

namespace zetasum {

namespace {

const double kPi = 3.14159265358979323846;
const Complex kTwoPiI(0.0, 2.0 * kPi);

int vertical_panels(double t_lo, double t_hi, double x) {
    double cycles = (t_hi - t_lo) * (std::log(std::max(x, 1.5)) + 2.0) /
                    (2.0 * kPi);
    int n = static_cast<int>(std::ceil(cycles * 2.0)) + 4;
    return std::min(n, 4000);
}

int horizontal_panels(double width, double T) {
    int n = static_cast<int>(std::ceil(width * (1.0 + std::log1p(T)))) + 4;
    return std::min(n, 2000);
}

// (1/2 pi i) * integral of the integrand over the straight segment z0 -> z1.
LineEstimate segment_integral(ArithmeticFunctionId id, double x, Complex z0,
                              Complex z1, const QuadratureConfig& config,
                              int initial_panels) {
    Complex dz = z1 - z0;
    auto f = [&](double u) { return integrand(id, z0 + u * dz, x); };
    QuadratureOutcome q = integrate_adaptive(f, 0.0, 1.0, config,
                                             initial_panels);
    return {q.value * dz / kTwoPiI, q.error * std::abs(dz) / (2.0 * kPi),
            q.converged};
}

}  // namespace

Complex integrand(ArithmeticFunctionId id, Complex s, double x) {
    if (std::abs(s) < 1e-6)
        throw std::domain_error("integrand: too close to the pole at s = 0");
    const auto& d = descriptor(id);
    if (d.log_derivative) {
        if (std::abs(s - Complex(1.0, 0.0)) < 1e-6)
            throw std::domain_error("integrand: too close to s = 1");
        Jet z = zeta_jet(s);
        if (std::abs(z.value()) < 1e-10)
            throw std::domain_error("integrand: too close to a zeta zero");
        return -z.derivative(1) / z.value() * std::exp(s * std::log(x)) / s;
    }
    Complex acc = std::exp(s * std::log(x)) / s;
    for (const auto& fac : d.factors) {
        Complex z0 = fac.a * s + fac.b;
        if (fac.exponent > 0 && std::abs(z0 - Complex(1.0, 0.0)) < 1e-6)
            throw std::domain_error("integrand: too close to a zeta pole");
        Complex zv = zeta(z0);
        if (fac.exponent < 0 && std::abs(zv) < 1e-10)
            throw std::domain_error("integrand: too close to a zeta zero");
        for (int i = 0; i < std::abs(fac.exponent); ++i)
            acc = fac.exponent > 0 ? acc * zv : acc / zv;
    }
    return acc;
}

LineEstimate integrate_line(ArithmeticFunctionId id, double x, double c,
                            double T, const QuadratureConfig& config) {
    if (c <= descriptor(id).c_min)
        throw std::invalid_argument(
            "integrate_line: abscissa must exceed the convergence abscissa");
    return segment_integral(id, x, Complex(c, -T), Complex(c, T), config,
                            vertical_panels(-T, T, x));
}

SideIntegrals integrate_rectangle(ArithmeticFunctionId id, double x,
                                  RectangleContour rect,
                                  const QuadratureConfig& config) {
    if (rect.a >= rect.c || rect.T <= 0.0)
        throw std::invalid_argument("integrate_rectangle: bad rectangle");
    double T = rect.T;
    bool nudged = false;
    for (int attempt = 0; attempt < 4; ++attempt) {
        try {
            SideIntegrals out;
            Complex cm(rect.c, -T), cp(rect.c, T), ap(rect.a, T),
                am(rect.a, -T);
            int vp = vertical_panels(-T, T, x);
            int hp = horizontal_panels(rect.c - rect.a, T);
            LineEstimate i1 = segment_integral(id, x, cm, cp, config, vp);
            LineEstimate i2 = segment_integral(id, x, cp, ap, config, hp);
            LineEstimate i3 = segment_integral(id, x, ap, am, config, vp);
            LineEstimate i4 = segment_integral(id, x, am, cm, config, hp);
            out.I1 = i1.value;
            out.I2 = i2.value;
            out.I3 = i3.value;
            out.I4 = i4.value;
            out.total = out.I1 + out.I2 + out.I3 + out.I4;
            out.error = i1.error + i2.error + i3.error + i4.error;
            out.T_used = T;
            out.nudged = nudged;
            return out;
        } catch (const std::domain_error&) {
            // a side ran into a pole: nudge the half-height and retry
            T += 0.05;
            nudged = true;
        }
    }
    throw std::runtime_error(
        "integrate_rectangle: could not avoid poles on the boundary");
}

ResidueComparison residue_vs_rectangle(ArithmeticFunctionId id, double x,
                                       RectangleContour rect,
                                       const ZeroCatalog& catalog,
                                       const QuadratureConfig& config) {
    const auto& d = descriptor(id);
    double T = rect.T;
    bool nudged = false;

    // nudge away from mapped zero-site ordinates
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& rec : catalog.records)
            for (const auto& fam : d.zero_sites)
                if (std::abs(std::abs(fam.alpha) * rec.ordinate - T) < 1e-3) {
                    T += 0.05;
                    nudged = true;
                    moved = true;
                }
    }

    ResidueComparison out;
    out.nudged = nudged;
    out.T_used = T;
    out.residue_total = 0.0;

    auto check_edges = [&](double re) {
        if (std::abs(re - rect.a) < 1e-3 || std::abs(re - rect.c) < 1e-3)
            throw std::runtime_error(
                "residue_vs_rectangle: pole site within 1e-3 of a vertical "
                "side");
    };

    for (double site : d.smooth_sites) {
        if (site <= rect.a || site >= rect.c) {
            check_edges(site);
            continue;
        }
        check_edges(site);
        double contrib =
            residue_log_poly(id, Complex(site, 0.0)).eval(x).real();
        out.poles.push_back({Complex(site, 0.0), "smooth", contrib});
        out.residue_total += contrib;
    }

    for (int k = 1; k <= 64; ++k) {
        bool any_candidate = false;
        for (double site : real_zero_pole_sites(id, k)) {
            if (site <= rect.a - 1e-3) continue;
            any_candidate = true;
            check_edges(site);
            if (site <= rect.a || site >= rect.c) continue;
            double contrib =
                residue_log_poly(id, Complex(site, 0.0)).eval(x).real();
            if (contrib != 0.0)
                out.poles.push_back({Complex(site, 0.0), "real-zero", contrib});
            out.residue_total += contrib;
        }
        if (!any_candidate) break;
    }

    for (const auto& rec : catalog.records) {
        for (const auto& fam : d.zero_sites) {
            Complex site = fam.alpha * Complex(0.5, rec.ordinate) + fam.beta;
            if (std::abs(site.imag()) >= T) continue;
            check_edges(site.real());
            if (site.real() <= rect.a || site.real() >= rect.c) continue;
            double contrib = 2.0 * residue_log_poly(id, site).eval(x).real();
            out.poles.push_back({site, "zero-pair", contrib});
            out.residue_total += contrib;
        }
    }

    SideIntegrals si =
        integrate_rectangle(id, x, {rect.c, rect.a, T}, config);
    out.rectangle_total = si.total;
    out.T_used = si.T_used;
    out.nudged = nudged || si.nudged;
    out.discrepancy = std::abs(si.total - Complex(out.residue_total, 0.0));
    return out;
}

std::vector<double> integral_vs_T_profile(ArithmeticFunctionId id, double x,
                                          double c,
                                          const std::vector<double>& T_grid,
                                          const QuadratureConfig& config) {
    std::vector<double> out;
    out.reserve(T_grid.size());
    Complex acc(0.0, 0.0);
    double T_prev = 0.0;
    bool first = true;
    for (double T : T_grid) {
        if (first) {
            acc = integrate_line(id, x, c, T, config).value;
            first = false;
        } else {
            int vp = vertical_panels(T_prev, T, x);
            acc += segment_integral(id, x, Complex(c, T_prev), Complex(c, T),
                                    config, vp)
                       .value;
            acc += segment_integral(id, x, Complex(c, -T), Complex(c, -T_prev),
                                    config, vp)
                       .value;
        }
        T_prev = T;
        out.push_back(acc.real());
    }
    return out;
}

}  // namespace zetasum
