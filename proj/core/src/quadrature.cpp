#include "zetasum/quadrature.hpp"

#include <cmath>
#include <vector>

namespace zetasum {

namespace {

using Complex = std::complex<double>;

// 15-point Kronrod extension of 7-point Gauss on [-1, 1] (QUADPACK dqk15).
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct PanelResult {
    Complex kronrod;
    double error;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex kr = kWgk[7] * fc;
    Complex gs = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = h * kXgk[i];
        Complex sum = f(c - dx) + f(c + dx);
        kr += kWgk[i] * sum;
        if (i % 2 == 1) gs += kWg[i / 2] * sum;
    }
    kr *= h;
    gs *= h;
    return {kr, std::abs(kr - gs)};
}

}  // namespace

QuadratureOutcome integrate_adaptive(const std::function<Complex(double)>& f,
                                     double a, double b,
                                     const QuadratureConfig& config,
                                     int initial_panels) {
    if (initial_panels < 1) initial_panels = 1;
    struct Panel {
        double a, b;
        PanelResult r;
    };
    std::vector<Panel> work;
    const double span = b - a;
    for (int i = 0; i < initial_panels; ++i) {
        double pa = a + span * i / initial_panels;
        double pb = a + span * (i + 1) / initial_panels;
        work.push_back({pa, pb, gk15(f, pa, pb)});
    }
    QuadratureOutcome out;
    int splits = 0;
    std::vector<Panel> done;
    while (!work.empty()) {
        Panel p = work.back();
        work.pop_back();
        double local_tol =
            config.abs_tol * std::max(1e-3, (p.b - p.a) / std::abs(span));
        if (p.r.error <= local_tol || splits >= config.max_subdivisions) {
            if (p.r.error > local_tol) out.converged = false;
            done.push_back(p);
            continue;
        }
        ++splits;
        double m = 0.5 * (p.a + p.b);
        work.push_back({p.a, m, gk15(f, p.a, m)});
        work.push_back({m, p.b, gk15(f, m, p.b)});
    }
    for (const auto& p : done) {
        out.value += p.r.kronrod;
        out.error += p.r.error;
    }
    out.panels = static_cast<int>(done.size());
    return out;
}

}  // namespace zetasum
