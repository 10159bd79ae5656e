#include "zetasum/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace zetasum {

namespace {
constexpr int N = Jet::kMaxOrder;
}

// Composition with a scalar analytic function g whose derivatives at a.value()
// are supplied as Taylor coefficients g_k = g^{(k)}(a0)/k!.  Uses the standard
// power-series substitution g(a0 + u) with u = a - a0 (u has zero constant term).
static Jet compose(const std::array<Complex, N + 1>& g, const Jet& a) {
    Jet u = a;
    u[0] = Complex(0.0, 0.0);
    Jet r(g[0]);
    Jet upow(Complex(1.0, 0.0));
    for (int k = 1; k <= N; ++k) {
        upow = upow * u;
        r += g[k] * upow;
    }
    return r;
}

Jet jet_exp(const Jet& a) {
    std::array<Complex, N + 1> g;
    Complex e = std::exp(a.value());
    double fact = 1.0;
    for (int k = 0; k <= N; ++k) {
        g[k] = e / fact;
        fact *= (k + 1);
    }
    return compose(g, a);
}

Jet jet_log(const Jet& a) {
    Complex a0 = a.value();
    if (a0 == Complex(0.0, 0.0))
        throw std::domain_error("jet_log: log of zero");
    std::array<Complex, N + 1> g;
    g[0] = std::log(a0);
    // d^k/dx^k log x = (-1)^{k-1} (k-1)! x^{-k}; divide by k!.
    Complex p = Complex(1.0, 0.0);
    for (int k = 1; k <= N; ++k) {
        p /= a0;
        g[k] = ((k % 2 == 1) ? 1.0 : -1.0) * p / static_cast<double>(k);
    }
    return compose(g, a);
}

Jet jet_sin(const Jet& a) {
    std::array<Complex, N + 1> g;
    Complex s = std::sin(a.value()), c = std::cos(a.value());
    double fact = 1.0;
    for (int k = 0; k <= N; ++k) {
        switch (k % 4) {
            case 0: g[k] = s; break;
            case 1: g[k] = c; break;
            case 2: g[k] = -s; break;
            default: g[k] = -c; break;
        }
        g[k] /= fact;
        fact *= (k + 1);
    }
    return compose(g, a);
}

Jet jet_cos(const Jet& a) {
    std::array<Complex, N + 1> g;
    Complex s = std::sin(a.value()), c = std::cos(a.value());
    double fact = 1.0;
    for (int k = 0; k <= N; ++k) {
        switch (k % 4) {
            case 0: g[k] = c; break;
            case 1: g[k] = -s; break;
            case 2: g[k] = -c; break;
            default: g[k] = s; break;
        }
        g[k] /= fact;
        fact *= (k + 1);
    }
    return compose(g, a);
}

Jet jet_reciprocal(const Jet& a) {
    Complex a0 = a.value();
    if (a0 == Complex(0.0, 0.0))
        throw std::domain_error("jet_reciprocal: division by zero jet");
    std::array<Complex, N + 1> g;
    Complex p = 1.0 / a0;
    for (int k = 0; k <= N; ++k) {
        g[k] = ((k % 2 == 0) ? 1.0 : -1.0) * p;
        p /= a0;
    }
    return compose(g, a);
}

Jet operator/(const Jet& a, const Jet& b) { return a * jet_reciprocal(b); }

Jet jet_pow(Complex base, const Jet& expo) {
    return jet_exp(expo * std::log(base));
}

Jet jet_pow_int(const Jet& a, int n) {
    if (n < 0) return jet_reciprocal(jet_pow_int(a, -n));
    Jet r(Complex(1.0, 0.0));
    Jet p = a;
    int e = n;
    while (e > 0) {
        if (e & 1) r = r * p;
        p = p * p;
        e >>= 1;
    }
    return r;
}

// Lanczos approximation for log Gamma (g = 7, 9 coefficients), lifted to jets.
// Valid for Re(z) > 0; the reflection formula is applied by callers when
// needed.  Accuracy ~1e-13 relative in double precision.
Jet jet_lgamma(const Jet& a) {
    static const double lanczos[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double pi = 3.14159265358979323846;
    if (a.value().real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        Jet z = a;
        return jet_log(Jet(Complex(pi, 0.0)) / jet_sin(z * Complex(pi, 0.0))) -
               jet_lgamma(Complex(1.0, 0.0) - z);
    }
    Jet z = a - Complex(1.0, 0.0);
    Jet x(Complex(lanczos[0], 0.0));
    for (int i = 1; i < 9; ++i)
        x += Complex(lanczos[i], 0.0) * jet_reciprocal(z + Complex(static_cast<double>(i), 0.0));
    Jet t = z + Complex(7.5, 0.0);
    Jet half_log_2pi(Complex(0.91893853320467274178, 0.0));
    return half_log_2pi + (z + Complex(0.5, 0.0)) * jet_log(t) - t + jet_log(x);
}

}  // namespace zetasum
