#include "zetasum/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace zetasum {

namespace {

const double kPi = 3.14159265358979323846;

// Bernoulli numbers B_2, B_4, ..., B_24 (correction order 12).
const double kBernoulli[12] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

// Factorials (2j)! for j = 1..12.
const double kEvenFactorial[12] = {
    2.0,
    24.0,
    720.0,
    40320.0,
    3628800.0,
    479001600.0,
    87178291200.0,
    20922789888000.0,
    6402373705728000.0,
    2432902008176640000.0,
    1.1240007277776077e21,
    6.2044840173323941e23,
};

int euler_maclaurin_terms(Complex s, const PrecisionBudget& budget) {
    int n = static_cast<int>(std::ceil(std::abs(s.imag())));
    if (n < 20) n = 20;
    if (n > budget.max_terms)
        throw std::runtime_error("zeta: height exceeds precision budget");
    return n;
}

// phi(w) = expm1(w)/w, stable near w = 0.
Complex expm1_over(Complex w) {
    if (std::abs(w) < 0.5) {
        Complex sum(1.0, 0.0), term(1.0, 0.0);
        for (int k = 2; k <= 24; ++k) {
            term *= w / static_cast<double>(k);
            sum += term;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

// Direct Euler-Maclaurin evaluation; valid for Re(s) > -20 (correction order
// 12 keeps the remainder negligible with N >= max(20, |Im s|)).  When
// subtract_pole is set the N^{1-s}/(s-1) term carries the pole removed.
Complex euler_maclaurin(Complex s, double a, bool subtract_pole,
                        const PrecisionBudget& budget) {
    const int n = euler_maclaurin_terms(s, budget);
    Complex sum(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        double base = k + a;
        if (base == 0.0) continue;  // not reachable for valid a
        sum += std::exp(-s * std::log(base));
    }
    const Complex log_nn = std::log(Complex(n + a, 0.0));
    const Complex npow = std::exp(-s * log_nn);  // (N+a)^{-s}
    if (subtract_pole) {
        // (N+a)^{1-s}/(s-1) - 1/(s-1) = -log(N+a) * expm1((1-s)log(N+a)) / ((1-s)log(N+a))
        Complex w = (1.0 - s) * log_nn;
        sum += -log_nn * expm1_over(w);
    } else {
        sum += std::exp((1.0 - s) * log_nn) / (s - 1.0);
    }
    sum += 0.5 * npow;
    // Bernoulli corrections: B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * (N+a)^{-s-2j+1}
    Complex rising = s;  // running product s(s+1)...(s+2j-2)
    Complex power = npow * Complex(n + a, 0.0);  // (N+a)^{-s+1}
    for (int j = 1; j <= 12; ++j) {
        power /= (n + a) * (n + a);
        // power is now (N+a)^{-s-2j+1}
        sum += kBernoulli[j - 1] / kEvenFactorial[j - 1] * rising * power;
        if (j < 12)
            rising *= (s + Complex(2.0 * j - 1.0, 0.0)) * (s + Complex(2.0 * j, 0.0));
    }
    return sum;
}

// phi(w) = expm1(w)/w on jets, by direct power series (only used with small
// |w|, i.e. at or near the pole).
Jet jet_expm1_over(const Jet& w) {
    Jet sum(Complex(1.0, 0.0));
    Jet term(Complex(1.0, 0.0));
    for (int k = 2; k <= 30; ++k) {
        term = term * w * Complex(1.0 / k, 0.0);
        sum += term;
    }
    return sum;
}

// Jet version of the same Euler-Maclaurin sum (a = 1).
Jet euler_maclaurin_jet(Complex s0, const PrecisionBudget& budget,
                        bool subtract_pole = false) {
    const int n = euler_maclaurin_terms(s0, budget);
    Jet s = Jet::variable(s0);
    Jet sum;
    for (int k = 1; k < n; ++k) {
        // n^{-s} = exp(-s log n); expand manually for speed:
        // exp(-(s0+h) log k) = k^{-s0} * exp(-h log k).
        double logk = std::log(static_cast<double>(k));
        Complex v = std::exp(-s0 * logk);
        Jet term;
        double fact = 1.0;
        double lp = 1.0;
        for (int j = 0; j <= Jet::kMaxOrder; ++j) {
            term[j] = v * ((j % 2 == 0) ? lp : -lp) / fact;
            fact *= (j + 1);
            lp *= logk;
        }
        sum += term;
    }
    const double logn = std::log(static_cast<double>(n));
    Jet npow = jet_exp(s * (-logn));  // N^{-s}
    if (subtract_pole) {
        // N^{1-s}/(s-1) - 1/(s-1) = -log N * expm1((1-s)log N)/((1-s)log N)
        Jet w = (Complex(1.0, 0.0) - s) * Complex(logn, 0.0);
        sum += Complex(-logn, 0.0) * jet_expm1_over(w);
    } else {
        sum += jet_exp(s * (-logn) + Complex(logn, 0.0)) / (s - Complex(1.0, 0.0));
    }
    sum += Complex(0.5, 0.0) * npow;
    Jet rising = s;
    Jet power = npow * Complex(static_cast<double>(n), 0.0);
    for (int j = 1; j <= 12; ++j) {
        power = power / Complex(static_cast<double>(n) * n, 0.0);
        sum += Complex(kBernoulli[j - 1] / kEvenFactorial[j - 1], 0.0) * rising * power;
        if (j < 12)
            rising = rising * (s + Complex(2.0 * j - 1.0, 0.0)) * (s + Complex(2.0 * j, 0.0));
    }
    return sum;
}

// chi(s) factor of the functional equation zeta(s) = chi(s) zeta(1-s),
// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), as a jet.
Jet chi_jet(Complex s0) {
    Jet s = Jet::variable(s0);
    Jet log2pi_part = s * std::log(Complex(2.0, 0.0)) +
                      (s - Complex(1.0, 0.0)) * std::log(Complex(kPi, 0.0));
    return jet_exp(log2pi_part) * jet_sin(s * Complex(kPi / 2.0, 0.0)) *
           jet_exp(jet_lgamma(Complex(1.0, 0.0) - s));
}

// Substitute h -> -h in a jet: converts a jet in u at u0 = 1 - s0 into the
// jet of the composite u(s) = 1 - s.
Jet negate_seed(const Jet& a) {
    Jet r;
    for (int k = 0; k <= Jet::kMaxOrder; ++k)
        r[k] = ((k % 2 == 0) ? 1.0 : -1.0) * a[k];
    return r;
}

Jet conj_jet(const Jet& a) {
    Jet r;
    for (int k = 0; k <= Jet::kMaxOrder; ++k) r[k] = std::conj(a[k]);
    return r;
}

const double kReflectBelow = -1.5;

Jet zeta_jet_impl(Complex s0, const PrecisionBudget& budget) {
    if (s0.imag() < 0.0) return conj_jet(zeta_jet_impl(std::conj(s0), budget));
    if (s0.real() >= kReflectBelow) return euler_maclaurin_jet(s0, budget);
    Jet z = zeta_jet_impl(1.0 - s0, budget);  // jet in u at 1 - s0
    return chi_jet(s0) * negate_seed(z);
}

}  // namespace

Complex zeta(Complex s, const PrecisionBudget& budget) {
    if (s == Complex(1.0, 0.0)) throw std::domain_error("zeta: pole at s = 1");
    if (s.imag() < 0.0) return std::conj(zeta(std::conj(s), budget));
    if (s.real() >= kReflectBelow)
        return euler_maclaurin(s, 1.0, false, budget);
    return zeta_jet_impl(s, budget).value();
}

Complex zeta_derivative(Complex s, int order, const PrecisionBudget& budget) {
    if (order < 1 || order > Jet::kMaxOrder)
        throw std::domain_error("zeta_derivative: unsupported order");
    if (s == Complex(1.0, 0.0)) throw std::domain_error("zeta: pole at s = 1");
    return zeta_jet_impl(s, budget).derivative(order);
}

Jet zeta_jet(Complex s, const PrecisionBudget& budget) {
    if (s == Complex(1.0, 0.0)) throw std::domain_error("zeta: pole at s = 1");
    return zeta_jet_impl(s, budget);
}

Complex zeta_minus_pole(Complex s, const PrecisionBudget& budget) {
    if (s.imag() < 0.0) return std::conj(zeta_minus_pole(std::conj(s), budget));
    return euler_maclaurin(s, 1.0, true, budget);
}

Jet zeta_minus_pole_jet(Complex s, const PrecisionBudget& budget) {
    if (s.imag() < 0.0)
        return conj_jet(zeta_minus_pole_jet(std::conj(s), budget));
    return euler_maclaurin_jet(s, budget, true);
}

Complex hurwitz_zeta(Complex s, double a, const PrecisionBudget& budget) {
    if (a <= 0.0 || a > 1.0)
        throw std::domain_error("hurwitz_zeta: need 0 < a <= 1");
    if (s == Complex(1.0, 0.0))
        throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (s.imag() < 0.0)
        return std::conj(hurwitz_zeta(std::conj(s), a, budget));
    return euler_maclaurin(s, a, false, budget);
}

}  // namespace zetasum
