#pragma once

// Truncated Taylor series ("jet") arithmetic over complex coefficients.
// A Jet carries the value and the first kMaxOrder derivatives of an analytic
// function at a point, divided by factorials (i.e. Taylor coefficients).
// Evaluating a formula in jets yields analytic derivatives with no finite
// differencing.

#include <array>
#include <complex>
#include <cstddef>

namespace zetasum {

using Complex = std::complex<double>;

class Jet {
public:
    static constexpr int kMaxOrder = 6;  // coefficients c0..c6

    Jet() { coef_.fill(Complex(0.0, 0.0)); }

    // Constant jet.
    explicit Jet(Complex value) : Jet() { coef_[0] = value; }
    explicit Jet(double value) : Jet(Complex(value, 0.0)) {}

    // The identity jet s0 + h (value plus the seed of differentiation).
    static Jet variable(Complex value) {
        Jet j(value);
        j.coef_[1] = Complex(1.0, 0.0);
        return j;
    }

    Complex& operator[](int k) { return coef_[k]; }
    const Complex& operator[](int k) const { return coef_[k]; }

    Complex value() const { return coef_[0]; }

    // k-th derivative: k! * c_k.
    Complex derivative(int k) const {
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        return coef_[k] * fact;
    }

    Jet operator-() const {
        Jet r;
        for (int k = 0; k <= kMaxOrder; ++k) r.coef_[k] = -coef_[k];
        return r;
    }

    Jet& operator+=(const Jet& o) {
        for (int k = 0; k <= kMaxOrder; ++k) coef_[k] += o.coef_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int k = 0; k <= kMaxOrder; ++k) coef_[k] -= o.coef_[k];
        return *this;
    }
    Jet& operator*=(Complex c) {
        for (int k = 0; k <= kMaxOrder; ++k) coef_[k] *= c;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator+(Jet a, Complex b) { a[0] += b; return a; }
    friend Jet operator+(Complex b, Jet a) { a[0] += b; return a; }
    friend Jet operator-(Jet a, Complex b) { a[0] -= b; return a; }
    friend Jet operator-(Complex b, const Jet& a) { Jet r = -a; r[0] += b; return r; }
    friend Jet operator*(Jet a, Complex c) { return a *= c; }
    friend Jet operator*(Complex c, Jet a) { return a *= c; }
    friend Jet operator*(Jet a, double c) { return a *= Complex(c, 0.0); }
    friend Jet operator*(double c, Jet a) { return a *= Complex(c, 0.0); }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (int i = 0; i <= kMaxOrder; ++i) {
            if (a.coef_[i] == Complex(0.0, 0.0)) continue;
            for (int j = 0; i + j <= kMaxOrder; ++j)
                r.coef_[i + j] += a.coef_[i] * b.coef_[j];
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator/(Jet a, Complex c) {
        for (int k = 0; k <= kMaxOrder; ++k) a.coef_[k] /= c;
        return a;
    }

private:
    std::array<Complex, kMaxOrder + 1> coef_;
};

// Elementary functions lifted to jets (principal branches).
Jet jet_exp(const Jet& a);
Jet jet_log(const Jet& a);
Jet jet_sin(const Jet& a);
Jet jet_cos(const Jet& a);
Jet jet_pow(Complex base, const Jet& expo);  // base^expo = exp(expo*log base)
Jet jet_pow_int(const Jet& a, int n);        // integer powers, n may be negative
Jet jet_lgamma(const Jet& a);                // log Gamma, Lanczos approximation
Jet jet_reciprocal(const Jet& a);

}  // namespace zetasum
