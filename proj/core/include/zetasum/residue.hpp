#pragma once

// Residues of meromorphic quotients A(s)/B(s) at zeros of B of order 1-3 via
// closed forms, and at poles of any modest order via a numeric
// circular-contour quadrature.

#include <complex>
#include <functional>

#include "zetasum/jet.hpp"

namespace zetasum {

// A and B are supplied as jet-valued functions: the jets carry every
// derivative the closed forms need (B up to the fifth, A up to the second).
struct MeromorphicQuotient {
    std::function<Jet(Complex)> A;
    std::function<Jet(Complex)> B;
};

struct PoleSpec {
    Complex location;
    int order = 1;  // 1..4
    enum class Flavor { DenominatorZero, NumeratorPole } flavor =
        Flavor::DenominatorZero;
};

// Closed-form residue for denominator zeros of order 1, 2, or 3:
//   order 1: A/B'
//   order 2: (6 A' B'' - 2 A B''') / (3 B''^2)
//   order 3: (120 B'''^2 A'' - 60 B4 B''' A' - 12 A B5 B''' + 15 A B4^2)
//            / (40 B'''^3)
// Throws on unsupported order or when the claimed leading derivative of B
// vanishes (inconsistent order).
Complex residue_closed_form(const MeromorphicQuotient& q, const PoleSpec& p);

struct ResidueEstimate {
    Complex value;
    double error;  // node-doubling estimate
};

// (1/2 pi i) contour integral of f over the circle |s - s0| = radius with a
// trapezoidal rule; nodes >= 64, the error estimated by node doubling.
// Throws std::runtime_error when node-doubling fails to converge.
ResidueEstimate residue_numeric_circle(
    const std::function<Complex(Complex)>& f, Complex s0, double radius,
    int nodes = 128);

}  // namespace zetasum
