#include "zetasum/residue.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zetasum {

namespace {
const double kPi = 3.14159265358979323846;
}

Complex residue_closed_form(const MeromorphicQuotient& q, const PoleSpec& p) {
    if (p.flavor != PoleSpec::Flavor::DenominatorZero)
        throw std::invalid_argument(
            "residue_closed_form: only denominator zeros supported");
    Jet A = q.A(p.location);
    Jet B = q.B(p.location);
    switch (p.order) {
        case 1: {
            Complex b1 = B.derivative(1);
            if (std::abs(b1) < 1e-14)
                throw std::runtime_error(
                    "residue_closed_form: B'(s)=0, order-1 claim inconsistent");
            return A.value() / b1;
        }
        case 2: {
            Complex a0 = A.value(), a1 = A.derivative(1);
            Complex b2 = B.derivative(2), b3 = B.derivative(3);
            if (std::abs(b2) < 1e-14)
                throw std::runtime_error(
                    "residue_closed_form: B''(s)=0, order-2 claim inconsistent");
            return (6.0 * a1 * b2 - 2.0 * a0 * b3) / (3.0 * b2 * b2);
        }
        case 3: {
            Complex a0 = A.value(), a1 = A.derivative(1), a2 = A.derivative(2);
            Complex b3 = B.derivative(3), b4 = B.derivative(4),
                    b5 = B.derivative(5);
            if (std::abs(b3) < 1e-14)
                throw std::runtime_error(
                    "residue_closed_form: B'''(s)=0, order-3 claim inconsistent");
            return (120.0 * b3 * b3 * a2 - 60.0 * b4 * b3 * a1 -
                    12.0 * a0 * b5 * b3 + 15.0 * a0 * b4 * b4) /
                   (40.0 * b3 * b3 * b3);
        }
        default:
            throw std::invalid_argument(
                "residue_closed_form: order must be 1..3");
    }
}

namespace {

Complex circle_sum(const std::function<Complex(Complex)>& f, Complex s0,
                   double radius, int nodes) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < nodes; ++k) {
        double theta = 2.0 * kPi * k / nodes;
        Complex w = std::polar(radius, theta);
        // (1/2 pi i) * integral f dz over the circle = (1/nodes) sum f * w
        acc += f(s0 + w) * w;
    }
    return acc / static_cast<double>(nodes);
}

}  // namespace

ResidueEstimate residue_numeric_circle(
    const std::function<Complex(Complex)>& f, Complex s0, double radius,
    int nodes) {
    if (nodes < 64) nodes = 64;
    Complex coarse = circle_sum(f, s0, radius, nodes);
    Complex fine = circle_sum(f, s0, radius, 2 * nodes);
    double err = std::abs(fine - coarse);
    if (err > 1e-4 * (1.0 + std::abs(fine))) {
        // one more doubling before giving up
        Complex finer = circle_sum(f, s0, radius, 4 * nodes);
        double err2 = std::abs(finer - fine);
        if (err2 > 1e-4 * (1.0 + std::abs(finer)))
            throw std::runtime_error(
                "residue_numeric_circle: node-doubling did not converge");
        return {finer, err2};
    }
    return {fine, err};
}

}  // namespace zetasum
