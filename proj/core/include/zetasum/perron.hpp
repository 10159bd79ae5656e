#pragma once

// Numerical contour integration of F(s) x^s / s: vertical line segments
// (the Perron estimate), rectangle boundaries, and the cross-check that the
// rectangle total equals the sum of enclosed residues.

#include <complex>
#include <string>
#include <vector>

#include "zetasum/formulas.hpp"
#include "zetasum/quadrature.hpp"
#include "zetasum/zero_catalog.hpp"

namespace zetasum {

struct RectangleContour {
    double c;  // right abscissa
    double a;  // left abscissa
    double T;  // half-height
};

struct LineEstimate {
    Complex value;
    double error;
    bool converged;
};

struct SideIntegrals {
    Complex I1, I2, I3, I4;  // right up, top leftward, left down, bottom right
    Complex total;
    double error;
    double T_used;  // after any boundary nudge
    bool nudged = false;
};

// F(s) x^s / s.  Throws std::domain_error within 1e-6 of a pole of the
// integrand (s = 0, zeta poles of positive factors, zeta zeros under
// negative factors).
Complex integrand(ArithmeticFunctionId id, Complex s, double x);

// (1/2 pi i) * integral over the segment from c - iT to c + iT.
LineEstimate integrate_line(ArithmeticFunctionId id, double x, double c,
                            double T, const QuadratureConfig& config = {});

// Counterclockwise rectangle: all four sides with the (1/2 pi i) prefactor.
// If T sits within 1e-3 of a mapped zero-site ordinate it is nudged by
// +0.05 (repeatedly if needed) and the result notes the nudge.
SideIntegrals integrate_rectangle(ArithmeticFunctionId id, double x,
                                  RectangleContour rect,
                                  const QuadratureConfig& config = {});

struct EnclosedPole {
    Complex site;
    std::string kind;  // "smooth" | "zero-pair" | "real-zero"
    double contribution;  // real contribution to the total
};

struct ResidueComparison {
    double residue_total;
    Complex rectangle_total;
    double discrepancy;
    std::vector<EnclosedPole> poles;
    bool nudged;
    double T_used;
};

// Enumerates every pole inside the rectangle (smooth sites, trivial-zero
// sites, catalog zero sites with |alpha| * t < T), sums the closed-form
// residues, and compares with the numeric rectangle total.
ResidueComparison residue_vs_rectangle(ArithmeticFunctionId id, double x,
                                       RectangleContour rect,
                                       const ZeroCatalog& catalog,
                                       const QuadratureConfig& config = {});

// integrate_line estimates over an increasing T grid, computed
// incrementally (each step integrates only the new band).
std::vector<double> integral_vs_T_profile(ArithmeticFunctionId id, double x,
                                          double c,
                                          const std::vector<double>& T_grid,
                                          const QuadratureConfig& config = {});

}  // namespace zetasum
