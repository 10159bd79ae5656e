#pragma once

// Registry of explicit-formula descriptors: for each arithmetic function the
// zeta-factor product of its Dirichlet series, the smooth residue terms, the
// per-zero oscillatory terms, and the real-zero (trivial-zero) terms.
//
// All residues are evaluated in closed form by truncated-Laurent algebra over
// analytic zeta jets; printed decimals from the literature appear only as
// test fixtures.

#include <complex>
#include <string>
#include <vector>

#include "zetasum/arith.hpp"
#include "zetasum/jet.hpp"
#include "zetasum/zero_catalog.hpp"

namespace zetasum {

// One zeta(a*s + b)^exponent factor of F(s).
struct DirichletFactor {
    double a;
    double b;
    int exponent;
};

enum class RealZeroBehavior { Vanishes, Convergent, Divergent };

// Complex zeros rho of the denominator zeta factors induce poles of the
// Perron integrand at alpha*rho + beta.
struct ZeroSiteFamily {
    double alpha;
    double beta;
};

struct FormulaDescriptor {
    ArithmeticFunctionId id;
    std::vector<DirichletFactor> factors;
    bool log_derivative = false;  // F = -zeta'/zeta (psi)
    double c_min = 1.0;           // abscissa of convergence
    std::vector<double> smooth_sites;  // pole sites of F(s)x^s/s off the zeros
    std::vector<ZeroSiteFamily> zero_sites;
    RealZeroBehavior real_zero_behavior = RealZeroBehavior::Convergent;
};

const FormulaDescriptor& descriptor(ArithmeticFunctionId id);

// F(s): the zeta-factor product (or -zeta'/zeta).
Complex dirichlet_f(ArithmeticFunctionId id, Complex s);

// Residue of F(s) x^s / s at s0, expressed as
// x^{s0} * sum_j coef[j] (log x)^j   (x-independent closed form).
struct LogPolynomial {
    Complex s0;
    std::vector<Complex> coef;

    Complex eval(double x) const;
    bool zero() const { return coef.empty(); }
};

LogPolynomial residue_log_poly(ArithmeticFunctionId id, Complex s0);

struct SmoothTerm {
    double coefficient;
    double x_exponent;
    int log_power;
    double site;  // pole site this term came from
};

const std::vector<SmoothTerm>& smooth_terms(ArithmeticFunctionId id);
double smooth_part(ArithmeticFunctionId id, double x);

// Contribution of one catalog zero (all of its induced pole sites), before
// conjugate doubling.  Throws std::runtime_error when |zeta'(rho)| < 1e-12
// (simplicity violation).
Complex zero_term(ArithmeticFunctionId id, Complex rho, double x);

// k-th trivial-zero contribution (rho = -2k mapped through the site
// families); exactly 0 for the vanishing ids.
double real_zero_term(ArithmeticFunctionId id, int k, double x);

// The distinct integrand pole sites induced by the k-th trivial zero
// (excluding sites that coincide with smooth sites).
std::vector<double> real_zero_pole_sites(ArithmeticFunctionId id, int k);

struct ApproximationResult {
    double x;
    double smooth;
    double zero_sum;
    double real_zero_sum;
    double total;  // smooth + zero_sum + real_zero_sum (divergent: excluded)
    bool real_part_report_only = false;
    std::string warning;
};

// Precomputes the per-zero residue polynomials so grids of x evaluate fast.
class ZeroTermEvaluator {
public:
    ZeroTermEvaluator(ArithmeticFunctionId id, const ZeroCatalog& catalog,
                      int pairs);
    // 2 Re sum of the per-zero terms at x.
    double sum2re(double x) const;
    int pairs() const { return static_cast<int>(polys_.size()); }

private:
    std::vector<std::vector<LogPolynomial>> polys_;  // per zero, per site
};

ApproximationResult approximate(ArithmeticFunctionId id, double x, int N,
                                int M, const ZeroCatalog& catalog);
ApproximationResult approximate(ArithmeticFunctionId id, double x,
                                const ZeroTermEvaluator& evaluator, int M);

// sqrt(x) * (cos, sin)(t_k log x).
std::pair<double, double> zero_basis_function(double t_k, double x);

}  // namespace zetasum
