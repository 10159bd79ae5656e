#include "zetasum/formulas.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "zetasum/zeta.hpp"

namespace zetasum {

namespace {

// ---------------------------------------------------------------------------
// Descriptor registry
// ---------------------------------------------------------------------------

std::vector<FormulaDescriptor> make_registry() {
    using Id = ArithmeticFunctionId;
    using B = RealZeroBehavior;
    std::vector<FormulaDescriptor> r;

    auto add = [&r](Id id, std::vector<DirichletFactor> factors, double c_min,
                    std::vector<double> smooth, std::vector<ZeroSiteFamily> zs,
                    B behavior, bool logderiv = false) {
        FormulaDescriptor d;
        d.id = id;
        d.factors = std::move(factors);
        d.log_derivative = logderiv;
        d.c_min = c_min;
        d.smooth_sites = std::move(smooth);
        d.zero_sites = std::move(zs);
        d.real_zero_behavior = behavior;
        r.push_back(std::move(d));
    };

    // psi: -zeta'/zeta
    add(Id::Lambda_vonMangoldt, {{1, 0, -1}}, 1.0, {0.0, 1.0}, {{1, 0}},
        B::Convergent, true);
    // M: 1/zeta
    add(Id::Mu, {{1, 0, -1}}, 1.0, {0.0}, {{1, 0}}, B::Convergent);
    // Q: zeta(s)/zeta(2s)
    add(Id::SquarefreeIndicator, {{1, 0, 1}, {2, 0, -1}}, 1.0, {0.0, 1.0},
        {{0.5, 0}}, B::Convergent);
    // Phi: zeta(s-1)/zeta(s)
    add(Id::Phi, {{1, -1, 1}, {1, 0, -1}}, 2.0, {0.0, 2.0}, {{1, 0}},
        B::Convergent);
    // Liouville L: zeta(2s)/zeta(s)
    add(Id::Liouville, {{2, 0, 1}, {1, 0, -1}}, 1.0, {0.0, 0.5}, {{1, 0}},
        B::Vanishes);
    // 2^nu: zeta(s)^2/zeta(2s)
    add(Id::TwoPowNu, {{1, 0, 2}, {2, 0, -1}}, 1.0, {0.0, 1.0}, {{0.5, 0}},
        B::Convergent);
    // sigma(n^2): zeta(s) zeta(s-1) zeta(s-2) / zeta(2s-2)
    add(Id::SigmaOfSquare, {{1, 0, 1}, {1, -1, 1}, {1, -2, 1}, {2, -2, -1}},
        3.0, {0.0, 1.0, 2.0, 3.0}, {{0.5, 1}}, B::Vanishes);
    // sigma(n)^2: zeta(s) zeta(s-1)^2 zeta(s-2) / zeta(2s-2)
    add(Id::SigmaSquared, {{1, 0, 1}, {1, -1, 2}, {1, -2, 1}, {2, -2, -1}},
        3.0, {0.0, 1.0, 2.0, 3.0}, {{0.5, 1}}, B::Vanishes);
    // tau(n^2): zeta(s)^3/zeta(2s)
    add(Id::TauOfSquare, {{1, 0, 3}, {2, 0, -1}}, 1.0, {0.0, 1.0}, {{0.5, 0}},
        B::Convergent);
    // tau(n)^2: zeta(s)^4/zeta(2s)
    add(Id::TauSquared, {{1, 0, 4}, {2, 0, -1}}, 1.0, {0.0, 1.0}, {{0.5, 0}},
        B::Convergent);
    // sigma tau: zeta(s)^2 zeta(s-1)^2 / zeta(2s-1)
    add(Id::SigmaTau, {{1, 0, 2}, {1, -1, 2}, {2, -1, -1}}, 2.0,
        {0.0, 1.0, 2.0}, {{0.5, 0.5}}, B::Convergent);
    // lambda tau: zeta(2s)^2/zeta(s)^2
    add(Id::LiouvilleTau, {{2, 0, 2}, {1, 0, -2}}, 1.0, {0.0, 0.5}, {{1, 0}},
        B::Vanishes);
    // lambda 2^nu: zeta(2s)/zeta(s)^2
    add(Id::LiouvilleTwoPowNu, {{2, 0, 1}, {1, 0, -2}}, 1.0, {0.0, 0.5},
        {{1, 0}}, B::Divergent);
    // lambda tau(n^2): zeta(2s)^2/zeta(s)^3
    add(Id::LiouvilleTauOfSquare, {{2, 0, 2}, {1, 0, -3}}, 1.0, {0.0, 0.5},
        {{1, 0}}, B::Divergent);
    // lambda tau(n)^2: zeta(2s)^3/zeta(s)^4
    add(Id::LiouvilleTauSquared, {{2, 0, 3}, {1, 0, -4}}, 1.0, {0.0, 0.5},
        {{1, 0}}, B::Divergent);
    // lambda sigma: zeta(2s) zeta(2s-2) / (zeta(s) zeta(s-1))
    add(Id::LiouvilleSigma, {{2, 0, 1}, {2, -2, 1}, {1, 0, -1}, {1, -1, -1}},
        2.0, {0.5, 1.5}, {{1, 0}, {1, 1}}, B::Vanishes);
    // lambda sigma^2: zeta(2s) zeta(2s-2) zeta(2s-4)
    //                / (zeta(s) zeta(s-2) zeta(s-1)^2)
    add(Id::LiouvilleSigmaSquared,
        {{2, 0, 1}, {2, -2, 1}, {2, -4, 1}, {1, 0, -1}, {1, -2, -1},
         {1, -1, -2}},
        3.0, {0.5, 1.5, 2.5}, {{1, 0}, {1, 1}, {1, 2}}, B::Vanishes);
    // lambda sigma tau: zeta(2s)^2 zeta(2s-2)^2
    //                  / (zeta(2s-1) zeta(s)^2 zeta(s-1)^2)
    add(Id::LiouvilleSigmaTau,
        {{2, 0, 2}, {2, -2, 2}, {2, -1, -1}, {1, 0, -2}, {1, -1, -2}}, 2.0,
        {0.5, 1.5}, {{0.5, 0.5}, {1, 0}, {1, 1}}, B::Divergent);
    // gcd sum: zeta(s-1)^2/zeta(s)
    add(Id::GcdSum, {{1, -1, 2}, {1, 0, -1}}, 2.0, {0.0, 2.0}, {{1, 0}},
        B::Convergent);
    // square-full indicator: zeta(2s) zeta(3s) / zeta(6s)
    add(Id::SquareFullIndicator, {{2, 0, 1}, {3, 0, 1}, {6, 0, -1}}, 0.5,
        {0.0, 1.0 / 3.0, 0.5}, {{1.0 / 6.0, 0}}, B::Convergent);

    return r;
}

const std::vector<FormulaDescriptor>& registry() {
    static const std::vector<FormulaDescriptor> r = make_registry();
    return r;
}

// ---------------------------------------------------------------------------
// Truncated Laurent series in u = s - s0
// ---------------------------------------------------------------------------

struct LaurentSeries {
    int lead = 0;            // exponent of c[0]
    std::vector<Complex> c;  // c[i] = coefficient of u^(lead + i)

    int count() const { return static_cast<int>(c.size()); }

    Complex at(int exponent) const {
        int i = exponent - lead;
        if (i < 0 || i >= count()) return Complex(0.0, 0.0);
        return c[static_cast<std::size_t>(i)];
    }
};

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    r.lead = a.lead + b.lead;
    int n = std::min(a.count(), b.count());
    r.c.assign(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j)
            r.c[static_cast<std::size_t>(i + j)] +=
                a.c[static_cast<std::size_t>(i)] *
                b.c[static_cast<std::size_t>(j)];
    return r;
}

LaurentSeries reciprocal(const LaurentSeries& a) {
    if (a.c.empty() || std::abs(a.c[0]) < 1e-290)
        throw std::runtime_error("laurent reciprocal: zero leading coefficient");
    LaurentSeries r;
    r.lead = -a.lead;
    int n = a.count();
    r.c.assign(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    r.c[0] = 1.0 / a.c[0];
    for (int m = 1; m < n; ++m) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j <= m; ++j)
            acc += a.c[static_cast<std::size_t>(j)] *
                   r.c[static_cast<std::size_t>(m - j)];
        r.c[static_cast<std::size_t>(m)] = -acc / a.c[0];
    }
    return r;
}

LaurentSeries power(const LaurentSeries& a, int e) {
    LaurentSeries base = (e < 0) ? reciprocal(a) : a;
    int n = std::abs(e);
    LaurentSeries r = base;
    for (int i = 1; i < n; ++i) r = multiply(r, base);
    return r;
}

// d/du of a truncated series; the top coefficient stays formally valid.
LaurentSeries derivative(const LaurentSeries& a) {
    LaurentSeries r;
    r.lead = a.lead - 1;
    r.c.resize(a.c.size());
    for (int i = 0; i < a.count(); ++i)
        r.c[static_cast<std::size_t>(i)] =
            static_cast<double>(a.lead + i) * a.c[static_cast<std::size_t>(i)];
    return r;
}

// ---------------------------------------------------------------------------
// Classification of one zeta factor at an expansion site
// ---------------------------------------------------------------------------

bool near_real_integer(Complex z, double target, double tol = 1e-6) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - target) < tol;
}

bool is_trivial_zero_site(Complex z) {
    if (std::abs(z.imag()) > 1e-9) return false;
    double r = std::round(z.real() / -2.0);
    return r >= 0.5 && std::abs(z.real() + 2.0 * r) < 1e-6;
}

// Laurent series of zeta(a s + b) about s0 in u = s - s0, before exponent.
LaurentSeries zeta_factor_series(double a, double b, Complex s0) {
    Complex z0 = a * s0 + b;
    LaurentSeries r;
    if (near_real_integer(z0, 1.0)) {
        // zeta(1 + a u) = 1/(a u) + sum_k h_k (a u)^k
        Jet h = zeta_minus_pole_jet(Complex(1.0, 0.0));
        r.lead = -1;
        r.c.resize(static_cast<std::size_t>(Jet::kMaxOrder) + 2);
        r.c[0] = Complex(1.0 / a, 0.0);
        double ak = 1.0;
        for (int k = 0; k <= Jet::kMaxOrder; ++k) {
            r.c[static_cast<std::size_t>(k) + 1] = h[k] * ak;
            ak *= a;
        }
        return r;
    }
    Jet g = zeta_jet(z0);
    bool zero_site = is_trivial_zero_site(z0) || std::abs(g.value()) < 1e-8;
    if (zero_site) {
        if (std::abs(g[1]) < 1e-12)
            throw std::runtime_error(
                "zero of zeta is not numerically simple at the expansion site");
        // drop the (tiny or exactly zero) constant term
        r.lead = 1;
        r.c.resize(static_cast<std::size_t>(Jet::kMaxOrder));
        double ak = a;
        for (int k = 1; k <= Jet::kMaxOrder; ++k) {
            r.c[static_cast<std::size_t>(k) - 1] = g[k] * ak;
            ak *= a;
        }
        return r;
    }
    r.lead = 0;
    r.c.resize(static_cast<std::size_t>(Jet::kMaxOrder) + 1);
    double ak = 1.0;
    for (int k = 0; k <= Jet::kMaxOrder; ++k) {
        r.c[static_cast<std::size_t>(k)] = g[k] * ak;
        ak *= a;
    }
    return r;
}

// Series of 1/s about s0.
LaurentSeries one_over_s_series(Complex s0) {
    LaurentSeries r;
    if (std::abs(s0) < 1e-12) {
        r.lead = -1;
        r.c.assign(16, Complex(0.0, 0.0));
        r.c[0] = Complex(1.0, 0.0);
        return r;
    }
    r.lead = 0;
    r.c.resize(16);
    Complex inv = 1.0 / s0;
    Complex term = inv;
    for (int k = 0; k < 16; ++k) {
        r.c[static_cast<std::size_t>(k)] = term;
        term *= -inv;
    }
    return r;
}

// Series of F(s)/s about s0.
LaurentSeries integrand_series(const FormulaDescriptor& d, Complex s0) {
    LaurentSeries f;
    if (d.log_derivative) {
        LaurentSeries z = zeta_factor_series(1.0, 0.0, s0);
        LaurentSeries minus_logderiv = multiply(derivative(z), reciprocal(z));
        for (auto& cc : minus_logderiv.c) cc = -cc;
        f = minus_logderiv;
    } else {
        bool first = true;
        for (const auto& fac : d.factors) {
            LaurentSeries p =
                power(zeta_factor_series(fac.a, fac.b, s0), fac.exponent);
            f = first ? p : multiply(f, p);
            first = false;
        }
    }
    return multiply(f, one_over_s_series(s0));
}

const double kLogFactorial[8] = {1, 1, 2, 6, 24, 120, 720, 5040};

LogPolynomial residue_poly_at(const FormulaDescriptor& d, Complex s0) {
    LaurentSeries g = integrand_series(d, s0);
    LogPolynomial p;
    p.s0 = s0;
    int depth = -g.lead;  // number of log powers: exponents -1 .. lead
    for (int j = 0; j < depth && j < 8; ++j)
        p.coef.push_back(g.at(-1 - j) / kLogFactorial[j]);
    while (!p.coef.empty() && std::abs(p.coef.back()) < 1e-20)
        p.coef.pop_back();
    return p;
}

// Sites where the integrand's trivial-zero poles sit for index k: one per
// denominator factor, (-2k - b)/a, deduplicated and excluding smooth sites.
std::vector<double> trivial_sites(const FormulaDescriptor& d, int k) {
    std::vector<double> sites;
    for (const auto& fac : d.factors) {
        if (fac.exponent >= 0 && !d.log_derivative) continue;
        double s = (-2.0 * k - fac.b) / fac.a;
        bool dup = false;
        for (double t : sites)
            if (std::abs(t - s) < 1e-9) dup = true;
        for (double t : d.smooth_sites)
            if (std::abs(t - s) < 1e-9) dup = true;
        if (!dup) sites.push_back(s);
    }
    if (d.log_derivative && sites.empty()) sites.push_back(-2.0 * k);
    return sites;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

const FormulaDescriptor& descriptor(ArithmeticFunctionId id) {
    for (const auto& d : registry())
        if (d.id == id) return d;
    throw std::invalid_argument("descriptor: unknown function id");
}

Complex dirichlet_f(ArithmeticFunctionId id, Complex s) {
    const auto& d = descriptor(id);
    if (d.log_derivative) {
        Jet z = zeta_jet(s);
        return -z.derivative(1) / z.value();
    }
    Complex acc(1.0, 0.0);
    for (const auto& fac : d.factors) {
        Complex z = zeta(fac.a * s + fac.b);
        Complex p = std::pow(z, fac.exponent >= 0 ? fac.exponent
                                                  : -fac.exponent);
        acc = fac.exponent >= 0 ? acc * p : acc / p;
    }
    return acc;
}

Complex LogPolynomial::eval(double x) const {
    if (coef.empty()) return Complex(0.0, 0.0);
    double lx = std::log(x);
    Complex acc(0.0, 0.0);
    double lp = 1.0;
    for (const auto& cj : coef) {
        acc += cj * lp;
        lp *= lx;
    }
    return acc * std::exp(s0 * lx);
}

LogPolynomial residue_log_poly(ArithmeticFunctionId id, Complex s0) {
    return residue_poly_at(descriptor(id), s0);
}

const std::vector<SmoothTerm>& smooth_terms(ArithmeticFunctionId id) {
    static std::map<ArithmeticFunctionId, std::vector<SmoothTerm>> cache;
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    const auto& d = descriptor(id);
    std::vector<SmoothTerm> terms;
    for (double site : d.smooth_sites) {
        LogPolynomial p = residue_poly_at(d, Complex(site, 0.0));
        for (std::size_t j = 0; j < p.coef.size(); ++j) {
            if (std::abs(p.coef[j]) < 1e-20) continue;
            terms.push_back({p.coef[j].real(), site, static_cast<int>(j), site});
        }
    }
    return cache.emplace(id, std::move(terms)).first->second;
}

double smooth_part(ArithmeticFunctionId id, double x) {
    if (x <= 1.0) throw std::domain_error("smooth_part: need x > 1");
    double lx = std::log(x);
    double acc = 0.0;
    for (const auto& t : smooth_terms(id))
        acc += t.coefficient * std::pow(x, t.x_exponent) *
               std::pow(lx, t.log_power);
    return acc;
}

Complex zero_term(ArithmeticFunctionId id, Complex rho, double x) {
    const auto& d = descriptor(id);
    Complex acc(0.0, 0.0);
    for (const auto& fam : d.zero_sites) {
        Complex site = fam.alpha * rho + fam.beta;
        acc += residue_poly_at(d, site).eval(x);
    }
    return acc;
}

std::vector<double> real_zero_pole_sites(ArithmeticFunctionId id, int k) {
    if (k < 1) throw std::domain_error("real_zero_pole_sites: need k >= 1");
    return trivial_sites(descriptor(id), k);
}

double real_zero_term(ArithmeticFunctionId id, int k, double x) {
    if (k < 1) throw std::domain_error("real_zero_term: need k >= 1");
    const auto& d = descriptor(id);
    if (d.real_zero_behavior == RealZeroBehavior::Vanishes) return 0.0;
    double acc = 0.0;
    for (double site : trivial_sites(d, k))
        acc += residue_poly_at(d, Complex(site, 0.0)).eval(x).real();
    return acc;
}

ZeroTermEvaluator::ZeroTermEvaluator(ArithmeticFunctionId id,
                                     const ZeroCatalog& catalog, int pairs) {
    const auto& d = descriptor(id);
    int n = std::min<int>(pairs, static_cast<int>(catalog.size()));
    polys_.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        Complex rho(0.5, catalog.ordinate(k));
        std::vector<LogPolynomial> site_polys;
        for (const auto& fam : d.zero_sites)
            site_polys.push_back(
                residue_poly_at(d, fam.alpha * rho + fam.beta));
        polys_.push_back(std::move(site_polys));
    }
}

double ZeroTermEvaluator::sum2re(double x) const {
    double acc = 0.0;
    for (const auto& site_polys : polys_) {
        Complex z(0.0, 0.0);
        for (const auto& p : site_polys) z += p.eval(x);
        acc += 2.0 * z.real();
    }
    return acc;
}

namespace {

ApproximationResult assemble(ArithmeticFunctionId id, double x,
                             double zero_sum, int M) {
    const auto& d = descriptor(id);
    ApproximationResult r{};
    r.x = x;
    r.smooth = smooth_part(id, x);
    r.zero_sum = zero_sum;
    r.real_zero_sum = 0.0;
    for (int k = 1; k <= M; ++k) r.real_zero_sum += real_zero_term(id, k, x);
    r.total = r.smooth + r.zero_sum;
    if (d.real_zero_behavior == RealZeroBehavior::Divergent) {
        r.real_part_report_only = true;
        r.warning =
            "real-zero series diverges; reported separately, excluded from "
            "the total";
    } else {
        r.total += r.real_zero_sum;
    }
    return r;
}

}  // namespace

ApproximationResult approximate(ArithmeticFunctionId id, double x, int N,
                                int M, const ZeroCatalog& catalog) {
    ZeroTermEvaluator ev(id, catalog, N);
    return assemble(id, x, ev.sum2re(x), M);
}

ApproximationResult approximate(ArithmeticFunctionId id, double x,
                                const ZeroTermEvaluator& evaluator, int M) {
    return assemble(id, x, evaluator.sum2re(x), M);
}

std::pair<double, double> zero_basis_function(double t_k, double x) {
    double r = std::sqrt(x), w = t_k * std::log(x);
    return {r * std::cos(w), r * std::sin(w)};
}

}  // namespace zetasum
