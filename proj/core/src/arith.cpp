#include "zetasum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace zetasum {

namespace {

// Smallest-prime-factor sieve, grown on demand and then shared read-only.
class SpfSieve {
public:
    const std::vector<std::int32_t>& ensure(std::int64_t limit) {
        std::lock_guard<std::mutex> lock(mu_);
        if (static_cast<std::int64_t>(spf_.size()) <= limit) grow(limit);
        return spf_;
    }

private:
    void grow(std::int64_t limit) {
        std::int64_t n = std::max<std::int64_t>(limit, 1024);
        spf_.assign(n + 1, 0);
        for (std::int64_t i = 2; i <= n; ++i) {
            if (spf_[i] == 0) {
                for (std::int64_t j = i; j <= n; j += i)
                    if (spf_[j] == 0) spf_[j] = static_cast<std::int32_t>(i);
            }
        }
    }

    std::mutex mu_;
    std::vector<std::int32_t> spf_;
};

SpfSieve& sieve() {
    static SpfSieve s;
    return s;
}

double sigma1(const std::vector<PrimePower>& f, int exponent_scale) {
    // sigma(n^k) with k = exponent_scale: product of (p^{k e + 1} - 1)/(p - 1)
    double r = 1.0;
    for (const auto& pp : f) {
        double term = 0.0, power = 1.0;
        for (int i = 0; i <= exponent_scale * pp.e; ++i) {
            term += power;
            power *= static_cast<double>(pp.p);
        }
        r *= term;
    }
    return r;
}

double tau_of(const std::vector<PrimePower>& f, int exponent_scale) {
    double r = 1.0;
    for (const auto& pp : f) r *= (exponent_scale * pp.e + 1);
    return r;
}

int big_omega(const std::vector<PrimePower>& f) {
    int r = 0;
    for (const auto& pp : f) r += pp.e;
    return r;
}

}  // namespace

std::string function_id_name(ArithmeticFunctionId id) {
    switch (id) {
        case ArithmeticFunctionId::Lambda_vonMangoldt: return "psi";
        case ArithmeticFunctionId::Mu: return "mertens";
        case ArithmeticFunctionId::SquarefreeIndicator: return "squarefree";
        case ArithmeticFunctionId::Phi: return "totient";
        case ArithmeticFunctionId::Liouville: return "liouville";
        case ArithmeticFunctionId::TwoPowNu: return "two-pow-nu";
        case ArithmeticFunctionId::SigmaOfSquare: return "sigma-of-square";
        case ArithmeticFunctionId::SigmaSquared: return "sigma-squared";
        case ArithmeticFunctionId::TauOfSquare: return "tau-of-square";
        case ArithmeticFunctionId::TauSquared: return "tau-squared";
        case ArithmeticFunctionId::SigmaTau: return "sigma-tau";
        case ArithmeticFunctionId::LiouvilleTau: return "lambda-tau";
        case ArithmeticFunctionId::LiouvilleTwoPowNu: return "lambda-two-pow-nu";
        case ArithmeticFunctionId::LiouvilleTauOfSquare: return "lambda-tau-of-square";
        case ArithmeticFunctionId::LiouvilleTauSquared: return "lambda-tau-squared";
        case ArithmeticFunctionId::LiouvilleSigma: return "lambda-sigma";
        case ArithmeticFunctionId::LiouvilleSigmaSquared: return "lambda-sigma-squared";
        case ArithmeticFunctionId::LiouvilleSigmaTau: return "lambda-sigma-tau";
        case ArithmeticFunctionId::GcdSum: return "gcd-sum";
        case ArithmeticFunctionId::SquareFullIndicator: return "square-full";
    }
    throw std::logic_error("function_id_name: unknown id");
}

ArithmeticFunctionId parse_function_id(const std::string& name) {
    for (auto id : kAllFunctionIds)
        if (function_id_name(id) == name) return id;
    throw std::invalid_argument("unknown arithmetic function id: " + name);
}

std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw std::domain_error("factorize: need n >= 1");
    std::vector<PrimePower> f;
    if (n == 1) return f;
    if (n <= 50000000) {
        const auto& spf = sieve().ensure(n);
        while (n > 1) {
            std::int64_t p = spf[n];
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
        return f;
    }
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

double arith_value(ArithmeticFunctionId id, std::int64_t n) {
    if (n < 1) throw std::domain_error("arith_value: need n >= 1");
    const auto f = factorize(n);
    const int nu = static_cast<int>(f.size());
    const int omega = big_omega(f);
    const double lam = (omega % 2 == 0) ? 1.0 : -1.0;
    switch (id) {
        case ArithmeticFunctionId::Lambda_vonMangoldt:
            return (nu == 1) ? std::log(static_cast<double>(f[0].p)) : 0.0;
        case ArithmeticFunctionId::Mu: {
            for (const auto& pp : f)
                if (pp.e >= 2) return 0.0;
            return (nu % 2 == 0) ? 1.0 : -1.0;
        }
        case ArithmeticFunctionId::SquarefreeIndicator: {
            for (const auto& pp : f)
                if (pp.e >= 2) return 0.0;
            return 1.0;
        }
        case ArithmeticFunctionId::Phi: {
            double r = 1.0;
            for (const auto& pp : f)
                r *= std::pow(static_cast<double>(pp.p), pp.e - 1) * (pp.p - 1);
            return r;
        }
        case ArithmeticFunctionId::Liouville:
            return lam;
        case ArithmeticFunctionId::TwoPowNu:
            return std::pow(2.0, nu);
        case ArithmeticFunctionId::SigmaOfSquare:
            return sigma1(f, 2);
        case ArithmeticFunctionId::SigmaSquared: {
            double s = sigma1(f, 1);
            return s * s;
        }
        case ArithmeticFunctionId::TauOfSquare:
            return tau_of(f, 2);
        case ArithmeticFunctionId::TauSquared: {
            double t = tau_of(f, 1);
            return t * t;
        }
        case ArithmeticFunctionId::SigmaTau:
            return sigma1(f, 1) * tau_of(f, 1);
        case ArithmeticFunctionId::LiouvilleTau:
            return lam * tau_of(f, 1);
        case ArithmeticFunctionId::LiouvilleTwoPowNu:
            return lam * std::pow(2.0, nu);
        case ArithmeticFunctionId::LiouvilleTauOfSquare:
            return lam * tau_of(f, 2);
        case ArithmeticFunctionId::LiouvilleTauSquared: {
            double t = tau_of(f, 1);
            return lam * t * t;
        }
        case ArithmeticFunctionId::LiouvilleSigma:
            return lam * sigma1(f, 1);
        case ArithmeticFunctionId::LiouvilleSigmaSquared: {
            double s = sigma1(f, 1);
            return lam * s * s;
        }
        case ArithmeticFunctionId::LiouvilleSigmaTau:
            return lam * sigma1(f, 1) * tau_of(f, 1);
        case ArithmeticFunctionId::GcdSum: {
            // multiplicative with P(p^e) = (e+1) p^e - e p^{e-1}
            double r = 1.0;
            for (const auto& pp : f) {
                double pe1 = std::pow(static_cast<double>(pp.p), pp.e - 1);
                r *= (pp.e + 1) * pe1 * pp.p - pp.e * pe1;
            }
            return r;
        }
        case ArithmeticFunctionId::SquareFullIndicator: {
            for (const auto& pp : f)
                if (pp.e < 2) return 0.0;
            return 1.0;
        }
    }
    throw std::logic_error("arith_value: unknown id");
}

double SummatoryTable::at(double x) const {
    std::int64_t n = static_cast<std::int64_t>(std::floor(x));
    if (n < 0) n = 0;
    if (n > x_max) throw std::out_of_range("SummatoryTable::at: beyond x_max");
    return values[static_cast<std::size_t>(n)];
}

SummatoryTable build_summatory_table(ArithmeticFunctionId id, std::int64_t x_max) {
    if (x_max < 1) throw std::domain_error("build_summatory_table: x_max >= 1");
    sieve().ensure(x_max);
    SummatoryTable t{id, x_max, {}};
    t.values.resize(static_cast<std::size_t>(x_max) + 1);
    t.values[0] = 0.0;
    double acc = 0.0;
    for (std::int64_t n = 1; n <= x_max; ++n) {
        acc += arith_value(id, n);
        t.values[static_cast<std::size_t>(n)] = acc;
    }
    return t;
}

double summatory_exact(ArithmeticFunctionId id, double x) {
    if (x < 1.0) throw std::domain_error("summatory_exact: need x >= 1");
    const std::int64_t nx = static_cast<std::int64_t>(std::floor(x));
    double acc = 0.0;
    for (std::int64_t n = 1; n <= nx; ++n) acc += arith_value(id, n);
    return acc;
}

double summatory_midpoint(ArithmeticFunctionId id, double x) {
    double s = summatory_exact(id, x);
    const double fx = std::floor(x);
    if (x == fx)
        s -= 0.5 * arith_value(id, static_cast<std::int64_t>(fx));
    return s;
}

std::int64_t prime_count(double x) {
    if (x < 2.0) return 0;
    const std::int64_t nx = static_cast<std::int64_t>(std::floor(x));
    const auto& spf = sieve().ensure(nx);
    std::int64_t c = 0;
    for (std::int64_t n = 2; n <= nx; ++n)
        if (spf[n] == n) ++c;
    return c;
}

std::int64_t prime_count_in_ap(double x, std::int64_t q, std::int64_t a) {
    if (q < 1) throw std::domain_error("prime_count_in_ap: need q >= 1");
    a %= q;
    if (a < 0) a += q;
    if (std::gcd(q, a) != 1)
        throw std::domain_error("prime_count_in_ap: need gcd(q, a) = 1");
    if (x < 2.0) return 0;
    const std::int64_t nx = static_cast<std::int64_t>(std::floor(x));
    const auto& spf = sieve().ensure(nx);
    std::int64_t c = 0;
    for (std::int64_t n = 2; n <= nx; ++n)
        if (spf[n] == n && n % q == a) ++c;
    return c;
}

double prime_count_midpoint(double x) {
    double c = static_cast<double>(prime_count(x));
    const double fx = std::floor(x);
    if (x == fx && x >= 2.0) {
        std::int64_t n = static_cast<std::int64_t>(fx);
        const auto& spf = sieve().ensure(n);
        if (spf[n] == n) c -= 0.5;
    }
    return c;
}

}  // namespace zetasum
