#pragma once

// Exact arithmetic functions and their summatory step functions: the
// ground-truth oracle every approximation in this repository is judged
// against.

#include <cstdint>
#include <string>
#include <vector>

namespace zetasum {

enum class ArithmeticFunctionId {
    Lambda_vonMangoldt,   // von Mangoldt Lambda(n)
    Mu,                   // Moebius mu(n)
    SquarefreeIndicator,  // q(n) = [n squarefree]
    Phi,                  // Euler totient
    Liouville,            // lambda(n) = (-1)^Omega(n)
    TwoPowNu,             // 2^nu(n), number of squarefree divisors
    SigmaOfSquare,        // sigma(n^2)
    SigmaSquared,         // sigma(n)^2
    TauOfSquare,          // tau(n^2)
    TauSquared,           // tau(n)^2
    SigmaTau,             // sigma(n) tau(n)
    LiouvilleTau,         // lambda(n) tau(n)
    LiouvilleTwoPowNu,    // lambda(n) 2^nu(n)
    LiouvilleTauOfSquare, // lambda(n) tau(n^2)
    LiouvilleTauSquared,  // lambda(n) tau(n)^2
    LiouvilleSigma,       // lambda(n) sigma(n)
    LiouvilleSigmaSquared,// lambda(n) sigma(n)^2
    LiouvilleSigmaTau,    // lambda(n) sigma(n) tau(n)
    GcdSum,               // P(n) = sum_k gcd(k, n)
    SquareFullIndicator,  // f2(n) = [every prime exponent >= 2]
};

inline constexpr ArithmeticFunctionId kAllFunctionIds[] = {
    ArithmeticFunctionId::Lambda_vonMangoldt,
    ArithmeticFunctionId::Mu,
    ArithmeticFunctionId::SquarefreeIndicator,
    ArithmeticFunctionId::Phi,
    ArithmeticFunctionId::Liouville,
    ArithmeticFunctionId::TwoPowNu,
    ArithmeticFunctionId::SigmaOfSquare,
    ArithmeticFunctionId::SigmaSquared,
    ArithmeticFunctionId::TauOfSquare,
    ArithmeticFunctionId::TauSquared,
    ArithmeticFunctionId::SigmaTau,
    ArithmeticFunctionId::LiouvilleTau,
    ArithmeticFunctionId::LiouvilleTwoPowNu,
    ArithmeticFunctionId::LiouvilleTauOfSquare,
    ArithmeticFunctionId::LiouvilleTauSquared,
    ArithmeticFunctionId::LiouvilleSigma,
    ArithmeticFunctionId::LiouvilleSigmaSquared,
    ArithmeticFunctionId::LiouvilleSigmaTau,
    ArithmeticFunctionId::GcdSum,
    ArithmeticFunctionId::SquareFullIndicator,
};

// Stable CLI-facing names ("psi", "mertens", "tau-squared", ...).
std::string function_id_name(ArithmeticFunctionId id);
ArithmeticFunctionId parse_function_id(const std::string& name);

struct PrimePower {
    std::int64_t p;
    int e;
};

// Trial factorization backed by a cached smallest-prime-factor sieve.
std::vector<PrimePower> factorize(std::int64_t n);

// Exact value of the arithmetic function at n (log of a prime for Lambda).
// All integer-valued functions stay below 2^53 at desk scale, so the double
// return is exact.  Throws std::domain_error for n < 1.
double arith_value(ArithmeticFunctionId id, std::int64_t n);

struct SummatoryTable {
    ArithmeticFunctionId id;
    std::int64_t x_max;
    std::vector<double> values;  // values[n] = sum_{m<=n} a(m); values[0] = 0

    double at(double x) const;  // value at floor(x)
};

SummatoryTable build_summatory_table(ArithmeticFunctionId id, std::int64_t x_max);

// Sum_{n <= floor(x)} arith_value(id, n).
double summatory_exact(ArithmeticFunctionId id, double x);

// Midpoint convention: at an integer jump point, half the final term.
double summatory_midpoint(ArithmeticFunctionId id, double x);

// Exact prime counts by sieve.
std::int64_t prime_count(double x);
std::int64_t prime_count_in_ap(double x, std::int64_t q, std::int64_t a);

// pi_0(x): prime count under the midpoint convention.
double prime_count_midpoint(double x);

}  // namespace zetasum
