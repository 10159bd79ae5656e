#pragma once

// Dirichlet characters mod q (root-of-unity exponent tables), the
// square-root-count bias c(q, a), L-function evaluation via Hurwitz zeta,
// and the L-zero approximation to pi_{q,a}(x).

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zetasum/jet.hpp"

namespace zetasum {

struct Character {
    int q = 1;
    int index = 0;  // 0 = principal; mixed-radix index over the unit group
    bool principal = true;
    int order = 1;  // lcm of component orders
    // exponents[a % q] = e with chi(a) = exp(2 pi i e / order), or -1 when
    // gcd(a, q) > 1 (chi(a) = 0).
    std::vector<int> exponents;

    Complex operator()(std::int64_t a) const;
    bool is_real() const;
};

struct CharacterTable {
    int q;
    std::vector<Character> characters;  // characters[0] is principal

    int phi() const { return static_cast<int>(characters.size()); }
};

CharacterTable characters_mod(int q);

// c(q, a) = -1 + #{b mod q : b^2 = a mod q}.  Requires gcd(q, a) = 1.
int c_bias(int q, std::int64_t a);

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q); for the principal character
// s = 1 is a pole.
Complex l_function(const Character& chi, Complex s);

// Positive ordinates and magnitudes of negative ordinates of the zeros used
// for chi (for real characters the negative list mirrors the positive one).
struct LZeroSet {
    std::vector<double> positive;
    std::vector<double> negative;
};

// E(x, chi) = sum over N positive and N negative ordinates rho of
// x^{i rho} / (1/2 + i rho).  Throws std::runtime_error when the set holds
// fewer than N ordinates of either sign.
Complex e_term(double x, const Character& chi, const LZeroSet& zeros, int N);

struct APApproxParams {
    int q;
    std::int64_t a;
    int N = 0;
    double offset = 0.0;
};

// pi_{q,a}(x) ~= pi(x)/phi(q) + E(x,q,a) sqrt(x)/(phi(q) log x) + offset,
// E(x,q,a) = -c(q,a) - sum_{chi != chi_0} conj(chi(a)) E(x, chi).
// `catalogs` maps character index -> zero set (principal entry unused).
double approximate_pi_ap(const APApproxParams& params, double x,
                         const std::map<int, LZeroSet>& catalogs);

// The ad-hoc offsets that track the plotted curves: -1/2 for q in {3, 4};
// {-1/4, 0, -3/4, -1} for q = 10, a in {1, 3, 7, 9}; otherwise 0.
double default_ap_offset(int q, std::int64_t a);

// Load L_q<q>_chi<j>.txt (+ optional companion _neg files) from dir for
// every non-principal character.  Missing files throw std::runtime_error.
std::map<int, LZeroSet> load_l_zero_sets(int q, const std::string& dir);

}  // namespace zetasum
