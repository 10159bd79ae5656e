#include "zetasum/dirichlet.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zetasum/arith.hpp"
#include "zetasum/zero_catalog.hpp"
#include "zetasum/zeta.hpp"

namespace zetasum {

namespace {

const double kPi = 3.14159265358979323846;

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

// One cyclic component of (Z/q)^*: a generator (lifted mod q) and its order.
struct CyclicComponent {
    std::int64_t generator;
    int order;
};

std::int64_t phi_of(std::int64_t n) {
    std::int64_t r = n;
    for (const auto& pp : factorize(n)) r = r / pp.p * (pp.p - 1);
    return r;
}

std::int64_t primitive_root(std::int64_t m) {
    std::int64_t phi = phi_of(m);
    std::vector<std::int64_t> prime_divs;
    for (const auto& pp : factorize(phi)) prime_divs.push_back(pp.p);
    for (std::int64_t g = 2; g < m; ++g) {
        if (std::gcd(g, m) != 1) continue;
        bool ok = true;
        for (std::int64_t p : prime_divs)
            if (pow_mod(g, phi / p, m) == 1) ok = false;
        if (ok) return g;
    }
    throw std::runtime_error("primitive_root: none found");
}

// Lift r mod m to x mod q with x = 1 mod q/m (q = m * rest, coprime parts).
std::int64_t crt_lift(std::int64_t r, std::int64_t m, std::int64_t q) {
    std::int64_t rest = q / m;
    for (std::int64_t x = r % q;; x += m)
        if (x % rest == 1 % rest) return x % q;
}

std::vector<CyclicComponent> unit_group_components(int q) {
    std::vector<CyclicComponent> comps;
    for (const auto& pp : factorize(q)) {
        std::int64_t m = 1;
        for (int i = 0; i < pp.e; ++i) m *= pp.p;
        if (pp.p == 2) {
            if (pp.e == 2) {
                comps.push_back({crt_lift(3, m, q), 2});
            } else if (pp.e >= 3) {
                comps.push_back({crt_lift(m - 1, m, q), 2});
                comps.push_back(
                    {crt_lift(5, m, q), static_cast<int>(m / 4)});
            }
            // 2^1 contributes nothing
        } else {
            comps.push_back({crt_lift(primitive_root(m), m, q),
                             static_cast<int>(phi_of(m))});
        }
    }
    return comps;
}

}  // namespace

Complex Character::operator()(std::int64_t a) const {
    std::int64_t r = a % q;
    if (r < 0) r += q;
    int e = exponents[static_cast<std::size_t>(r)];
    if (e < 0) return Complex(0.0, 0.0);
    double theta = 2.0 * kPi * e / order;
    return Complex(std::cos(theta), std::sin(theta));
}

bool Character::is_real() const {
    for (int e : exponents)
        if (e > 0 && 2 * e != order) return false;
    return true;
}

CharacterTable characters_mod(int q) {
    if (q < 1) throw std::domain_error("characters_mod: need q >= 1");
    auto comps = unit_group_components(q);
    int phi = 1;
    for (const auto& c : comps) phi *= c.order;
    if (q == 1 || q == 2) phi = 1;

    // discrete-log tuples for every unit, by enumerating the group
    std::vector<std::vector<int>> dlog(static_cast<std::size_t>(q));
    std::vector<int> tuple(comps.size(), 0);
    for (int count = 0; count < phi; ++count) {
        std::int64_t u = 1;
        for (std::size_t m = 0; m < comps.size(); ++m)
            u = u * pow_mod(comps[m].generator, tuple[m], q) % q;
        dlog[static_cast<std::size_t>(u % q)] = tuple;
        for (std::size_t m = 0; m < comps.size(); ++m) {
            if (++tuple[m] < comps[m].order) break;
            tuple[m] = 0;
        }
    }

    int order = 1;
    for (const auto& c : comps) order = std::lcm(order, c.order);

    CharacterTable table;
    table.q = q;
    std::vector<int> jt(comps.size(), 0);
    for (int j = 0; j < phi; ++j) {
        Character chi;
        chi.q = q;
        chi.index = j;
        chi.principal = (j == 0);
        chi.order = order;
        chi.exponents.assign(static_cast<std::size_t>(q), -1);
        for (int a = 0; a < q; ++a) {
            if (std::gcd(static_cast<std::int64_t>(a == 0 ? q : a),
                         static_cast<std::int64_t>(q)) != 1)
                continue;
            const auto& e = dlog[static_cast<std::size_t>(a)];
            long acc = 0;
            for (std::size_t m = 0; m < comps.size(); ++m)
                acc += static_cast<long>(jt[m]) * e[m] *
                       (order / comps[m].order);
            chi.exponents[static_cast<std::size_t>(a)] =
                static_cast<int>(acc % order);
        }
        table.characters.push_back(std::move(chi));
        for (std::size_t m = 0; m < comps.size(); ++m) {
            if (++jt[m] < comps[m].order) break;
            jt[m] = 0;
        }
    }
    return table;
}

int c_bias(int q, std::int64_t a) {
    std::int64_t r = a % q;
    if (r < 0) r += q;
    if (std::gcd(r == 0 ? static_cast<std::int64_t>(q) : r,
                 static_cast<std::int64_t>(q)) != 1)
        throw std::domain_error("c_bias: need gcd(q, a) = 1");
    int count = 0;
    for (std::int64_t b = 0; b < q; ++b)
        if (b * b % q == r) ++count;
    return -1 + count;
}

Complex l_function(const Character& chi, Complex s) {
    Complex acc(0.0, 0.0);
    for (int a = 1; a <= chi.q; ++a) {
        Complex c = chi(a);
        if (c == Complex(0.0, 0.0)) continue;
        acc += c * hurwitz_zeta(s, static_cast<double>(a) / chi.q);
    }
    return std::exp(-s * std::log(static_cast<double>(chi.q))) * acc;
}

Complex e_term(double x, const Character& chi, const LZeroSet& zeros, int N) {
    if (N == 0) return Complex(0.0, 0.0);
    if (static_cast<int>(zeros.positive.size()) < N ||
        static_cast<int>(zeros.negative.size()) < N)
        throw std::runtime_error("e_term: zero set holds fewer than N "
                                 "ordinates of each sign");
    double lx = std::log(x);
    Complex acc(0.0, 0.0);
    for (int k = 0; k < N; ++k) {
        double tp = zeros.positive[static_cast<std::size_t>(k)];
        double tn = -zeros.negative[static_cast<std::size_t>(k)];
        acc += std::exp(Complex(0.0, tp * lx)) / Complex(0.5, tp);
        acc += std::exp(Complex(0.0, tn * lx)) / Complex(0.5, tn);
    }
    return acc;
}

double approximate_pi_ap(const APApproxParams& params, double x,
                         const std::map<int, LZeroSet>& catalogs) {
    if (x < 3.0) throw std::domain_error("approximate_pi_ap: need x >= 3");
    CharacterTable table = characters_mod(params.q);
    double phi = table.phi();
    Complex e_sum(-static_cast<double>(c_bias(params.q, params.a)), 0.0);
    for (const auto& chi : table.characters) {
        if (chi.principal) continue;
        auto it = catalogs.find(chi.index);
        if (it == catalogs.end() && params.N > 0)
            throw std::runtime_error(
                "approximate_pi_ap: missing zero set for a character");
        if (it != catalogs.end())
            e_sum -= std::conj(chi(params.a)) *
                     e_term(x, chi, it->second, params.N);
    }
    double base = static_cast<double>(prime_count(x)) / phi;
    return base + e_sum.real() * std::sqrt(x) / (phi * std::log(x)) +
           params.offset;
}

double default_ap_offset(int q, std::int64_t a) {
    if (q == 3 || q == 4) return -0.5;
    if (q == 10) {
        switch (a % 10) {
            case 1: return -0.25;
            case 3: return 0.0;
            case 7: return -0.75;
            case 9: return -1.0;
        }
    }
    return 0.0;
}

std::map<int, LZeroSet> load_l_zero_sets(int q, const std::string& dir) {
    CharacterTable table = characters_mod(q);
    std::map<int, LZeroSet> out;
    for (const auto& chi : table.characters) {
        if (chi.principal) continue;
        std::string base =
            dir + "/L_q" + std::to_string(q) + "_chi" +
            std::to_string(chi.index);
        ZeroCatalog pos = load_zeros(base + ".txt",
                                     CatalogKind::dirichlet(q, chi.index));
        LZeroSet set;
        for (const auto& r : pos.records) set.positive.push_back(r.ordinate);
        if (chi.is_real()) {
            set.negative = set.positive;
        } else {
            ZeroCatalog neg = load_zeros(
                base + "_neg.txt", CatalogKind::dirichlet(q, chi.index));
            for (const auto& r : neg.records)
                set.negative.push_back(r.ordinate);
        }
        out.emplace(chi.index, std::move(set));
    }
    return out;
}

}  // namespace zetasum
