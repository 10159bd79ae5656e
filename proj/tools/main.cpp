// Command-line surface: tabulate exact summatory oracles, run
// explicit-formula approximations and contour experiments, validate zero
// tables, and emit plot-ready CSV/JSON data.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetasum/arith.hpp"
#include "zetasum/constants.hpp"
#include "zetasum/dirichlet.hpp"
#include "zetasum/formulas.hpp"
#include "zetasum/gibbs.hpp"
#include "zetasum/perron.hpp"
#include "zetasum/rvm.hpp"
#include "zetasum/zero_catalog.hpp"
#include "zetasum/zeta.hpp"

using json = nlohmann::json;
using namespace zetasum;

namespace {

struct XRange {
    double lo = 0, hi = 0, step = 1;
};

XRange parse_range(const std::string& s) {
    XRange r;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &r.lo, &r.hi, &r.step) == 3) {
        if (r.step <= 0 || r.hi < r.lo)
            throw CLI::ValidationError("--x", "bad range " + s);
        return r;
    }
    if (std::sscanf(s.c_str(), "%lf", &r.lo) == 1) {
        r.hi = r.lo;
        r.step = 1;
        return r;
    }
    throw CLI::ValidationError("--x", "expected lo:hi:step or a single x");
}

std::vector<double> grid(const XRange& r) {
    std::vector<double> xs;
    for (double x = r.lo; x <= r.hi + 1e-12; x += r.step) xs.push_back(x);
    return xs;
}

struct Record {
    double x, exact, midpoint, smooth, zero_sum, real_zero_sum, total;
};

void emit_records(const std::vector<Record>& recs, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : recs)
            arr.push_back({{"x", r.x},
                           {"exact", r.exact},
                           {"midpoint", r.midpoint},
                           {"smooth", r.smooth},
                           {"zero_sum", r.zero_sum},
                           {"real_zero_sum", r.real_zero_sum},
                           {"total", r.total}});
        std::printf("%s\n", arr.dump(2).c_str());
        return;
    }
    std::printf("x,exact,midpoint,smooth,zero_sum,real_zero_sum,total\n");
    for (const auto& r : recs)
        std::printf("%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", r.x,
                    r.exact, r.midpoint, r.smooth, r.zero_sum,
                    r.real_zero_sum, r.total);
}

ZeroCatalog load_zeta_catalog(const std::string& dir) {
    return load_zeros(dir + "/zeta_zeros_2000.txt", CatalogKind::zeta());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"summatory-function reconstruction from zeta and L zeros"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string zero_dir = default_zero_dir();
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--zeros", zero_dir, "zero-table directory");

    std::string id_name = "psi", x_spec = "10";
    int N = 0, M = 0, n_terms = 10, q = 3, count = 100;
    std::int64_t a_res = 1;
    double c_abs = 2.0, a_left = -1.0, T = 100.0, tol = 1e-6;
    std::optional<double> offset;

    auto* tab = app.add_subcommand("tabulate", "exact summatory oracle");
    tab->add_option("--id", id_name)->required();
    tab->add_option("--x", x_spec)->required();

    auto* approx = app.add_subcommand("approx", "explicit-formula approximation");
    approx->add_option("--id", id_name)->required();
    approx->add_option("--x", x_spec)->required();
    approx->add_option("--N", N, "pairs of complex zeros");
    approx->add_option("--M", M, "real zeros");

    auto* rvmc = app.add_subcommand("rvm", "pi_0(x) from zeta zeros");
    rvmc->add_option("--x", x_spec)->required();
    rvmc->add_option("--N", N, "pairs of zeros");

    auto* per = app.add_subcommand("perron", "vertical line integral");
    per->add_option("--id", id_name)->required();
    per->add_option("--x", x_spec)->required();
    per->add_option("--c", c_abs);
    per->add_option("--T", T);

    auto* rect = app.add_subcommand("rectangle", "rectangle contour integral");
    rect->add_option("--id", id_name)->required();
    rect->add_option("--x", x_spec)->required();
    rect->add_option("--c", c_abs);
    rect->add_option("--a", a_left);
    rect->add_option("--T", T);

    auto* gib = app.add_subcommand("gibbs", "Gibbs constant and square-wave peaks");
    gib->add_option("--n", n_terms, "Fourier terms");

    auto* coef = app.add_subcommand("coeffs", "smooth coefficients and real-zero terms");
    coef->add_option("--id", id_name)->required();

    auto* vz = app.add_subcommand("validate-zeros", "check |f(1/2+it)| small");
    vz->add_option("--file", x_spec, "zero table path")->required();
    vz->add_option("--q", q, "Dirichlet modulus (0 = zeta)")->default_val(0);
    vz->add_option("--chi", count, "character index")->default_val(1);
    vz->add_option("--tol", tol);

    auto* ap = app.add_subcommand("ap", "primes in arithmetic progression");
    ap->add_option("--q", q)->required();
    ap->add_option("--a", a_res)->required();
    ap->add_option("--x", x_spec)->required();
    ap->add_option("--N", N, "zeros per sign per character");
    ap->add_option("--offset", offset, "empirical offset (default: built-in)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*tab) {
            auto id = parse_function_id(id_name);
            std::vector<Record> recs;
            for (double x : grid(parse_range(x_spec))) {
                double ex = summatory_exact(id, x);
                recs.push_back({x, ex, summatory_midpoint(id, x), 0, 0, 0, ex});
            }
            emit_records(recs, format);
        } else if (*approx) {
            auto id = parse_function_id(id_name);
            ZeroCatalog cat = load_zeta_catalog(zero_dir);
            ZeroTermEvaluator ev(id, cat, N);
            std::vector<Record> recs;
            for (double x : grid(parse_range(x_spec))) {
                ApproximationResult r = approximate(id, x, ev, M);
                recs.push_back({x, summatory_exact(id, x),
                                summatory_midpoint(id, x), r.smooth,
                                r.zero_sum, r.real_zero_sum, r.total});
            }
            emit_records(recs, format);
        } else if (*rvmc) {
            ZeroCatalog cat = load_zeta_catalog(zero_dir);
            std::vector<Record> recs;
            for (double x : grid(parse_range(x_spec))) {
                double base = rvm_f(x, 0, cat);  // outer n=1, N=0 part
                double v = rvm_pi(x, N, cat);
                recs.push_back({x, static_cast<double>(prime_count(x)),
                                prime_count_midpoint(x), base, v - base, 0,
                                v});
            }
            emit_records(recs, format);
        } else if (*per) {
            auto id = parse_function_id(id_name);
            double x = parse_range(x_spec).lo;
            LineEstimate e = integrate_line(id, x, c_abs, T);
            json out = {{"id", id_name},       {"x", x},
                        {"c", c_abs},          {"T", T},
                        {"re", e.value.real()}, {"im", e.value.imag()},
                        {"error", e.error},    {"converged", e.converged}};
            std::printf("%s\n", out.dump(2).c_str());
        } else if (*rect) {
            auto id = parse_function_id(id_name);
            double x = parse_range(x_spec).lo;
            SideIntegrals s = integrate_rectangle(id, x, {c_abs, a_left, T});
            json out = {
                {"id", id_name},
                {"x", x},
                {"c", c_abs},
                {"a", a_left},
                {"T", s.T_used},
                {"nudged", s.nudged},
                {"I1", {s.I1.real(), s.I1.imag()}},
                {"I2", {s.I2.real(), s.I2.imag()}},
                {"I3", {s.I3.real(), s.I3.imag()}},
                {"I4", {s.I4.real(), s.I4.imag()}},
                {"total", {s.total.real(), s.total.imag()}},
                {"error", s.error}};
            std::printf("%s\n", out.dump(2).c_str());
        } else if (*gib) {
            auto [px, py] = first_peak(n_terms);
            json out = {{"gibbs_constant", gibbs_constant()},
                        {"n", n_terms},
                        {"first_peak_x", px},
                        {"first_peak_y", py}};
            std::printf("%s\n", out.dump(2).c_str());
        } else if (*coef) {
            auto id = parse_function_id(id_name);
            json terms = json::array();
            for (const auto& t : smooth_terms(id))
                terms.push_back({{"coefficient", t.coefficient},
                                 {"x_exponent", t.x_exponent},
                                 {"log_power", t.log_power},
                                 {"site", t.site}});
            json rz = json::array();
            for (int k = 1; k <= 5; ++k)
                rz.push_back(real_zero_term(id, k, 1.0));
            const auto& d = descriptor(id);
            json out = {{"id", id_name},
                        {"c_min", d.c_min},
                        {"smooth_terms", terms},
                        {"real_zero_coefficients", rz}};
            std::printf("%s\n", out.dump(2).c_str());
        } else if (*vz) {
            CatalogKind kind = q == 0 ? CatalogKind::zeta()
                                      : CatalogKind::dirichlet(q, count);
            ZeroCatalog cat = load_zeros(x_spec, kind);
            ValidationReport rep;
            if (q == 0) {
                rep = validate(cat, tol);
            } else {
                CharacterTable tbl = characters_mod(q);
                const Character& chi =
                    tbl.characters.at(static_cast<std::size_t>(count));
                rep = validate(cat, tol, [&](std::complex<double> s) {
                    return l_function(chi, s);
                });
            }
            json fails = json::array();
            for (const auto& f : rep.failures)
                fails.push_back({{"index", f.index},
                                 {"ordinate", f.ordinate},
                                 {"magnitude", f.magnitude}});
            json out = {{"file", x_spec},
                        {"checked", rep.checked},
                        {"passed", rep.passed()},
                        {"failures", fails}};
            std::printf("%s\n", out.dump(2).c_str());
            return rep.passed() ? 0 : 1;
        } else if (*ap) {
            auto sets = load_l_zero_sets(q, zero_dir);
            APApproxParams params{q, a_res, N,
                                  offset ? *offset
                                         : default_ap_offset(q, a_res)};
            std::vector<Record> recs;
            for (double x : grid(parse_range(x_spec))) {
                double ex =
                    static_cast<double>(prime_count_in_ap(x, q, a_res));
                double v = approximate_pi_ap(params, x, sets);
                recs.push_back({x, ex, ex, 0, 0, 0, v});
            }
            emit_records(recs, format);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
