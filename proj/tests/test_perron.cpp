#include <cmath>
#include <complex>

#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"
#include "zetasum/perron.hpp"

using namespace zetasum;
using Id = ArithmeticFunctionId;

TEST_CASE("integrand fixtures and pole guards") {
    // F(s) x^s / s for the Moebius function at s = 2, x = 1: 1/(2 zeta(2))
    double pi2 = 3.14159265358979323846 * 3.14159265358979323846;
    Complex v = integrand(Id::Mu, Complex(2, 0), 1.0);
    CHECK(std::abs(v - Complex(3.0 / pi2, 0)) < 1e-13);

    CHECK_THROWS_AS(integrand(Id::Lambda_vonMangoldt, Complex(1.0, 1e-9), 10.0),
                    std::domain_error);
    CHECK_THROWS_AS(integrand(Id::Mu, Complex(0.0, 1e-8), 10.0),
                    std::domain_error);
    // zeta zero under a negative exponent
    Complex rho(0.5, zetasum_test::first_zeta_ordinates()[0]);
    CHECK_THROWS_AS(integrand(Id::Mu, rho, 10.0), std::domain_error);
}

TEST_CASE("vertical line estimate for the Chebyshev function") {
    LineEstimate est = integrate_line(Id::Lambda_vonMangoldt, 10.0, 2.0, 14.0);
    CHECK(est.converged);
    CHECK(est.value.real() == doctest::Approx(8.304).epsilon(6e-4));
    CHECK(std::abs(est.value.imag()) < 1e-8);
}

TEST_CASE("line integration requires c above the convergence abscissa") {
    CHECK_THROWS_AS(integrate_line(Id::Lambda_vonMangoldt, 10.0, 0.5, 5.0),
                    std::invalid_argument);
}

TEST_CASE("rectangle sides for the Chebyshev function, T = 14") {
    SideIntegrals s = integrate_rectangle(Id::Lambda_vonMangoldt, 10.0,
                                          {2.0, -1.0, 14.0});
    CHECK(s.total.real() == doctest::Approx(8.162).epsilon(7e-4));
    CHECK(std::abs(s.total.imag()) < 1e-6);
    CHECK(s.I1.real() == doctest::Approx(8.304).epsilon(7e-4));
    CHECK(s.I2.real() == doctest::Approx(-0.069).epsilon(0.05));
    CHECK(s.I2.imag() == doctest::Approx(-0.305).epsilon(0.02));
    CHECK(s.I3.real() == doctest::Approx(-0.004).epsilon(0.3));
    // bottom side is the conjugate-reversed top side
    CHECK(std::abs(s.I4 - std::conj(s.I2)) < 1e-8);
}

TEST_CASE("rectangle totals stabilize once a zero pair is enclosed") {
    SideIntegrals t15 = integrate_rectangle(Id::Lambda_vonMangoldt, 10.0,
                                            {2.0, -1.0, 15.0});
    SideIntegrals t20 = integrate_rectangle(Id::Lambda_vonMangoldt, 10.0,
                                            {2.0, -1.0, 20.0});
    CHECK(t15.total.real() == doctest::Approx(7.751).epsilon(7e-4));
    CHECK(std::abs(t15.total.real() - t20.total.real()) < 1e-3);
}

TEST_CASE("boundary-grazing heights are nudged") {
    // t_1 = 14.1347...: ask for T right on top of it
    SideIntegrals s = integrate_rectangle(
        Id::Lambda_vonMangoldt, 10.0,
        {2.0, -1.0, zetasum_test::first_zeta_ordinates()[0]});
    CHECK(s.nudged);
    CHECK(s.T_used > zetasum_test::first_zeta_ordinates()[0]);
}

TEST_CASE("rectangle with no enclosed poles integrates to zero") {
    SideIntegrals s = integrate_rectangle(Id::Mu, 10.0, {2.0, 1.5, 10.0});
    CHECK(std::abs(s.total) < 1e-7);
}

TEST_CASE("residue enumeration matches the numeric rectangle") {
    ZeroCatalog cat = zetasum_test::small_zeta_catalog();
    ResidueComparison cmp = residue_vs_rectangle(Id::Lambda_vonMangoldt, 10.0,
                                                 {2.0, -1.0, 20.0}, cat);
    CHECK(cmp.discrepancy < 1e-5);
    // x and -log 2pi; one zero pair (t_1 < 20 < t_2); no trivial zeros
    int smooth = 0, pairs = 0, trivial = 0;
    for (const auto& p : cmp.poles) {
        if (p.kind == "smooth") ++smooth;
        if (p.kind == "zero-pair") ++pairs;
        if (p.kind == "real-zero") ++trivial;
    }
    CHECK(smooth == 2);
    CHECK(pairs == 1);
    CHECK(trivial == 0);  // -2 is outside a = -1
}

TEST_CASE("residue enumeration picks up trivial zeros") {
    ZeroCatalog cat = zetasum_test::small_zeta_catalog();
    ResidueComparison cmp = residue_vs_rectangle(Id::Lambda_vonMangoldt, 10.0,
                                                 {2.0, -3.0, 20.0}, cat);
    int trivial = 0;
    for (const auto& p : cmp.poles)
        if (p.kind == "real-zero") ++trivial;
    CHECK(trivial == 1);
    CHECK(cmp.discrepancy < 1e-5);
}

TEST_CASE("T profile matches independent line estimates") {
    std::vector<double> grid = {5.0, 14.0};
    auto prof = integral_vs_T_profile(Id::Lambda_vonMangoldt, 10.0, 2.0, grid);
    REQUIRE(prof.size() == 2);
    LineEstimate a = integrate_line(Id::Lambda_vonMangoldt, 10.0, 2.0, 5.0);
    LineEstimate b = integrate_line(Id::Lambda_vonMangoldt, 10.0, 2.0, 14.0);
    CHECK(prof[0] == doctest::Approx(a.value.real()).epsilon(1e-8));
    CHECK(prof[1] == doctest::Approx(b.value.real()).epsilon(1e-8));
}
