#include <cmath>

#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"
#include "zetasum/gibbs.hpp"

using namespace zetasum;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("overshoot constant") {
    CHECK(gibbs_constant() ==
          doctest::Approx(0.089489872236703649).epsilon(1e-12));
}

TEST_CASE("square-wave partial sums straddle the jump") {
    CHECK(fourier_square_demo(50, 1.0) == doctest::Approx(0.0).epsilon(0.05));
    CHECK(fourier_square_demo(50, 2.5) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("first peak location and height") {
    auto [x10, y10] = first_peak(10);
    CHECK(x10 == doctest::Approx(1.72788).epsilon(1e-4));
    CHECK(y10 == doctest::Approx(1.08991).epsilon(1e-4));
    auto [x40, y40] = first_peak(40);
    CHECK(x40 == doctest::Approx(1.61007).epsilon(1e-4));
    CHECK(y40 == doctest::Approx(1.08952).epsilon(1e-4));
}

TEST_CASE("peak abscissa approaches pi/2 + pi/(2n)") {
    for (int n : {20, 80, 200}) {
        auto [x, y] = first_peak(n);
        CHECK(x == doctest::Approx(kPi / 2 + kPi / (2.0 * n))
                       .epsilon(1.0 / (n * n * 0.1)));
        (void)y;
    }
}

TEST_CASE("peak height decreases toward the limit 1/2 + 1/pi Si(pi)") {
    double limit = 1.0 + gibbs_constant();  // jump size 1, up-side limit
    double prev = 2.0;
    for (int n : {10, 20, 40, 80}) {
        double y = first_peak(n).second;
        CHECK(y < prev);
        CHECK(y > limit);
        prev = y;
    }
    CHECK(prev - limit < 2e-5);
}

TEST_CASE("overshoot measurement recovers g on the square wave") {
    OvershootReport rep = measure_overshoot_fn(
        [](double x) { return fourier_square_demo(200, x); }, kPi / 2, 1.0,
        0.05, 1e-5);
    CHECK(rep.jump_size == doctest::Approx(1.0));
    CHECK(rep.d == doctest::Approx(gibbs_constant()).epsilon(5e-3));
    CHECK(rep.y_max > 1.08);
    CHECK(rep.y_min < 0.0);
}

TEST_CASE("overshoot of the explicit-formula partial sum at a prime") {
    ZeroCatalog cat = zetasum_test::small_zeta_catalog();
    // 29 zero pairs oscillate slowly: the nearest extrema sit ~0.5 from the
    // jump, so a 0.4 window finds none and a 0.8 window succeeds.
    CHECK_THROWS_AS(
        measure_overshoot(ArithmeticFunctionId::Lambda_vonMangoldt, 17.0, 29,
                          cat, 0.4),
        std::runtime_error);
    OvershootReport rep = measure_overshoot(
        ArithmeticFunctionId::Lambda_vonMangoldt, 17.0, 29, cat, 0.8);
    CHECK(rep.jump_size == doctest::Approx(std::log(17.0)));
    // With only 29 pairs the normalized overshoot is near g but loose.
    CHECK(rep.d == doctest::Approx(gibbs_constant()).epsilon(0.1));
}
