#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hmw/kummer.hpp"

using namespace hmw;

TEST_CASE("series starts at one for every parameter choice") {
    CHECK(kummer_m({-3.0, 2.0, 0.0}) == 1.0);
    CHECK(kummer_m({0.7, 2.0, 0.0}) == 1.0);
    CHECK(kummer_m({0.0, 1.5, 0.0}) == 1.0);
    CHECK(kummer_m({-0.0, 1.5, 2.0}) == 1.0); // negative zero still terminates at n = 0
}

TEST_CASE("first-degree polynomial case") {
    CHECK(kummer_m({-1.0, 2.0, 1.0}) == 0.5);
    for (double b : {0.5, 1.5, 3.0})
        for (double x : {0.1, 0.9, 4.0})
            CHECK(kummer_m({-1.0, b, x}) == doctest::Approx(1.0 - x / b).epsilon(1e-15));
}

TEST_CASE("second-degree polynomial case") {
    for (double b : {0.5, 1.25, 2.0})
        for (double x : {0.3, 1.7, 6.0}) {
            const double expect = 1.0 - 2.0 * x / b + x * x / (b * (b + 1.0));
            CHECK(kummer_m({-2.0, b, x}) == doctest::Approx(expect).epsilon(1e-13));
        }
}

TEST_CASE("equal parameters reduce to the exponential") {
    CHECK(kummer_m({1.0, 1.0, 1.0}) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    for (double x : {0.5, 2.0, 10.0, 30.0})
        CHECK(kummer_m({2.5, 2.5, x}) == doctest::Approx(std::exp(x)).epsilon(1e-13));
}

TEST_CASE("contiguous derivative relation holds for terminating profiles") {
    // d/dx M(-n, b, x) = (-n/b) M(-n+1, b+1, x), checked by central differences
    const double h = 1e-5;
    for (int n : {1, 2, 4})
        for (double b : {1.0, 2.5})
            for (double x : {0.4, 1.3, 3.1}) {
                const double a = -static_cast<double>(n);
                const double fd =
                    (kummer_m({a, b, x + h}) - kummer_m({a, b, x - h})) / (2.0 * h);
                const double closed = (a / b) * kummer_m({a + 1.0, b + 1.0, x});
                CHECK(fd == doctest::Approx(closed).epsilon(1e-8));
            }
}

TEST_CASE("non-positive integer second parameter is rejected") {
    CHECK_THROWS_AS(kummer_m({0.5, 0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(kummer_m({0.5, -1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(kummer_m({-2.0, -3.0, 1.0}), std::domain_error);
    CHECK_NOTHROW(kummer_m({0.5, -0.5, 1.0})); // non-integer negatives are fine
}

TEST_CASE("negative argument is rejected") {
    CHECK_THROWS_AS(kummer_m({-1.0, 2.0, -0.5}), std::invalid_argument);
}

TEST_CASE("divergence is reported instead of returned") {
    CHECK_THROWS_AS(kummer_m({0.5, 1.5, 1e5}), std::runtime_error);
}
