#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "relayarq/special_fn.hpp"

using namespace relayarq;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(n);
    for (int i = 0; i < n; ++i)
        g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return g;
}

} // namespace

TEST_CASE("bessel_k1 reference values") {
    // frozen from the quadrature oracle
    CHECK(bessel_k1(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-13));
    CHECK(bessel_k1(0.1) == doctest::Approx(9.853844780870606).epsilon(1e-13));
    CHECK(2.0 * bessel_k1(2.0) == doctest::Approx(0.27973176363304486).epsilon(1e-13));
}

TEST_CASE("bessel_k1 large-argument asymptotics") {
    double x = 40.0;
    double asym = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) * (1.0 + 3.0 / (8.0 * x));
    CHECK(bessel_k1(x) == doctest::Approx(asym).epsilon(1e-4));
}

TEST_CASE("bessel_k1 agrees with the quadrature oracle") {
    for (double x : log_grid(1e-6, 50.0, 100)) {
        double ref = oracles::k1_quadrature(x);
        CHECK(std::abs(bessel_k1(x) - ref) <= 1e-10 * ref);
    }
}

TEST_CASE("bessel_k1 underflow and domain errors") {
    CHECK(bessel_k1(800.0) == 0.0);
    CHECK_THROWS_AS(bessel_k1(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k1(-1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k1(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(bessel_k1(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("xi_k1_factor reference values") {
    CHECK(xi_k1_factor(0.0) == 1.0);
    CHECK(xi_k1_factor(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-13));
    CHECK(xi_k1_factor(4.0) == doctest::Approx(0.27973176363304486).epsilon(1e-13));
}

TEST_CASE("xi_k1_factor is strictly decreasing with range (0, 1]") {
    double prev = xi_k1_factor(0.0);
    CHECK(prev == 1.0);
    for (double xi : log_grid(1e-12, 1e4, 200)) {
        double v = xi_k1_factor(xi);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("xi_k1_factor matches sqrt(xi)*K1(sqrt(xi)) against the oracle") {
    for (double xi : log_grid(1e-6, 1e3, 40)) {
        double x = std::sqrt(xi);
        double ref = x * oracles::k1_quadrature(x);
        CHECK(xi_k1_factor(xi) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("xi_k1_factor domain errors") {
    CHECK_THROWS_AS(xi_k1_factor(-1e-9), std::domain_error);
    CHECK_THROWS_AS(xi_k1_factor(std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
    CHECK_THROWS_AS(xi_k1_factor(std::numeric_limits<double>::infinity()),
                    std::domain_error);
}
