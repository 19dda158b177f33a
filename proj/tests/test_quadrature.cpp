#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tdsts/oracle.hpp"

using tdsts::oracle::IntegrationError;
using tdsts::oracle::quad_integrate;

namespace {

double unit_gaussian(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

TEST_CASE("unit gaussian normalizes") {
    const double v = quad_integrate(unit_gaussian, 0.0, 1.0, 10.0, 2001);
    CHECK(std::abs(v - 1.0) <= 1e-12);
}

TEST_CASE("second moment of the unit gaussian") {
    const double v = quad_integrate([](double x) { return x * x * unit_gaussian(x); },
                                    0.0, 1.0, 10.0, 2001);
    CHECK(std::abs(v - 1.0) <= 1e-10);
}

TEST_CASE("entropy of the unit gaussian") {
    const double v = quad_integrate(
        [](double x) {
            const double p = unit_gaussian(x);
            return p > 0.0 ? -p * std::log(p) : 0.0;
        },
        0.0, 1.0, 10.0, 2001);
    const double expected = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e);
    CHECK(std::abs(v - expected) <= 1e-8);
    CHECK(expected == doctest::Approx(1.4189385332046727));
}

TEST_CASE("offset and scaled gaussian") {
    const double mu = -3.2, sigma = 0.4;
    const double v = quad_integrate(
        [=](double x) {
            const double d = (x - mu) / sigma;
            return std::exp(-0.5 * d * d) / (sigma * std::sqrt(2.0 * std::numbers::pi));
        },
        mu, sigma, 10.0, 1001);
    CHECK(std::abs(v - 1.0) <= 1e-12);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(quad_integrate(unit_gaussian, 0.0, 1.0, 10.0, 100), IntegrationError);
    CHECK_THROWS_AS(quad_integrate(unit_gaussian, 0.0, 1.0, 10.0, 102), IntegrationError);
    CHECK_THROWS_AS(quad_integrate(unit_gaussian, 0.0, 1.0, 4.0, 2001), IntegrationError);
    CHECK_THROWS_AS(quad_integrate(unit_gaussian, 0.0, -1.0, 10.0, 2001), IntegrationError);
    CHECK_THROWS_AS(quad_integrate([](double) { return std::nan(""); }, 0.0, 1.0, 10.0, 101),
                    IntegrationError);
}
