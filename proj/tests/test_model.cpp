#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tdsts/model.hpp"

using namespace tdsts;

namespace {

const OscillatorParams kUnit{};

StateSpec make_spec(double a_re, double a_im, double r, double phi,
                    std::vector<double> t1 = {}, std::vector<double> t2 = {}) {
    StateSpec s;
    s.alpha = {a_re, a_im};
    s.z = {r, phi};
    s.thermal.input_temps = std::move(t1);
    s.thermal.detector_temps = std::move(t2);
    return s;
}

// kb*T/(hbar*omega) = tau with unit constants
double temp_of_tau(double tau) { return tau; }

}  // namespace

TEST_CASE("thermal_angle special values") {
    CHECK(thermal_angle(0.0, kUnit) == 0.0);

    // beta*hbar*omega = ln 4 makes e^{-beta hw/2} = 1/2
    const double T = 1.0 / std::log(4.0);
    CHECK(thermal_angle(T, kUnit) == doctest::Approx(0.5493061443340549).epsilon(1e-12));

    // beta*hbar*omega = ln 2: cosh(2 theta) = coth(ln2 / 2) = 3
    const double T2 = 1.0 / std::log(2.0);
    const double th = thermal_angle(T2, kUnit);
    CHECK(std::cosh(2.0 * th) == doctest::Approx(3.0).epsilon(1e-13));

    CHECK_THROWS_AS(thermal_angle(-1.0, kUnit), std::domain_error);
    CHECK_THROWS_AS(thermal_angle(std::nan(""), kUnit), std::domain_error);

    CHECK(thermal_angle_tau(0.7) ==
          doctest::Approx(thermal_angle(0.7, kUnit)).epsilon(1e-15));
}

TEST_CASE("thermal_angle respects the physical constants") {
    OscillatorParams o;
    o.m = 2.5;
    o.omega = 3.0;
    o.hbar = 0.7;
    o.kb = 1.9;
    const double tau = 0.8;
    const double T = tau * o.hbar * o.omega / o.kb;
    CHECK(thermal_angle(T, o) == doctest::Approx(thermal_angle_tau(tau)).epsilon(1e-14));
}

TEST_CASE("single-temperature hyperbolic identities") {
    for (double tau : {0.05, 0.2, 0.5, 1.0, 1.7, 3.0}) {
        const double th = thermal_angle_tau(tau);
        const double beta_hw = 1.0 / tau;
        const double c = std::cosh(2.0 * th) - 1.0 / std::tanh(0.5 * beta_hw);
        const double s = std::sinh(2.0 * th) - 1.0 / std::sinh(0.5 * beta_hw);
        CHECK(std::abs(c) / std::cosh(2.0 * th) <= 1e-12);
        CHECK(std::abs(s) / std::sinh(2.0 * th) <= 1e-12);
        // (cosh th + sinh th)^2 = coth(beta hw / 4)
        const double lhs = std::pow(std::cosh(th) + std::sinh(th), 2);
        const double rhs = 1.0 / std::tanh(0.25 * beta_hw);
        CHECK(std::abs(lhs - rhs) / rhs <= 1e-12);
    }
}

TEST_CASE("thermal_angles sums and caches") {
    SUBCASE("all zero") {
        ThermalSpec sp;
        sp.input_temps = {0.0, 0.0};
        const auto a = thermal_angles(sp, kUnit);
        CHECK(a.theta1 == 0.0);
        CHECK(a.theta2 == 0.0);
        CHECK(a.Theta == 0.0);
        CHECK(a.cosh_2Theta == 1.0);
        CHECK(a.detector_coth == 1.0);
    }
    SUBCASE("single input temp with beta hw = ln 2") {
        ThermalSpec sp;
        sp.input_temps = {1.0 / std::log(2.0)};
        const auto a = thermal_angles(sp, kUnit);
        CHECK(a.cosh_2Theta == doctest::Approx(3.0).epsilon(1e-13));
        CHECK(a.detector_coth == 1.0);
    }
    SUBCASE("two input temps add as angles") {
        ThermalSpec sp;
        sp.input_temps = {temp_of_tau(1.0), temp_of_tau(0.5)};
        const auto a = thermal_angles(sp, kUnit);
        const double ta = thermal_angle_tau(1.0);
        const double tb = thermal_angle_tau(0.5);
        CHECK(a.theta1 == doctest::Approx(ta + tb).epsilon(1e-15));
        // hyperbolic addition: cosh 2(ta+tb) = cosh2a cosh2b + sinh2a sinh2b
        const double direct = std::cosh(2.0 * (ta + tb));
        const double added = std::cosh(2.0 * ta) * std::cosh(2.0 * tb) +
                             std::sinh(2.0 * ta) * std::sinh(2.0 * tb);
        CHECK(std::abs(direct - added) / direct <= 1e-13);
        CHECK(a.cosh_2Theta == doctest::Approx(direct).epsilon(1e-13));
    }
    SUBCASE("detector factor is exp(2 theta2)") {
        ThermalSpec sp;
        sp.detector_temps = {temp_of_tau(0.9), temp_of_tau(0.4)};
        const auto a = thermal_angles(sp, kUnit);
        CHECK(a.detector_coth ==
              doctest::Approx(std::exp(2.0 * a.theta2)).epsilon(1e-15));
    }
}

TEST_CASE("displacement polar round trip") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        Displacement d{u(rng), u(rng)};
        CHECK(std::abs(d.mod() * std::cos(d.arg()) - d.re) <= 1e-14 * (1.0 + std::abs(d.re)));
        CHECK(std::abs(d.mod() * std::sin(d.arg()) - d.im) <= 1e-14 * (1.0 + std::abs(d.im)));
    }
}

TEST_CASE("squeeze component round trip and validation") {
    Squeeze z{0.8, 1.1};
    CHECK(z.z().real() == doctest::Approx(0.8 * std::cos(1.1)));
    CHECK(z.z().imag() == doctest::Approx(0.8 * std::sin(1.1)));
    CHECK_THROWS_AS((Squeeze{-0.1, 0.0}.validate()), std::domain_error);
    CHECK_THROWS_AS((Squeeze{0.1, 7.0}.validate()), std::domain_error);
}

TEST_CASE("coefficients limiting cases") {
    SUBCASE("no squeeze") {
        const auto spec = make_spec(0.3, -0.2, 0.0, 0.0);
        const double t = 0.8;
        const auto cf = coefficients(spec, t);
        CHECK(cf.F1 == Complex(1.0, 0.0));
        CHECK(cf.F2 == Complex(1.0, 0.0));
        CHECK(std::abs(cf.B - std::polar(1.0, t)) <= 1e-15);
        CHECK(std::abs(cf.G1 - Complex(1.0, 0.0)) <= 1e-15);
    }
    SUBCASE("t = 0") {
        const auto spec = make_spec(0.5, 0.3, 0.7, std::numbers::pi / 3.0);
        const auto cf = coefficients(spec, 0.0);
        CHECK(cf.B == Complex(1.0, 0.0));
        CHECK(cf.A == Complex(1.0, 0.0));
        CHECK(std::abs(cf.G1 - cf.F2) <= 1e-15);
        CHECK(std::abs(cf.G2 - (cf.F2 * 0.5 + Complex(0.0, 0.3))) <= 1e-15);
    }
}

TEST_CASE("coefficients invariants over random draws") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> ur(0.0, 1.5);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> ut(0.0, 12.0);
    std::uniform_real_distribution<double> ua(-2.0, 2.0);

    for (int i = 0; i < 1000; ++i) {
        const double r = ur(rng);
        const double phi = uphi(rng);
        const auto spec = make_spec(ua(rng), ua(rng), r, phi);
        const double t = ut(rng);
        const auto cf = coefficients(spec, t);

        CHECK(std::abs(std::abs(cf.A) - 1.0) <= 1e-15);

        const double f1sq = std::norm(cf.F1);
        const double expect_f1sq = std::cosh(2.0 * r) + std::sinh(2.0 * r) * std::cos(phi);
        CHECK(std::abs(f1sq - expect_f1sq) / expect_f1sq <= 1e-13);

        CHECK(std::abs(cf.F2.real() - 1.0 / f1sq) <= 1e-13 * std::max(1.0, 1.0 / f1sq));

        const Complex ratio = (std::cosh(r) - std::sinh(r) * std::polar(1.0, phi)) /
                              (std::cosh(r) + std::sinh(r) * std::polar(1.0, phi));
        CHECK(std::abs(cf.F2 - ratio) <= 1e-13 * std::max(1.0, std::abs(cf.F2)));

        const double wt = t;  // omega = 1
        const Complex bg1 = cf.B * cf.G1;
        const Complex bg1_expect = cf.F2 * std::cos(wt) + Complex(0.0, std::sin(wt));
        CHECK(std::abs(bg1 - bg1_expect) <= 1e-14);

        const Complex bg2 = cf.B * cf.G2;
        const Complex bg2_expect = cf.F2 * spec.alpha.re + Complex(0.0, spec.alpha.im);
        CHECK(std::abs(bg2 - bg2_expect) <= 1e-14 * (1.0 + std::abs(bg2_expect)));
    }
}

TEST_CASE("braid_displacement") {
    SUBCASE("identity squeeze") {
        const Displacement a{0.4, -0.9};
        const auto b = braid_displacement(a, Squeeze{0.0, 0.3});
        CHECK(b.re == a.re);
        CHECK(b.im == a.im);
    }
    SUBCASE("real alpha, phi = 0 scales by e^r") {
        const auto b = braid_displacement(Displacement{0.7, 0.0}, Squeeze{0.5, 0.0});
        CHECK(b.re == doctest::Approx(0.7 * std::exp(0.5)).epsilon(1e-14));
        CHECK(b.im == doctest::Approx(0.0));
    }
    SUBCASE("braiding with -z undoes braiding with z") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        std::uniform_real_distribution<double> ur(0.0, 1.2);
        std::uniform_real_distribution<double> uphi(0.0, 2.0 * std::numbers::pi);
        for (int i = 0; i < 300; ++i) {
            const Displacement a{u(rng), u(rng)};
            const Squeeze z{ur(rng), uphi(rng)};
            const auto fwd = braid_displacement(a, z);
            const auto back = braid_displacement(fwd, z.negated());
            CHECK(std::abs(back.re - a.re) <= 1e-12 * (1.0 + std::abs(a.re)));
            CHECK(std::abs(back.im - a.im) <= 1e-12 * (1.0 + std::abs(a.im)));
        }
    }
}

TEST_CASE("validation rejects bad oscillator parameters") {
    OscillatorParams o;
    o.m = -1.0;
    CHECK_THROWS_AS(o.validate(), std::domain_error);
    ThermalSpec sp;
    sp.input_temps = {-0.5};
    CHECK_THROWS_AS(sp.validate(), std::domain_error);
}
