#include "tdsts/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tdsts {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error(std::string(what) + " must be finite and > 0");
}

}  // namespace

void OscillatorParams::validate() const {
    require_finite_positive(m, "oscillator mass m");
    require_finite_positive(omega, "angular frequency omega");
    require_finite_positive(hbar, "hbar");
    require_finite_positive(kb, "kb");
}

double Displacement::mod() const { return std::hypot(re, im); }

double Displacement::arg() const { return std::atan2(im, re); }

Displacement Displacement::polar(double mod, double arg) {
    return {mod * std::cos(arg), mod * std::sin(arg)};
}

void Displacement::validate() const {
    if (!std::isfinite(re) || !std::isfinite(im))
        throw std::domain_error("displacement components must be finite");
}

Squeeze Squeeze::negated() const {
    double p = phi + std::numbers::pi;
    if (p >= kTwoPi) p -= kTwoPi;
    return {r, p};
}

void Squeeze::validate() const {
    if (!std::isfinite(r) || r < 0.0)
        throw std::domain_error("squeeze magnitude r must be finite and >= 0");
    if (!std::isfinite(phi) || phi < 0.0 || phi >= kTwoPi)
        throw std::domain_error("squeeze phase phi must lie in [0, 2pi)");
}

void ThermalSpec::validate() const {
    for (double T : input_temps)
        if (!std::isfinite(T) || T < 0.0)
            throw std::domain_error("input temperature must be finite and >= 0");
    for (double T : detector_temps)
        if (!std::isfinite(T) || T < 0.0)
            throw std::domain_error("detector temperature must be finite and >= 0");
}

void StateSpec::validate() const {
    osc.validate();
    alpha.validate();
    z.validate();
    thermal.validate();
}

ThermalAngles StateSpec::angles() const { return thermal_angles(thermal, osc); }

double thermal_angle(double temperature, const OscillatorParams& osc) {
    osc.validate();
    if (!std::isfinite(temperature) || temperature < 0.0)
        throw std::domain_error("thermal_angle: temperature must be finite and >= 0");
    if (temperature == 0.0) return 0.0;
    const double beta_hw = osc.hbar * osc.omega / (osc.kb * temperature);
    return std::atanh(std::exp(-0.5 * beta_hw));
}

double thermal_angle_tau(double tau) {
    if (!std::isfinite(tau) || tau < 0.0)
        throw std::domain_error("thermal_angle_tau: tau must be finite and >= 0");
    if (tau == 0.0) return 0.0;
    return std::atanh(std::exp(-0.5 / tau));
}

ThermalAngles thermal_angles(const ThermalSpec& spec, const OscillatorParams& osc) {
    spec.validate();
    ThermalAngles out;
    for (double T : spec.input_temps) out.theta1 += thermal_angle(T, osc);
    for (double T : spec.detector_temps) out.theta2 += thermal_angle(T, osc);
    out.Theta = out.theta1 + out.theta2;
    out.cosh_2Theta = std::cosh(2.0 * out.Theta);
    out.detector_coth = std::exp(2.0 * out.theta2);
    return out;
}

Coefficients coefficients(const StateSpec& spec, double t) {
    spec.validate();
    if (!std::isfinite(t)) throw std::domain_error("coefficients: t must be finite");

    const ThermalAngles ang = spec.angles();
    const double r = spec.z.r;
    const double phi = spec.z.phi;
    const double wt = spec.osc.omega * t;
    const double c = std::cos(wt);
    const double s = std::sin(wt);
    const double sinh2r = std::sinh(2.0 * r);

    Coefficients cf;
    cf.F1 = std::cosh(r) + std::sinh(r) * std::polar(1.0, phi);
    cf.F2 = Complex(1.0, -sinh2r * std::sin(phi)) /
            (std::cosh(2.0 * r) + sinh2r * std::cos(phi));
    cf.B = Complex(c, 0.0) + Complex(0.0, 1.0) * cf.F2 * s;
    cf.A = Complex(c, s);
    cf.G1 = (cf.F2 * c + Complex(0.0, s)) / cf.B;
    cf.G2 = (cf.F2 * spec.alpha.re + Complex(0.0, spec.alpha.im)) / cf.B;
    const double damp = std::exp(-ang.theta1);  // cosh(theta1) - sinh(theta1)
    cf.Q = (cf.F2 * (c * spec.alpha.re * spec.alpha.re) +
            cf.F2 * (2.0 * s * spec.alpha.re * spec.alpha.im) +
            Complex(0.0, s * spec.alpha.im * spec.alpha.im)) *
           (damp * damp);
    cf.Theta = ang.Theta;
    return cf;
}

Displacement braid_displacement(const Displacement& alpha, const Squeeze& z) {
    alpha.validate();
    z.validate();
    const Complex a = alpha.value();
    const Complex out =
        a * std::cosh(z.r) + std::conj(a) * std::polar(std::sinh(z.r), z.phi);
    return {out.real(), out.imag()};
}

}  // namespace tdsts
