#include "tdsts/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tdsts {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::domain_error(std::string(what) + " must be finite");
}

// cosh(2r) + sinh(2r)*cos(arg) and cosh(2r) - sinh(2r)*cos(arg) without
// cancellation at the squeezed minimum: cosh(2r) -+ sinh(2r) = e^{-+2r}.
double breathing_plus(double r, double arg) {
    return std::exp(-2.0 * r) + std::sinh(2.0 * r) * (1.0 + std::cos(arg));
}

double breathing_minus(double r, double arg) {
    return std::exp(-2.0 * r) + std::sinh(2.0 * r) * (1.0 - std::cos(arg));
}

double gaussian_pdf(double u, double mean, double var) {
    const double d = u - mean;
    return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * kPi * var);
}

}  // namespace

Complex wavefunction(const StateSpec& spec, double x, double x_tilde, double t) {
    require_finite(x, "x");
    require_finite(x_tilde, "x_tilde");
    const ThermalAngles ang = spec.angles();
    const Coefficients cf = coefficients(spec, t);

    const double k = spec.osc.m * spec.osc.omega / spec.osc.hbar;
    const double ch = std::cosh(ang.Theta);
    const double sh = std::sinh(ang.Theta);
    const double xi = x * ch - x_tilde * sh;
    const double xit = x_tilde * ch - x * sh;
    const double damp = std::exp(-ang.theta1);
    const double lin = 2.0 * std::sqrt(0.5 * k) * damp;

    const Complex expo = -cf.Q / cf.B - std::conj(cf.Q) / std::conj(cf.B) -
                         (0.5 * k) * cf.G1 * (xi * xi) + lin * cf.G2 * xi -
                         (0.5 * k) * std::conj(cf.G1) * (xit * xit) +
                         lin * std::conj(cf.G2) * xit;
    const double pref = std::sqrt(k / kPi) / std::abs(cf.F1 * cf.B);
    return pref * std::exp(expo);
}

Complex rho_position(const StateSpec& spec, double x_prime, double x, double t) {
    require_finite(x_prime, "x_prime");
    require_finite(x, "x");
    const ThermalAngles ang = spec.angles();
    const Coefficients cf = coefficients(spec, t);

    const double k = spec.osc.m * spec.osc.omega / spec.osc.hbar;
    const double f1b2 = std::norm(cf.F1 * cf.B);
    const double c2T = ang.cosh_2Theta;
    const double coth4 = ang.detector_coth;
    const double sqrt_coth4 = std::sqrt(coth4);

    const Complex g2d = cf.G2 - std::conj(cf.G2);  // 2i Im G2
    // alpha/A + conj(alpha)/conj(A) = 2|alpha| cos(wt - gamma)
    const double drift = 2.0 * spec.alpha.mod() *
                         std::cos(spec.osc.omega * t - spec.alpha.arg());
    const double sum_shift = std::sqrt(2.0 / k) * sqrt_coth4 * drift;
    const Complex diff_shift = std::sqrt(2.0 / k) * (f1b2 / c2T) * sqrt_coth4 * g2d;

    const double su = x + x_prime - sum_shift;
    const Complex du = Complex(x - x_prime, 0.0) - diff_shift;

    const Complex expo = (f1b2 / (2.0 * c2T)) * coth4 * (g2d * g2d) -
                         (0.25 * k) * (su * su) / (f1b2 * c2T) -
                         (0.25 * k) * (c2T / f1b2) * (du * du) -
                         (0.25 * k) * (cf.G1 - std::conj(cf.G1)) *
                             (x * x - x_prime * x_prime);
    const double pref =
        std::sqrt(k / kPi) / (std::abs(cf.F1 * cf.B) * std::sqrt(c2T));
    return pref * std::exp(expo);
}

Complex dsts_rho_position(const StateSpec& spec, double x_prime, double x) {
    require_finite(x_prime, "x_prime");
    require_finite(x, "x");
    const ThermalAngles ang = spec.angles();
    if (ang.theta2 != 0.0)
        throw std::domain_error("dsts_rho_position requires zero detector temperature");
    const Coefficients cf = coefficients(spec, 0.0);

    const double k = spec.osc.m * spec.osc.omega / spec.osc.hbar;
    const double f1sq = std::norm(cf.F1);
    const double c2t1 = std::cosh(2.0 * ang.theta1);
    const Complex f2d = cf.F2 - std::conj(cf.F2);
    const Complex d = f2d * spec.alpha.re + Complex(0.0, 2.0 * spec.alpha.im);

    const double su = x + x_prime - std::sqrt(2.0 / k) * 2.0 * spec.alpha.re;
    const Complex du = Complex(x - x_prime, 0.0) - std::sqrt(2.0 / k) * (f1sq / c2t1) * d;

    const Complex expo = (f1sq / (2.0 * c2t1)) * (d * d) -
                         (0.25 * k) * (su * su) / (f1sq * c2t1) -
                         (0.25 * k) * f2d * (x * x - x_prime * x_prime) -
                         (0.25 * k) * (c2t1 / f1sq) * (du * du);
    const double pref = std::sqrt(k / kPi) / (std::abs(cf.F1) * std::sqrt(c2t1));
    return pref * std::exp(expo);
}

double prob_x(const StateSpec& spec, double x, double t) {
    require_finite(x, "x");
    const XPMoments m = xp_moments(spec, t);
    return gaussian_pdf(x, m.mean_x, m.var_x);
}

double prob_p(const StateSpec& spec, double p, double t) {
    require_finite(p, "p");
    const XPMoments m = xp_moments(spec, t);
    return gaussian_pdf(p, m.mean_p, m.var_p);
}

XPMoments xp_moments(const StateSpec& spec, double t) {
    spec.validate();
    require_finite(t, "t");
    const ThermalAngles ang = spec.angles();
    const auto& o = spec.osc;
    const double wt = o.omega * t;
    const double amod = spec.alpha.mod();
    const double gamma = spec.alpha.arg();
    const double amp = std::sqrt(ang.detector_coth);

    XPMoments out;
    out.t = t;
    out.mean_x = std::sqrt(2.0 * o.hbar / (o.m * o.omega)) * amp * amod *
                 std::cos(wt - gamma);
    out.mean_p = -std::sqrt(2.0 * o.m * o.hbar * o.omega) * amp * amod *
                 std::sin(wt - gamma);
    const double arg = 2.0 * wt - spec.z.phi;
    out.var_x = 0.5 * o.hbar / (o.m * o.omega) * breathing_plus(spec.z.r, arg) *
                ang.cosh_2Theta;
    out.var_p = 0.5 * o.m * o.hbar * o.omega * breathing_minus(spec.z.r, arg) *
                ang.cosh_2Theta;
    return out;
}

double uncertainty_product(const StateSpec& spec, double t) {
    spec.validate();
    require_finite(t, "t");
    const ThermalAngles ang = spec.angles();
    const double s2r = std::sinh(2.0 * spec.z.r);
    const double sn = std::sin(2.0 * spec.osc.omega * t - spec.z.phi);
    // cosh^2(2r) - sinh^2(2r) cos^2 = 1 + sinh^2(2r) sin^2, exact at the minimum
    return 0.5 * spec.osc.hbar * ang.cosh_2Theta *
           std::sqrt(1.0 + s2r * s2r * sn * sn);
}

double entropy_sum(const StateSpec& spec, double t) {
    spec.validate();
    require_finite(t, "t");
    const ThermalAngles ang = spec.angles();
    const double s2r = std::sinh(2.0 * spec.z.r);
    const double sn = std::sin(2.0 * spec.osc.omega * t - spec.z.phi);
    return 1.0 + std::log(kPi * spec.osc.hbar) + std::log(ang.cosh_2Theta) +
           0.5 * std::log1p(s2r * s2r * sn * sn);
}

QuadratureVariances quadrature_variances(const StateSpec& spec, double t,
                                         double varphi) {
    spec.validate();
    require_finite(t, "t");
    require_finite(varphi, "varphi");
    const ThermalAngles ang = spec.angles();
    const double arg = 2.0 * spec.osc.omega * t + 2.0 * varphi - spec.z.phi;
    QuadratureVariances out;
    out.dy1_sq = 0.25 * ang.cosh_2Theta * breathing_plus(spec.z.r, arg);
    out.dy2_sq = 0.25 * ang.cosh_2Theta * breathing_minus(spec.z.r, arg);
    return out;
}

double mgf(const StateSpec& spec, Observable which, double lambda, double t) {
    require_finite(lambda, "lambda");
    const XPMoments m = xp_moments(spec, t);
    const double mean = (which == Observable::position) ? m.mean_x : m.mean_p;
    const double var = (which == Observable::position) ? m.var_x : m.var_p;
    return std::exp(lambda * mean + 0.5 * lambda * lambda * var);
}

double nth_moment(const StateSpec& spec, Observable which, int n, double t) {
    if (n < 0) throw std::domain_error("nth_moment: n must be >= 0");
    const XPMoments m = xp_moments(spec, t);
    const double mean = (which == Observable::position) ? m.mean_x : m.mean_p;
    const double var = (which == Observable::position) ? m.var_x : m.var_p;
    // <u^n> = mean*<u^{n-1}> + (n-1)*var*<u^{n-2}>
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = mean;
    for (int k = 2; k <= n; ++k) {
        const double next = mean * cur + (k - 1) * var * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

PhotonStats photon_stats(const StateSpec& spec) {
    spec.validate();
    const ThermalAngles ang = spec.angles();
    const double c2T = ang.cosh_2Theta;
    const double coth4 = ang.detector_coth;
    const double r = spec.z.r;
    const double c2r = std::cosh(2.0 * r);
    const double s2r = std::sinh(2.0 * r);
    const double a2 = spec.alpha.re * spec.alpha.re + spec.alpha.im * spec.alpha.im;
    const double cosd = std::cos(spec.z.phi - 2.0 * spec.alpha.arg());

    PhotonStats out;
    out.mean_n = 0.5 * (c2T * c2r - 1.0) + coth4 * a2;
    out.var_n = 0.25 * (c2T * c2T * std::cosh(4.0 * r) - 1.0) +
                c2T * coth4 * a2 * (c2r + s2r * cosd);
    if (out.mean_n == 0.0) {
        out.g2 = std::nullopt;
    } else {
        const double num = 0.25 * c2T * c2T * s2r * s2r - coth4 * coth4 * a2 * a2 +
                           c2T * coth4 * a2 * s2r * cosd;
        out.g2 = 2.0 + num / (out.mean_n * out.mean_n);
    }
    return out;
}

}  // namespace tdsts
